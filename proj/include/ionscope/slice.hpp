#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "ionscope/chain.hpp"

namespace ionscope {

struct AnglePair {
  double phi1;
  double phi2;
};

/// A one-parameter family of detector-angle pairs (or a full 2-D grid) used
/// to cut correlation patterns out of the (phi1, phi2) plane.
///
/// The off-diagonal slices place the two detectors on opposite sides of the
/// chain normal: OppositeScan pairs phi with -phi, and OffsetMagnitude(c)
/// enforces |phi1| - |phi2| = c with sign(phi2) = -sign(phi1). A same-side
/// reading of the equal-angle scan would pin sin(phi1) - sin(phi2) to zero
/// and produce only constants.
struct SliceSpec {
  enum class Kind {
    Grid2D,           // full (phi1, phi2) grid, points x points
    FixedSecond,      // phi2 held constant, phi1 scanned
    OppositeScan,     // phi2 = -phi1
    OffsetMagnitude,  // |phi1| - |phi2| = offset, detectors on opposite sides
    FixedSinDelta,    // sin(phi1) - sin(phi2) = delta
  };

  Kind kind = Kind::FixedSecond;
  double phi_min = -half_pi;
  double phi_max = half_pi;
  int points = 1001;   // per axis for Grid2D
  double phi2 = 0.0;   // FixedSecond only
  double offset = 0.0; // OffsetMagnitude only
  double delta = 0.0;  // FixedSinDelta only

  static SliceSpec grid2d(double phi_min = -half_pi, double phi_max = half_pi,
                          int points = 201);
  static SliceSpec fixed_second(double phi2, double phi_min = -half_pi,
                                double phi_max = half_pi, int points = 1001);
  static SliceSpec opposite_scan(double phi_min = -half_pi,
                                 double phi_max = half_pi, int points = 1001);
  static SliceSpec offset_magnitude(double offset, double phi_min = -half_pi,
                                    double phi_max = half_pi, int points = 1001);
  static SliceSpec fixed_sin_delta(double delta, double phi_min = -half_pi,
                                   double phi_max = half_pi, int points = 1001);

  bool is_grid() const { return kind == Kind::Grid2D; }

  /// Throws std::invalid_argument when a range leaves [-pi/2, pi/2],
  /// points < 2, or |delta| > 2.
  void validate() const;
};

/// A slice materialized to concrete detector-angle pairs.
///
/// `deltas` holds sin(phi1) - sin(phi2) per point. For FixedSinDelta it is
/// the defining constant itself rather than a value recomputed from the
/// angles, so quantities that depend on the angles only through the sine
/// difference are exactly constant along the slice.
struct ResolvedSlice {
  Eigen::ArrayXd axis;            // scan values (phi1), or the shared grid axis
  std::vector<AnglePair> points;  // row-major (phi1 outer) for Grid2D
  Eigen::ArrayXd deltas;          // sin(phi1) - sin(phi2) per point
  bool grid = false;

  std::size_t size() const { return points.size(); }
};

/// Materializes the slice. Grid points whose partner angle would leave
/// [-pi/2, pi/2] (OffsetMagnitude) or has no valid arcsine (FixedSinDelta)
/// are dropped; an empty result throws degenerate_error.
ResolvedSlice resolve_slice(const SliceSpec& slice);

}  // namespace ionscope
