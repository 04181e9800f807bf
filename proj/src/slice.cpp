#include "ionscope/slice.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ionscope/errors.hpp"

namespace ionscope {

namespace {

SliceSpec make(SliceSpec::Kind kind, double phi_min, double phi_max,
               int points) {
  SliceSpec s;
  s.kind = kind;
  s.phi_min = phi_min;
  s.phi_max = phi_max;
  s.points = points;
  return s;
}

}  // namespace

SliceSpec SliceSpec::grid2d(double phi_min, double phi_max, int points) {
  return make(Kind::Grid2D, phi_min, phi_max, points);
}

SliceSpec SliceSpec::fixed_second(double phi2, double phi_min, double phi_max,
                                  int points) {
  SliceSpec s = make(Kind::FixedSecond, phi_min, phi_max, points);
  s.phi2 = phi2;
  return s;
}

SliceSpec SliceSpec::opposite_scan(double phi_min, double phi_max,
                                   int points) {
  return make(Kind::OppositeScan, phi_min, phi_max, points);
}

SliceSpec SliceSpec::offset_magnitude(double offset, double phi_min,
                                      double phi_max, int points) {
  SliceSpec s = make(Kind::OffsetMagnitude, phi_min, phi_max, points);
  s.offset = offset;
  return s;
}

SliceSpec SliceSpec::fixed_sin_delta(double delta, double phi_min,
                                     double phi_max, int points) {
  SliceSpec s = make(Kind::FixedSinDelta, phi_min, phi_max, points);
  s.delta = delta;
  return s;
}

void SliceSpec::validate() const {
  if (!(phi_min < phi_max)) {
    throw std::invalid_argument("SliceSpec: phi_min < phi_max required");
  }
  if (!(std::abs(phi_min) <= half_pi && std::abs(phi_max) <= half_pi)) {
    throw std::invalid_argument(
        "SliceSpec: scan range must lie inside [-pi/2, pi/2]");
  }
  if (points < 2) {
    throw std::invalid_argument("SliceSpec: at least 2 points required, got " +
                                std::to_string(points));
  }
  if (kind == Kind::FixedSecond && std::abs(phi2) > half_pi) {
    throw std::invalid_argument("SliceSpec: |phi2| <= pi/2 required");
  }
  if (kind == Kind::FixedSinDelta && std::abs(delta) > 2.0) {
    throw std::invalid_argument(
        "SliceSpec: |delta| <= 2 required for a sine difference");
  }
}

ResolvedSlice resolve_slice(const SliceSpec& slice) {
  slice.validate();
  const Eigen::ArrayXd grid =
      Eigen::ArrayXd::LinSpaced(slice.points, slice.phi_min, slice.phi_max);

  ResolvedSlice out;
  switch (slice.kind) {
    case SliceSpec::Kind::Grid2D: {
      const int n = slice.points;
      Eigen::ArrayXd sins(n);
      for (int i = 0; i < n; ++i) sins[i] = std::sin(grid[i]);
      out.axis = grid;
      out.grid = true;
      out.points.reserve(static_cast<std::size_t>(n) * n);
      out.deltas.resize(static_cast<Eigen::Index>(n) * n);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          out.points.push_back({grid[i], grid[j]});
          out.deltas[static_cast<Eigen::Index>(i) * n + j] = sins[i] - sins[j];
        }
      }
      break;
    }
    case SliceSpec::Kind::FixedSecond: {
      const double s2 = std::sin(slice.phi2);
      out.axis = grid;
      out.points.reserve(grid.size());
      out.deltas.resize(grid.size());
      for (Eigen::Index i = 0; i < grid.size(); ++i) {
        out.points.push_back({grid[i], slice.phi2});
        out.deltas[i] = std::sin(grid[i]) - s2;
      }
      break;
    }
    case SliceSpec::Kind::OppositeScan: {
      out.axis = grid;
      out.points.reserve(grid.size());
      out.deltas.resize(grid.size());
      for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const double phi2 = -grid[i];
        out.points.push_back({grid[i], phi2});
        out.deltas[i] = std::sin(grid[i]) - std::sin(phi2);
      }
      break;
    }
    case SliceSpec::Kind::OffsetMagnitude: {
      // phi2 = -sign(phi1) (|phi1| - offset); phi1 = 0 counts as positive.
      std::vector<double> axis;
      std::vector<double> deltas;
      for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const double phi1 = grid[i];
        const double sgn = phi1 >= 0.0 ? 1.0 : -1.0;
        const double mag2 = std::abs(phi1) - slice.offset;
        if (mag2 < 0.0 || mag2 > half_pi) continue;
        const double phi2 = -sgn * mag2;
        out.points.push_back({phi1, phi2});
        axis.push_back(phi1);
        deltas.push_back(std::sin(phi1) - std::sin(phi2));
      }
      out.axis = Eigen::Map<const Eigen::ArrayXd>(axis.data(), axis.size());
      out.deltas =
          Eigen::Map<const Eigen::ArrayXd>(deltas.data(), deltas.size());
      break;
    }
    case SliceSpec::Kind::FixedSinDelta: {
      // Points whose partner sine would leave [-1, 1] are dropped; the
      // remaining ones carry the defining delta exactly.
      std::vector<double> axis;
      for (Eigen::Index i = 0; i < grid.size(); ++i) {
        const double s2 = std::sin(grid[i]) - slice.delta;
        if (std::abs(s2) > 1.0) continue;
        out.points.push_back({grid[i], std::asin(s2)});
        axis.push_back(grid[i]);
      }
      out.axis = Eigen::Map<const Eigen::ArrayXd>(axis.data(), axis.size());
      out.deltas = Eigen::ArrayXd::Constant(
          static_cast<Eigen::Index>(out.points.size()), slice.delta);
      break;
    }
  }

  if (out.points.empty()) {
    throw degenerate_error(
        "resolve_slice: slice resolves to zero valid detector-angle pairs");
  }
  return out;
}

}  // namespace ionscope
