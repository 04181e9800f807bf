#pragma once

#include <Eigen/Dense>
#include <optional>

namespace ionscope {

inline constexpr double pi = 3.141592653589793238462643383279502884;
inline constexpr double two_pi = 2.0 * pi;
inline constexpr double half_pi = 0.5 * pi;

/// Far-field detector direction phi = arctan(r_y / r_x), restricted to
/// [-pi/2, pi/2].
class DetectorAngle {
public:
  explicit DetectorAngle(double phi);
  double phi() const { return phi_; }

private:
  double phi_;
};

/// Excitation pulse on the f<->e transition, parameterized by the pulse area
/// theta in [0, pi]. After the pulse each ion carries an excited-state
/// population pop_e = sin^2(theta/2) and an optical coherence whose squared
/// magnitude is coh_sq = sin^2(theta)/4. A pi pulse has zero coherence, a
/// pi/2 pulse the maximal value 1/4.
class ExcitationPulse {
public:
  explicit ExcitationPulse(double area);

  static ExcitationPulse pi_pulse() { return ExcitationPulse(pi); }
  static ExcitationPulse half_pi_pulse() { return ExcitationPulse(half_pi); }

  double area() const { return area_; }
  double pop_e() const;
  double coh_sq() const;

private:
  double area_;
};

/// Linear chain of trapped ions. Positions are coordinates along the chain
/// axis in units of the fluorescence wavelength, strictly increasing, N >= 2.
/// At most one member is a dark isotope (1-based index p) that scatters no
/// light; all others radiate.
class IonChain {
public:
  IonChain(Eigen::ArrayXd positions, std::optional<int> isotope = std::nullopt);

  /// Chain with positions 0, d, 2d, ..., (n-1)d.
  static IonChain equally_spaced(int n, double spacing,
                                 std::optional<int> isotope = std::nullopt);

  int size() const { return static_cast<int>(positions_.size()); }
  const Eigen::ArrayXd& positions() const { return positions_; }
  std::optional<int> isotope() const { return isotope_; }

  /// Positions of the radiating ions (isotope removed), in chain order.
  Eigen::ArrayXd radiating_positions() const;
  int radiating_count() const;

  /// True when all consecutive gaps agree within `rtol` relative tolerance.
  bool is_equally_spaced(double rtol = 1e-12) const;

  /// First gap; meaningful for equally spaced chains.
  double spacing() const { return positions_[1] - positions_[0]; }

  /// Copy of this chain with the isotope moved (or removed).
  IonChain with_isotope(std::optional<int> p) const;

private:
  Eigen::ArrayXd positions_;
  std::optional<int> isotope_;
};

/// Optical phase k n.R of ion `ion` (1-based) seen from a far-field detector
/// at `angle`: 2*pi * R_ion * sin(phi), with R in wavelength units. The chain
/// lies along one axis of the detection plane, so the projection of the
/// detector direction onto the chain axis is sin(phi).
double phase_projection(const IonChain& chain, int ion, DetectorAngle angle);

}  // namespace ionscope
