#include "ionscope/chain.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ionscope {

DetectorAngle::DetectorAngle(double phi) : phi_(phi) {
  if (!(std::abs(phi) <= half_pi)) {
    throw std::invalid_argument(
        "DetectorAngle: |phi| <= pi/2 required, got phi=" +
        std::to_string(phi));
  }
}

ExcitationPulse::ExcitationPulse(double area) : area_(area) {
  if (!(area >= 0.0 && area <= pi)) {
    throw std::invalid_argument(
        "ExcitationPulse: pulse area must lie in [0, pi], got " +
        std::to_string(area));
  }
}

double ExcitationPulse::pop_e() const {
  const double s = std::sin(0.5 * area_);
  return s * s;
}

double ExcitationPulse::coh_sq() const {
  const double s = std::sin(area_);
  return 0.25 * s * s;
}

IonChain::IonChain(Eigen::ArrayXd positions, std::optional<int> isotope)
    : positions_(std::move(positions)), isotope_(isotope) {
  const auto n = positions_.size();
  if (n < 2) {
    throw std::invalid_argument("IonChain: at least 2 ions required, got " +
                                std::to_string(n));
  }
  for (Eigen::Index j = 0; j + 1 < n; ++j) {
    if (!(positions_[j] < positions_[j + 1])) {
      throw std::invalid_argument(
          "IonChain: positions must be strictly increasing (violated at index " +
          std::to_string(j + 1) + ")");
    }
  }
  if (isotope_ && (*isotope_ < 1 || *isotope_ > static_cast<int>(n))) {
    throw std::invalid_argument(
        "IonChain: isotope index must satisfy 1 <= p <= N, got p=" +
        std::to_string(*isotope_) + " for N=" + std::to_string(n));
  }
}

IonChain IonChain::equally_spaced(int n, double spacing,
                                  std::optional<int> isotope) {
  if (!(spacing > 0.0)) {
    throw std::invalid_argument("IonChain: spacing must be positive, got " +
                                std::to_string(spacing));
  }
  Eigen::ArrayXd positions(n > 0 ? n : 0);
  for (int j = 0; j < n; ++j) positions[j] = j * spacing;
  return IonChain(std::move(positions), isotope);
}

Eigen::ArrayXd IonChain::radiating_positions() const {
  if (!isotope_) return positions_;
  Eigen::ArrayXd out(positions_.size() - 1);
  Eigen::Index k = 0;
  for (Eigen::Index j = 0; j < positions_.size(); ++j) {
    if (j != *isotope_ - 1) out[k++] = positions_[j];
  }
  return out;
}

int IonChain::radiating_count() const {
  return size() - (isotope_ ? 1 : 0);
}

bool IonChain::is_equally_spaced(double rtol) const {
  double gmin = positions_[1] - positions_[0];
  double gmax = gmin;
  for (Eigen::Index j = 1; j + 1 < positions_.size(); ++j) {
    const double g = positions_[j + 1] - positions_[j];
    gmin = std::min(gmin, g);
    gmax = std::max(gmax, g);
  }
  return gmax - gmin <= rtol * gmax;
}

IonChain IonChain::with_isotope(std::optional<int> p) const {
  return IonChain(positions_, p);
}

double phase_projection(const IonChain& chain, int ion, DetectorAngle angle) {
  if (ion < 1 || ion > chain.size()) {
    throw std::invalid_argument(
        "phase_projection: ion index must satisfy 1 <= ion <= N, got " +
        std::to_string(ion) + " for N=" + std::to_string(chain.size()));
  }
  return two_pi * chain.positions()[ion - 1] * std::sin(angle.phi());
}

}  // namespace ionscope
