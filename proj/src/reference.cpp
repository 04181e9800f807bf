#include "ionscope/reference.hpp"

#include <cmath>
#include <complex>

namespace ionscope::reference {

double g2_enumerated(const IonChain& chain, double phi1, double phi2) {
  using cd = std::complex<double>;
  const Eigen::ArrayXd r = chain.radiating_positions();
  const double s1 = std::sin(phi1);
  const double s2 = std::sin(phi2);
  double total = 0.0;
  for (Eigen::Index i = 0; i < r.size(); ++i) {
    for (Eigen::Index j = i + 1; j < r.size(); ++j) {
      const cd ai = std::polar(1.0, two_pi * r[i] * s1);
      const cd aj = std::polar(1.0, two_pi * r[j] * s1);
      const cd bi = std::polar(1.0, two_pi * r[i] * s2);
      const cd bj = std::polar(1.0, two_pi * r[j] * s2);
      total += std::norm(ai * bj + aj * bi);
    }
  }
  return total;
}

double g1_enumerated(const IonChain& chain, const ExcitationPulse& pulse,
                     double phi1, double psi) {
  using cd = std::complex<double>;
  const Eigen::ArrayXd r = chain.radiating_positions();
  const double s1 = std::sin(phi1);
  const double coh_mag = 0.5 * std::sin(pulse.area());
  cd acc(0.0, 0.0);
  for (Eigen::Index j = 0; j < r.size(); ++j) {
    acc += std::polar(coh_mag, psi) * std::polar(1.0, -two_pi * r[j] * s1);
  }
  const double nr = static_cast<double>(r.size());
  // |sum|^2 contains the i = j diagonal nr*|coh|^2, which belongs to the
  // population term instead.
  return nr * pulse.pop_e() + (std::norm(acc) - nr * coh_mag * coh_mag);
}

}  // namespace ionscope::reference
