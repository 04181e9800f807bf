#include "ionscope/correlations.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ionscope/threads.hpp"

namespace ionscope {

namespace {

// R_i - R_j over radiating pairs i < j, in pair enumeration order. The
// summation order per point is fixed by this order, so identical diff
// sequences give bitwise identical pattern values.
Eigen::ArrayXd radiating_pair_diffs(const IonChain& chain) {
  const Eigen::ArrayXd r = chain.radiating_positions();
  const Eigen::Index n = r.size();
  Eigen::ArrayXd diffs(n * (n - 1) / 2);
  Eigen::Index k = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) diffs[k++] = r[i] - r[j];
  }
  return diffs;
}

double pair_cos_sum(const Eigen::ArrayXd& diffs, double x) {
  double sum = 0.0;
  for (Eigen::Index k = 0; k < diffs.size(); ++k) {
    sum += std::cos(two_pi * diffs[k] * x);
  }
  return sum;
}

void check_p4(int p, const char* fn) {
  if (p < 1 || p > 4) {
    throw std::invalid_argument(std::string(fn) +
                                ": isotope index p must lie in 1..4, got " +
                                std::to_string(p));
  }
}

void check_positive(double v, const char* fn, const char* what) {
  if (!(v > 0.0)) {
    throw std::invalid_argument(std::string(fn) + ": " + what +
                                " must be positive, got " + std::to_string(v));
  }
}

}  // namespace

PairPhase pair_phase(const IonChain& chain, int i, int j, double phi1,
                     double phi2) {
  const int n = chain.size();
  if (i < 1 || i > n || j < 1 || j > n || i == j) {
    throw std::invalid_argument(
        "pair_phase: indices must be distinct chain indices in 1..N");
  }
  if (chain.isotope() && (*chain.isotope() == i || *chain.isotope() == j)) {
    throw std::invalid_argument(
        "pair_phase: the isotope does not radiate; pick radiating indices");
  }
  const double delta = std::sin(phi1) - std::sin(phi2);
  const double value =
      two_pi * (chain.positions()[i - 1] - chain.positions()[j - 1]) * delta;
  return {i, j, value};
}

double g1_value(const IonChain& chain, const ExcitationPulse& pulse,
                double phi1) {
  const Eigen::ArrayXd diffs = radiating_pair_diffs(chain);
  const int nr = chain.radiating_count();
  return nr * pulse.pop_e() +
         pulse.coh_sq() * 2.0 * pair_cos_sum(diffs, std::sin(phi1));
}

double g2_value_at_delta(const IonChain& chain, double delta) {
  const Eigen::ArrayXd diffs = radiating_pair_diffs(chain);
  return 2.0 * static_cast<double>(diffs.size()) +
         2.0 * pair_cos_sum(diffs, delta);
}

double g2_value(const IonChain& chain, double phi1, double phi2) {
  return g2_value_at_delta(chain, std::sin(phi1) - std::sin(phi2));
}

Pattern g1_pattern(const IonChain& chain, const ExcitationPulse& pulse,
                   const SliceSpec& slice) {
  if (chain.radiating_count() < 1) {
    throw std::invalid_argument(
        "g1_pattern: at least one radiating ion required");
  }
  ResolvedSlice resolved = resolve_slice(slice);
  const Eigen::ArrayXd diffs = radiating_pair_diffs(chain);
  const double nr_pop = chain.radiating_count() * pulse.pop_e();
  const double coh_sq = pulse.coh_sq();

  Eigen::ArrayXd values(static_cast<Eigen::Index>(resolved.size()));
  if (resolved.grid) {
    // Constant along phi2: evaluate once per axis value, fill the row.
    const Eigen::Index n = resolved.axis.size();
    Eigen::ArrayXd row(n);
    parallel_for(static_cast<std::size_t>(n), [&](std::size_t i) {
      row[static_cast<Eigen::Index>(i)] =
          nr_pop + coh_sq * 2.0 *
                       pair_cos_sum(diffs, std::sin(resolved.axis[
                                               static_cast<Eigen::Index>(i)]));
    });
    for (Eigen::Index i = 0; i < n; ++i) {
      values.segment(i * n, n).setConstant(row[i]);
    }
  } else {
    parallel_for(resolved.size(), [&](std::size_t k) {
      values[static_cast<Eigen::Index>(k)] =
          nr_pop + coh_sq * 2.0 *
                       pair_cos_sum(diffs, std::sin(resolved.points[k].phi1));
    });
  }
  return Pattern{slice, std::move(resolved), std::move(values), chain, pulse,
                 1};
}

Pattern g2_pattern(const IonChain& chain, const SliceSpec& slice) {
  ResolvedSlice resolved = resolve_slice(slice);
  Eigen::ArrayXd values(static_cast<Eigen::Index>(resolved.size()));
  if (chain.radiating_count() < 2) {
    // No radiating pair, no coincidences; the all-zero pattern is reported
    // as non-normalizable by sampling.
    values.setZero();
  } else {
    const Eigen::ArrayXd diffs = radiating_pair_diffs(chain);
    const double base = 2.0 * static_cast<double>(diffs.size());
    parallel_for(resolved.size(), [&](std::size_t k) {
      const Eigen::Index i = static_cast<Eigen::Index>(k);
      values[i] = base + 2.0 * pair_cos_sum(diffs, resolved.deltas[i]);
    });
  }
  return Pattern{slice,
                 std::move(resolved),
                 std::move(values),
                 chain,
                 ExcitationPulse::pi_pulse(),
                 2};
}

Pattern pattern_over_slice(int order, const IonChain& chain,
                           const ExcitationPulse& pulse,
                           const SliceSpec& slice) {
  if (order == 1) return g1_pattern(chain, pulse, slice);
  if (order != 2) {
    throw std::invalid_argument(
        "pattern_over_slice: correlation order must be 1 or 2, got " +
        std::to_string(order));
  }
  if (pulse.area() != pi) {
    throw std::invalid_argument(
        "pattern_over_slice: order-2 patterns are defined for pi-pulse "
        "excitation only (pulse area pi), got area " +
        std::to_string(pulse.area()));
  }
  return g2_pattern(chain, slice);
}

double g2_two_ion_closed(double separation, double phi1, double phi2) {
  check_positive(separation, "g2_two_ion_closed", "separation");
  const double delta = std::sin(phi1) - std::sin(phi2);
  return 2.0 * (1.0 + std::cos(two_pi * separation * delta));
}

double g2_four_closed(double spacing, int p, double phi1, double phi2) {
  check_p4(p, "g2_four_closed");
  check_positive(spacing, "g2_four_closed", "spacing");
  const double delta = std::sin(phi1) - std::sin(phi2);
  const double c1 = std::cos(two_pi * spacing * delta);
  const double c2 = std::cos(two_pi * (2.0 * spacing) * delta);
  const double c3 = std::cos(two_pi * (3.0 * spacing) * delta);
  if (p == 1 || p == 4) return 2.0 * (3.0 + 2.0 * c1 + c2);
  return 2.0 * (3.0 + c1 + c2 + c3);
}

double g1_four_closed(double spacing, int p, double phi1) {
  check_p4(p, "g1_four_closed");
  check_positive(spacing, "g1_four_closed", "spacing");
  const double s = std::sin(phi1);
  const double c1 = std::cos(two_pi * spacing * s);
  const double c2 = std::cos(two_pi * (2.0 * spacing) * s);
  const double c3 = std::cos(two_pi * (3.0 * spacing) * s);
  if (p == 1 || p == 4) return 0.5 * (3.0 + 2.0 * c1 + c2);
  return 0.5 * (3.0 + c1 + c2 + c3);
}

}  // namespace ionscope
