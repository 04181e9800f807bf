#include "ionscope/verify.hpp"

#include <cmath>
#include <numeric>

#include "ionscope/correlations.hpp"
#include "ionscope/inference.hpp"
#include "ionscope/reference.hpp"
#include "ionscope/rng.hpp"
#include "ionscope/sampling.hpp"

namespace ionscope {

namespace {

using rng::uniform01;

double rand_angle(std::uint64_t seed, std::uint64_t k) {
  return -half_pi + pi * uniform01(seed, k);
}

// Random strictly increasing positions with a minimum gap.
IonChain random_chain(std::uint64_t seed, int n, std::optional<int> isotope) {
  Eigen::ArrayXd positions(n);
  double x = 10.0 * uniform01(seed, 0);
  for (int j = 0; j < n; ++j) {
    positions[j] = x;
    x += 0.05 + 8.0 * uniform01(seed, static_cast<std::uint64_t>(j) + 1);
  }
  return IonChain(std::move(positions), isotope);
}

CheckResult check(const std::string& name, double err, double tol) {
  return {name, err <= tol, err, tol};
}

Pattern test_pattern() {
  return g2_pattern(IonChain::equally_spaced(4, 5.75, 1),
                    SliceSpec::offset_magnitude(1.0 / pi));
}

}  // namespace

std::vector<CheckResult> run_verification(double perturb) {
  std::vector<CheckResult> results;

  {  // phase_projection odd in phi
    double err = 0.0;
    for (int k = 0; k < 200; ++k) {
      const IonChain chain = random_chain(11 + k, 2 + k % 7, std::nullopt);
      const double phi = rand_angle(12, k);
      const int ion = 1 + k % chain.size();
      const double f = phase_projection(chain, ion, DetectorAngle(phi));
      const double g = phase_projection(chain, ion, DetectorAngle(-phi));
      err = std::max(err, std::abs(f + g));
    }
    results.push_back(check("phase_projection_odd", err, 1e-12));
  }

  {  // phase_projection linear in the ion coordinate
    double err = 0.0;
    for (int k = 0; k < 200; ++k) {
      const double r = 0.1 + 20.0 * uniform01(21, k);
      const double phi = rand_angle(22, k);
      const IonChain a(Eigen::ArrayXd{{0.0, r}});
      const IonChain b(Eigen::ArrayXd{{0.0, 2.0 * r}});
      err = std::max(err,
                     std::abs(phase_projection(b, 2, DetectorAngle(phi)) -
                              2.0 * phase_projection(a, 2, DetectorAngle(phi))));
    }
    results.push_back(check("phase_projection_linear", err, 1e-12));
  }

  {  // resolved slices satisfy their defining constraints
    double err_opp = 0.0;
    const ResolvedSlice opp = resolve_slice(SliceSpec::opposite_scan());
    for (const AnglePair& p : opp.points) {
      err_opp = std::max(err_opp, std::abs(p.phi1 + p.phi2));
    }
    results.push_back(check("slice_constraint_opposite", err_opp, 1e-12));

    double err_off = 0.0;
    const double c = 1.0 / pi;
    const ResolvedSlice off = resolve_slice(SliceSpec::offset_magnitude(c));
    for (const AnglePair& p : off.points) {
      err_off = std::max(err_off,
                         std::abs(std::abs(p.phi1) - std::abs(p.phi2) - c));
      if (p.phi1 * p.phi2 > 0.0) err_off = std::max(err_off, 1.0);
    }
    results.push_back(check("slice_constraint_offset", err_off, 1e-12));

    double err_sd = 0.0;
    const double delta = 0.378;
    const ResolvedSlice sd = resolve_slice(SliceSpec::fixed_sin_delta(delta));
    for (const AnglePair& p : sd.points) {
      err_sd = std::max(
          err_sd, std::abs(std::sin(p.phi1) - std::sin(p.phi2) - delta));
    }
    results.push_back(check("slice_constraint_sindelta", err_sd, 1e-12));
  }

  const IonChain four = IonChain::equally_spaced(4, 5.75, 1);
  const IonChain nine = IonChain::equally_spaced(9, 5.75, 5);

  {  // detector swap symmetry
    double err = 0.0;
    for (int k = 0; k < 500; ++k) {
      const double a = rand_angle(31, k);
      const double b = rand_angle(32, k);
      err = std::max(err, std::abs(g2_value(four, a, b) - g2_value(four, b, a)));
      err = std::max(err, std::abs(g2_value(nine, a, b) - g2_value(nine, b, a)));
    }
    results.push_back(check("g2_detector_swap", err, 1e-12));
  }

  {  // equal sine difference, equal value: (phi1, phi2) vs (-phi2, -phi1)
    double err = 0.0;
    for (int k = 0; k < 500; ++k) {
      const double a = rand_angle(41, k);
      const double b = rand_angle(42, k);
      err = std::max(err,
                     std::abs(g2_value(nine, a, b) - g2_value(nine, -b, -a)));
    }
    results.push_back(check("g2_delta_sufficiency", err, 1e-12));
  }

  {  // mirror degeneracy p <-> N+1-p for equally spaced chains
    const SliceSpec slice = SliceSpec::offset_magnitude(1.0 / pi);
    double err2 = 0.0;
    double err1 = 0.0;
    for (const int n : {4, 9}) {
      for (int p = 1; p <= n; ++p) {
        const IonChain cp = IonChain::equally_spaced(n, 5.75, p);
        const IonChain cq = IonChain::equally_spaced(n, 5.75, n + 1 - p);
        err2 = std::max(err2, (g2_pattern(cp, slice).values -
                               g2_pattern(cq, slice).values)
                                  .abs()
                                  .maxCoeff());
        const ExcitationPulse half = ExcitationPulse::half_pi_pulse();
        err1 = std::max(err1, (g1_pattern(cp, half, slice).values -
                               g1_pattern(cq, half, slice).values)
                                  .abs()
                                  .maxCoeff());
      }
    }
    results.push_back(check("g2_mirror_degeneracy", err2, 1e-12));
    results.push_back(check("g1_mirror_degeneracy", err1, 1e-12));
  }

  {  // bounds: 0 <= G2 <= 4 C(N_r, 2); G1 within its band and >= 0
    double err = 0.0;
    for (int k = 0; k < 500; ++k) {
      const IonChain chain = random_chain(51 + k, 3 + k % 7, 1 + k % 3);
      const double g2 = g2_value(chain, rand_angle(52, k), rand_angle(53, k));
      const int nr = chain.radiating_count();
      const double cap = 4.0 * (nr * (nr - 1) / 2);
      err = std::max(err, std::max(-g2, g2 - cap));
    }
    results.push_back(check("g2_bounds", err, 1e-12));

    double err1 = 0.0;
    for (int k = 0; k < 500; ++k) {
      const IonChain chain = random_chain(61 + k, 3 + k % 7, std::nullopt);
      const ExcitationPulse pulse(pi * uniform01(62, k));
      const double g1 = g1_value(chain, pulse, rand_angle(63, k));
      const int nr = chain.radiating_count();
      const double ordered_pairs = nr * (nr - 1);
      const double lower =
          nr * pulse.pop_e() - 2.0 * pulse.coh_sq() * ordered_pairs;
      err1 = std::max(err1, std::max(lower - g1, -g1));
    }
    results.push_back(check("g1_bounds", err1, 1e-9));
  }

  {  // closed-form equivalences (perturb shifts the reference values)
    double err4 = 0.0;
    for (int p = 1; p <= 4; ++p) {
      const IonChain chain = IonChain::equally_spaced(4, 5.75, p);
      for (int k = 0; k < 1000; ++k) {
        const double a = rand_angle(71, k);
        const double b = rand_angle(72, k);
        const double closed = g2_four_closed(5.75, p, a, b) + perturb;
        err4 = std::max(err4, std::abs(g2_value(chain, a, b) - closed));
      }
    }
    results.push_back(check("g2_vs_four_closed", err4, 1e-12));

    double err2 = 0.0;
    const IonChain two(Eigen::ArrayXd{{0.0, 5.75}});
    for (int k = 0; k < 1000; ++k) {
      const double a = rand_angle(73, k);
      const double b = rand_angle(74, k);
      const double closed = g2_two_ion_closed(5.75, a, b) + perturb;
      err2 = std::max(err2, std::abs(g2_value(two, a, b) - closed));
    }
    results.push_back(check("g2_vs_two_ion_closed", err2, 1e-12));

    double err1 = 0.0;
    for (int p = 1; p <= 4; ++p) {
      const IonChain chain = IonChain::equally_spaced(4, 5.75, p);
      for (int k = 0; k < 1000; ++k) {
        const double a = rand_angle(75, k);
        const double closed = g1_four_closed(5.75, p, a) + perturb;
        err1 = std::max(
            err1,
            std::abs(g1_value(chain, ExcitationPulse::half_pi_pulse(), a) -
                     closed));
      }
    }
    results.push_back(check("g1_vs_four_closed", err1, 1e-12));
  }

  {  // direct complex enumeration, arbitrary spacing
    double err = 0.0;
    for (int k = 0; k < 50; ++k) {
      const int n = 3 + k % 7;
      const IonChain chain = random_chain(81 + k, n, 1 + k % n);
      for (int q = 0; q < 20; ++q) {
        const double a = rand_angle(82, 20 * k + q);
        const double b = rand_angle(83, 20 * k + q);
        err = std::max(err, std::abs(g2_value(chain, a, b) -
                                     reference::g2_enumerated(chain, a, b)));
      }
    }
    results.push_back(check("g2_vs_enumeration", err, 1e-10));

    double err1 = 0.0;
    for (int k = 0; k < 200; ++k) {
      const int n = 3 + k % 7;
      const IonChain chain = random_chain(84 + k, n, std::nullopt);
      const ExcitationPulse pulse(pi * uniform01(85, k));
      const double phi = rand_angle(86, k);
      const double psi = two_pi * uniform01(87, k);
      err1 = std::max(err1,
                      std::abs(g1_value(chain, pulse, phi) -
                               reference::g1_enumerated(chain, pulse, phi, psi)));
    }
    results.push_back(check("g1_coherence_phase_cancellation", err1, 1e-10));
  }

  {  // pi pulse flattens G1 to N-1
    double err = 0.0;
    const SliceSpec slice = SliceSpec::fixed_second(0.0);
    for (const int n : {4, 9}) {
      for (int p = 1; p <= n; ++p) {
        const Pattern pat =
            g1_pattern(IonChain::equally_spaced(n, 5.75, p),
                       ExcitationPulse::pi_pulse(), slice);
        err = std::max(err, pat.values.maxCoeff() - pat.values.minCoeff());
        err = std::max(err, std::abs(pat.values[0] - (n - 1)));
      }
    }
    results.push_back(check("pi_pulse_g1_flatness", err, 1e-12));
  }

  {  // fixed sine difference pins G2 per isotope position
    double err = 0.0;
    const SliceSpec slice = SliceSpec::fixed_sin_delta(0.378);
    for (int p = 1; p <= 9; ++p) {
      const Pattern pat =
          g2_pattern(IonChain::equally_spaced(9, 5.75, p), slice);
      err = std::max(err, pat.values.maxCoeff() - pat.values.minCoeff());
    }
    results.push_back(check("fixed_sindelta_g2_constancy", err, 1e-12));
  }

  {  // normalization
    const Pattern pat = test_pattern();
    const DiscreteDistribution dist = normalize(pat);
    results.push_back(check("normalize_sum",
                            std::abs(dist.probs().sum() - 1.0), 1e-12));

    Pattern scaled = pat;
    scaled.values *= 8.0;
    const DiscreteDistribution dist2 = normalize(scaled);
    results.push_back(check("normalize_scale_free",
                            (dist.probs() - dist2.probs()).abs().maxCoeff(),
                            1e-15));
  }

  {  // sampling determinism
    const DiscreteDistribution dist = normalize(test_pattern());
    const EventSet a = sample_events(dist, 1000, 42);
    const EventSet b = sample_events(dist, 1000, 42);
    const EventSet c = sample_events(dist, 1000, 43);
    results.push_back(
        check("sampling_deterministic", a.events == b.events ? 0.0 : 1.0, 0.0));
    results.push_back(
        check("sampling_seeds_differ", a.events == c.events ? 1.0 : 0.0, 0.0));
  }

  {  // chi-square against a uniform 100-bin distribution
    Pattern uniform =
        g1_pattern(IonChain::equally_spaced(4, 5.75, 1),
                   ExcitationPulse::pi_pulse(),
                   SliceSpec::fixed_second(0.0, -half_pi, half_pi, 100));
    const DiscreteDistribution dist = normalize(uniform);
    const std::size_t m = 100000;
    const EventSet ev = sample_events(dist, m, 42);
    const Eigen::ArrayXd freq = empirical_histogram(ev, dist);
    double chi2 = 0.0;
    const double expected = static_cast<double>(m) / 100.0;
    for (Eigen::Index i = 0; i < freq.size(); ++i) {
      const double observed = freq[i] * static_cast<double>(m);
      chi2 += (observed - expected) * (observed - expected) / expected;
    }
    // 99.9% quantile of chi-square with 99 dof.
    results.push_back(check("sampling_chi_square_uniform", chi2, 148.2304));
  }

  {  // empirical histogram converges in total variation
    const Pattern pat =
        g2_pattern(four, SliceSpec::fixed_second(0.0, -half_pi, half_pi, 201));
    const DiscreteDistribution dist = normalize(pat);
    const EventSet ev = sample_events(dist, 1000000, 7);
    const Eigen::ArrayXd freq = empirical_histogram(ev, dist);
    const double tv = 0.5 * (freq - dist.probs()).abs().sum();
    results.push_back(check("histogram_total_variation_1e6", tv, 0.01));
  }

  {  // log-likelihood of a uniform candidate
    Pattern uniform =
        g1_pattern(four, ExcitationPulse::pi_pulse(),
                   SliceSpec::fixed_second(0.0, -half_pi, half_pi, 201));
    const DiscreteDistribution dist = normalize(uniform);
    const std::size_t m = 1000;
    const EventSet ev = sample_events(dist, m, 5);
    const double ll = log_likelihood(ev, dist);
    const double expected = static_cast<double>(m) * std::log(1.0 / 201.0);
    results.push_back(check("loglik_uniform",
                            std::abs(ll - expected) / std::abs(expected),
                            1e-12));
  }

  {  // posterior: uniform on no data; mirror symmetric; classes as expected
    const SliceSpec slice = SliceSpec::offset_magnitude(1.0 / pi);
    const DiscreteDistribution true_dist =
        normalize(g2_pattern(four, slice));
    const EventSet none = sample_events(true_dist, 0, 1);
    const PosteriorReport empty =
        posterior_over_positions(none, four, slice);
    results.push_back(check("posterior_uniform_on_empty",
                            (empty.posterior - 0.25).abs().maxCoeff(), 1e-12));

    const EventSet ev = sample_events(true_dist, 400, 9);
    const PosteriorReport rep = posterior_over_positions(ev, four, slice);
    double err_sym = 0.0;
    for (int p = 1; p <= 4; ++p) {
      err_sym = std::max(err_sym, std::abs(rep.posterior[p - 1] -
                                           rep.posterior[4 - p]));
    }
    results.push_back(check("posterior_mirror_symmetry", err_sym, 1e-9));

    const bool classes_ok =
        rep.equivalence_classes ==
        std::vector<std::vector<int>>{{1, 4}, {2, 3}};
    results.push_back(
        check("equivalence_classes_equal_spacing", classes_ok ? 0.0 : 1.0, 0.0));

    const IonChain unequal(Eigen::ArrayXd{{0.0, 1.3, 3.1, 5.9}});
    const EventSet ev2 = sample_events(
        normalize(g2_pattern(unequal.with_isotope(2), slice)), 100, 3);
    const PosteriorReport rep2 = posterior_over_positions(ev2, unequal, slice);
    bool singletons = rep2.equivalence_classes.size() == 4;
    for (const auto& cls : rep2.equivalence_classes) {
      singletons = singletons && cls.size() == 1;
    }
    results.push_back(check("equivalence_classes_unequal_singletons",
                            singletons ? 0.0 : 1.0, 0.0));
  }

  {  // classical baseline against its exact expectation
    double worst = 0.0;
    const int trials = 20000;
    for (const int n : {2, 4, 9, 100}) {
      const double mean = classical_search_sim(n, trials, 77);
      const double analytic = classical_mean_probes_analytic(n);
      // recompute the spread for a 3-sigma band
      double var = 0.0;
      for (int t = 0; t < trials; ++t) {
        const int p = rng::uniform_index1(77, static_cast<std::uint64_t>(t), n);
        const double probes = std::min(p, n - 1);
        var += (probes - mean) * (probes - mean);
      }
      const double sigma = std::sqrt(var / trials / trials);
      const double band = 3.0 * sigma;
      const double dev = std::abs(mean - analytic);
      worst = std::max(worst, band > 0.0 ? dev / band : (dev > 0.0 ? 2.0 : 0.0));
    }
    results.push_back(check("classical_mean_vs_analytic_3sigma", worst, 1.0));
  }

  return results;
}

}  // namespace ionscope
