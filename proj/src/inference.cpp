#include "ionscope/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "ionscope/correlations.hpp"
#include "ionscope/errors.hpp"
#include "ionscope/rng.hpp"
#include "ionscope/threads.hpp"

namespace ionscope {

double log_likelihood(const EventSet& events,
                      const DiscreteDistribution& candidate) {
  if (events.bins_id != candidate.bins_id()) {
    throw integrity_error(
        "log_likelihood: events and candidate live on different bin grids");
  }
  const Eigen::ArrayXd& p = candidate.probs();
  double ll = 0.0;
  for (const std::int32_t e : events.events) {
    if (e < 0 || static_cast<std::size_t>(e) >= candidate.size()) {
      throw integrity_error("log_likelihood: event index out of range");
    }
    ll += std::log(std::max(p[e], likelihood_floor));
  }
  return ll;
}

PatternDistance pattern_distance(const Pattern& p, const Pattern& q) {
  if (p.size() != q.size() || p.order != q.order) {
    throw std::invalid_argument(
        "pattern_distance: patterns must share the same slice");
  }
  for (std::size_t k = 0; k < p.size(); ++k) {
    if (p.resolved.points[k].phi1 != q.resolved.points[k].phi1 ||
        p.resolved.points[k].phi2 != q.resolved.points[k].phi2) {
      throw std::invalid_argument(
          "pattern_distance: patterns must share the same slice");
    }
  }
  const Eigen::ArrayXd a = p.values / p.values.sum();
  const Eigen::ArrayXd b = q.values / q.values.sum();
  const double linf = (a - b).abs().maxCoeff();
  double kl_ab = 0.0;
  double kl_ba = 0.0;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    if (a[i] > 0.0) {
      kl_ab += a[i] * std::log(a[i] / std::max(b[i], likelihood_floor));
    }
    if (b[i] > 0.0) {
      kl_ba += b[i] * std::log(b[i] / std::max(a[i], likelihood_floor));
    }
  }
  return {linf, kl_ab + kl_ba};
}

namespace {

// Partition candidates by pattern identity: L-infinity distance of the
// normalized patterns below class_distance_tol joins two candidates.
std::vector<std::vector<int>> find_equivalence_classes(
    const std::vector<int>& candidates,
    const std::vector<Eigen::ArrayXd>& normalized) {
  std::vector<int> parent(candidates.size());
  std::iota(parent.begin(), parent.end(), 0);
  const auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    for (std::size_t b = a + 1; b < candidates.size(); ++b) {
      const double d = (normalized[a] - normalized[b]).abs().maxCoeff();
      if (d < class_distance_tol) {
        parent[find(static_cast<int>(b))] = find(static_cast<int>(a));
      }
    }
  }
  std::vector<std::vector<int>> classes;
  for (std::size_t a = 0; a < candidates.size(); ++a) {
    if (find(static_cast<int>(a)) != static_cast<int>(a)) continue;
    std::vector<int> cls;
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      if (find(static_cast<int>(b)) == static_cast<int>(a)) {
        cls.push_back(candidates[b]);
      }
    }
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<int> map_set_from(const std::vector<int>& candidates,
                              const Eigen::ArrayXd& lls) {
  double ll_max = -std::numeric_limits<double>::infinity();
  for (const int p : candidates) ll_max = std::max(ll_max, lls[p - 1]);
  const double tol = map_tie_rtol * std::max(1.0, std::abs(ll_max));
  std::vector<int> out;
  for (const int p : candidates) {
    if (lls[p - 1] >= ll_max - tol) out.push_back(p);
  }
  return out;
}

struct CandidateSet {
  std::vector<int> included;                  // 1-based candidate positions
  std::vector<DiscreteDistribution> dists;    // aligned with `included`
  std::vector<Eigen::ArrayXd> normalized;     // probs per included candidate
  std::vector<int> excluded;
  std::vector<std::vector<int>> classes;
};

CandidateSet build_candidates(const IonChain& chain_template,
                              const SliceSpec& slice) {
  CandidateSet out;
  const int n = chain_template.size();
  for (int p = 1; p <= n; ++p) {
    const Pattern pat = g2_pattern(chain_template.with_isotope(p), slice);
    try {
      DiscreteDistribution dist = normalize(pat);
      out.normalized.push_back(dist.probs());
      out.dists.push_back(std::move(dist));
      out.included.push_back(p);
    } catch (const degenerate_error&) {
      out.excluded.push_back(p);
    }
  }
  if (out.included.empty()) {
    throw degenerate_error(
        "posterior: no candidate isotope position yields a normalizable "
        "pattern");
  }
  out.classes = find_equivalence_classes(out.included, out.normalized);
  return out;
}

}  // namespace

const std::vector<int>& PosteriorReport::class_of(int p) const {
  for (const auto& cls : equivalence_classes) {
    if (std::find(cls.begin(), cls.end(), p) != cls.end()) return cls;
  }
  throw std::invalid_argument("PosteriorReport: candidate " +
                              std::to_string(p) +
                              " is not in any equivalence class");
}

PosteriorReport posterior_over_positions(const EventSet& events,
                                         const IonChain& chain_template,
                                         const SliceSpec& slice) {
  const int n = chain_template.size();
  if (n < 3) {
    throw std::invalid_argument(
        "posterior_over_positions: N >= 3 required (with N = 2 no candidate "
        "leaves two radiating ions)");
  }
  const CandidateSet cs = build_candidates(chain_template, slice);

  PosteriorReport report;
  report.log_likelihoods = Eigen::ArrayXd::Constant(
      n, -std::numeric_limits<double>::infinity());
  for (std::size_t k = 0; k < cs.included.size(); ++k) {
    report.log_likelihoods[cs.included[k] - 1] =
        log_likelihood(events, cs.dists[k]);
  }

  // Uniform prior: posterior = softmax of the log-likelihoods.
  double ll_max = -std::numeric_limits<double>::infinity();
  for (const int p : cs.included) {
    ll_max = std::max(ll_max, report.log_likelihoods[p - 1]);
  }
  report.posterior = Eigen::ArrayXd::Zero(n);
  double z = 0.0;
  for (const int p : cs.included) {
    const double w = std::exp(report.log_likelihoods[p - 1] - ll_max);
    report.posterior[p - 1] = w;
    z += w;
  }
  report.posterior /= z;

  report.map_set = map_set_from(cs.included, report.log_likelihoods);
  report.equivalence_classes = cs.classes;
  report.excluded = cs.excluded;
  return report;
}

SearchExperimentResult run_search_experiment(const IonChain& chain,
                                             const SliceSpec& slice,
                                             int true_p,
                                             std::vector<std::size_t> schedule,
                                             int n_trials,
                                             std::uint64_t master_seed) {
  const int n = chain.size();
  if (true_p < 1 || true_p > n) {
    throw std::invalid_argument(
        "run_search_experiment: true_p must satisfy 1 <= p <= N, got p=" +
        std::to_string(true_p) + " for N=" + std::to_string(n));
  }
  if (n < 3) {
    throw std::invalid_argument(
        "run_search_experiment: N >= 3 required for the likelihood search");
  }
  if (schedule.empty()) {
    throw std::invalid_argument("run_search_experiment: empty schedule");
  }
  for (std::size_t k = 0; k + 1 < schedule.size(); ++k) {
    if (!(schedule[k] < schedule[k + 1])) {
      throw std::invalid_argument(
          "run_search_experiment: schedule must be strictly ascending");
    }
  }
  if (n_trials < 1) {
    throw std::invalid_argument("run_search_experiment: n_trials >= 1");
  }

  const IonChain truth = chain.with_isotope(true_p);
  const CandidateSet cs = build_candidates(truth, slice);
  const DiscreteDistribution true_dist = [&] {
    for (std::size_t k = 0; k < cs.included.size(); ++k) {
      if (cs.included[k] == true_p) return cs.dists[k];
    }
    throw degenerate_error(
        "run_search_experiment: the true position has no normalizable "
        "pattern");
  }();

  std::vector<int> true_class;
  for (const auto& cls : cs.classes) {
    if (std::find(cls.begin(), cls.end(), true_p) != cls.end()) {
      true_class = cls;
    }
  }

  // Per-candidate log-prob tables; every trial reuses them.
  std::vector<Eigen::ArrayXd> logp(cs.included.size());
  for (std::size_t k = 0; k < cs.included.size(); ++k) {
    logp[k] = cs.dists[k].probs().max(likelihood_floor).log();
  }

  const std::size_t m_max = schedule.back();
  const std::size_t n_points = schedule.size();
  std::vector<std::vector<std::uint8_t>> success(
      n_trials, std::vector<std::uint8_t>(n_points, 0));
  std::vector<std::size_t> first_success(n_trials, m_max);
  std::vector<double> lls(cs.included.size());

  parallel_for(static_cast<std::size_t>(n_trials), [&](std::size_t t) {
    const EventSet events =
        sample_events(true_dist, m_max, rng::derive_seed(master_seed, t));
    std::vector<double> running(cs.included.size(), 0.0);
    std::size_t next = 0;
    bool found = false;
    std::size_t found_at = m_max;
    for (std::size_t e = 0; e <= m_max; ++e) {
      if (next < n_points && e == schedule[next]) {
        Eigen::ArrayXd ll_full = Eigen::ArrayXd::Constant(
            n, -std::numeric_limits<double>::infinity());
        for (std::size_t k = 0; k < cs.included.size(); ++k) {
          ll_full[cs.included[k] - 1] = running[k];
        }
        const std::vector<int> map_set = map_set_from(cs.included, ll_full);
        const bool ok = map_set == true_class;
        success[t][next] = ok ? 1 : 0;
        if (ok && !found) {
          found = true;
          found_at = schedule[next];
        }
        ++next;
      }
      if (e == m_max) break;
      const std::int32_t bin = events.events[e];
      for (std::size_t k = 0; k < cs.included.size(); ++k) {
        running[k] += logp[k][bin];
      }
    }
    first_success[t] = found_at;
  });

  SearchExperimentResult result{
      truth,      true_p, slice, std::move(schedule), {}, std::nullopt, 0.0,
      classical_mean_probes_analytic(n), master_seed, n_trials, cs.classes};
  result.success_rates.resize(n_points);
  for (std::size_t j = 0; j < n_points; ++j) {
    int hits = 0;
    for (int t = 0; t < n_trials; ++t) hits += success[t][j];
    result.success_rates[j] = static_cast<double>(hits) / n_trials;
    if (!result.m_at_95 && result.success_rates[j] >= 0.95) {
      result.m_at_95 = result.schedule[j];
    }
  }
  double total_m = 0.0;
  for (int t = 0; t < n_trials; ++t) {
    total_m += static_cast<double>(first_success[t]);
  }
  result.mean_events_to_confidence = total_m / n_trials;
  return result;
}

double classical_search_sim(int n, int n_trials, std::uint64_t master_seed) {
  if (n < 2) {
    throw std::invalid_argument(
        "classical_search_sim: N >= 2 required, got " + std::to_string(n));
  }
  if (n_trials < 1) {
    throw std::invalid_argument("classical_search_sim: n_trials >= 1");
  }
  double total = 0.0;
  for (int t = 0; t < n_trials; ++t) {
    const int p = rng::uniform_index1(master_seed, static_cast<std::uint64_t>(t), n);
    int probes = 0;
    for (int ion = 1; ion <= n - 1; ++ion) {
      ++probes;
      if (ion == p) break;  // probed ion stays dark
    }
    total += probes;
  }
  return total / n_trials;
}

double classical_mean_probes_analytic(int n) {
  return (n - 1) * (n + 2) / (2.0 * n);
}

}  // namespace ionscope
