#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "ionscope/sampling.hpp"

namespace ionscope {

/// Floor applied to bin probabilities inside log-likelihoods, guarding
/// log(0) for events that land on zero-probability bins (possible only for
/// externally supplied event files).
inline constexpr double likelihood_floor = 1e-300;

/// Candidates whose log-likelihoods agree within this relative tolerance of
/// the maximum are treated as tied in the MAP set.
inline constexpr double map_tie_rtol = 1e-9;

/// Candidate patterns closer than this (L-infinity of the normalized
/// patterns) are treated as the same pattern when forming equivalence
/// classes.
inline constexpr double class_distance_tol = 1e-9;

/// sum over events of log(max(probs[e], likelihood_floor)); 0 for an empty
/// event set. Throws integrity_error when the candidate's bin grid differs
/// from the one the events were drawn on.
double log_likelihood(const EventSet& events,
                      const DiscreteDistribution& candidate);

struct PatternDistance {
  double linf;    // L-infinity distance of the normalized patterns
  double sym_kl;  // symmetrized Kullback-Leibler divergence
};

/// Distance between the distributions induced by two patterns on the same
/// slice. Both components are >= 0 and zero iff the normalized patterns
/// agree within the likelihood floor.
PatternDistance pattern_distance(const Pattern& p, const Pattern& q);

/// Likelihoods over candidate isotope positions, with a uniform prior.
/// Candidates whose pattern cannot be normalized are excluded and listed.
/// `equivalence_classes` partitions the included candidates by pattern
/// identity; all members of a class share the same likelihood, so positions
/// are identifiable only up to their class.
struct PosteriorReport {
  Eigen::ArrayXd log_likelihoods;  // index p-1; -inf for excluded candidates
  Eigen::ArrayXd posterior;        // sums to 1 over included candidates
  std::vector<int> map_set;        // argmax candidates, ties kept; sorted
  std::vector<std::vector<int>> equivalence_classes;
  std::vector<int> excluded;

  /// Class containing candidate p.
  const std::vector<int>& class_of(int p) const;
};

/// Scores `events` against the coincidence pattern of every isotope position
/// p in 1..N of `chain_template` (its own isotope field is ignored).
/// Requires N >= 3; with N = 2 a single radiating ion remains and no
/// candidate is normalizable.
PosteriorReport posterior_over_positions(const EventSet& events,
                                         const IonChain& chain_template,
                                         const SliceSpec& slice);

/// Outcome of a multi-trial localization experiment.
struct SearchExperimentResult {
  IonChain chain;  // with the true isotope position set
  int true_p = 0;
  SliceSpec slice;
  std::vector<std::size_t> schedule;   // events per trial, ascending
  std::vector<double> success_rates;   // one per schedule point
  std::optional<std::size_t> m_at_95;  // smallest m with success rate >= 0.95
  double mean_events_to_confidence = 0.0;
  double classical_mean_probes = 0.0;  // analytic one-by-one baseline
  std::uint64_t master_seed = 0;
  int n_trials = 0;
  std::vector<std::vector<int>> equivalence_classes;
};

/// Runs n_trials independent experiments. Trial t draws max(schedule) events
/// from the true pattern with seed derive_seed(master_seed, t) and is scored
/// on its first m events at every schedule point m. A trial counts as a
/// success when the MAP tie set equals the true position's equivalence class
/// exactly, so a flat posterior never gets credit.
/// Trials that never succeed contribute max(schedule) to
/// mean_events_to_confidence.
SearchExperimentResult run_search_experiment(const IonChain& chain,
                                             const SliceSpec& slice,
                                             int true_p,
                                             std::vector<std::size_t> schedule,
                                             int n_trials,
                                             std::uint64_t master_seed);

/// One-by-one probing baseline: the isotope sits at a uniformly random
/// position; ions are probed in order until one stays dark or N-1 probes are
/// spent. Returns the empirical mean probe count over n_trials.
double classical_search_sim(int n, int n_trials, std::uint64_t master_seed);

/// Exact expectation of the same protocol: (N-1)(N+2)/(2N).
double classical_mean_probes_analytic(int n);

}  // namespace ionscope
