#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "ionscope/pattern.hpp"

namespace ionscope {

std::uint64_t hash_bins(const std::vector<AnglePair>& bins, int order);

/// Normalized discrete distribution over the bins (resolved slice points) of
/// a pattern. probs[i] = values[i] / sum(values); the cdf is the running sum
/// divided by the same total, so its last entry is exactly 1. Zero-valued
/// bins stay in the support with p = 0 and are never sampled.
class DiscreteDistribution {
public:
  const std::vector<AnglePair>& bins() const { return bins_; }
  const Eigen::ArrayXd& probs() const { return probs_; }
  const Eigen::ArrayXd& cdf() const { return cdf_; }
  int order() const { return order_; }
  std::size_t size() const { return bins_.size(); }

  /// Hash over bins, probs and order; identifies the exact distribution.
  std::uint64_t id() const { return id_; }
  /// Hash over bins and order only; identifies the bin grid, so events can
  /// be scored against other candidates on the same grid.
  std::uint64_t bins_id() const { return bins_id_; }

private:
  friend DiscreteDistribution normalize(const Pattern& pattern);

  std::vector<AnglePair> bins_;
  Eigen::ArrayXd probs_;
  Eigen::ArrayXd cdf_;
  int order_ = 2;
  std::uint64_t id_ = 0;
  std::uint64_t bins_id_ = 0;
};

/// Builds the distribution induced by a pattern. Throws degenerate_error
/// when the pattern has no strictly positive value and std::invalid_argument
/// when it carries a genuinely negative one.
DiscreteDistribution normalize(const Pattern& pattern);

/// Detection record: bin indices drawn from a distribution, plus the seed
/// and source hashes needed to reproduce and validate it.
struct EventSet {
  std::vector<std::int32_t> events;
  std::uint64_t seed = 0;
  std::uint64_t distribution_id = 0;
  std::uint64_t bins_id = 0;

  std::size_t size() const { return events.size(); }
};

/// m inverse-CDF draws using the counter-based generator; identical
/// (dist, m, seed) produce identical events on every platform.
EventSet sample_events(const DiscreteDistribution& dist, std::size_t m,
                       std::uint64_t seed);

/// Fraction of events falling in each bin. All-zero for an empty event set
/// (the zero histogram is the flagged "no data" result; it does not sum
/// to 1). Throws integrity_error when the events were not drawn from `dist`.
Eigen::ArrayXd empirical_histogram(const EventSet& events,
                                   const DiscreteDistribution& dist);

}  // namespace ionscope
