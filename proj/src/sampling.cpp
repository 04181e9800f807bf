#include "ionscope/sampling.hpp"

#include <algorithm>
#include <cstring>
#include <stdexcept>

#include "ionscope/errors.hpp"
#include "ionscope/rng.hpp"

namespace ionscope {

namespace {

// FNV-1a over raw bytes; stable across platforms for identical doubles.
struct Fnv1a {
  std::uint64_t state = 14695981039346656037ULL;

  void add_bytes(const void* data, std::size_t n) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t i = 0; i < n; ++i) {
      state ^= p[i];
      state *= 1099511628211ULL;
    }
  }
  void add(double v) { add_bytes(&v, sizeof v); }
  void add(int v) { add_bytes(&v, sizeof v); }
};

}  // namespace

std::uint64_t hash_bins(const std::vector<AnglePair>& bins, int order) {
  Fnv1a h;
  h.add(order);
  for (const AnglePair& b : bins) {
    h.add(b.phi1);
    if (order == 2) h.add(b.phi2);
  }
  return h.state;
}

DiscreteDistribution normalize(const Pattern& pattern) {
  const Eigen::ArrayXd& v = pattern.values;
  const double vmax = v.size() > 0 ? v.maxCoeff() : 0.0;
  if (!(vmax > 0.0)) {
    throw degenerate_error(
        "normalize: pattern has no strictly positive value and cannot be "
        "normalized (fewer than 2 radiating ions, or a degenerate slice)");
  }

  Eigen::ArrayXd clamped = v;
  for (Eigen::Index i = 0; i < clamped.size(); ++i) {
    if (clamped[i] < 0.0) {
      if (clamped[i] < -1e-9 * vmax) {
        throw std::invalid_argument(
            "normalize: pattern values must be non-negative");
      }
      clamped[i] = 0.0;  // rounding residue only
    }
  }

  // cdf[i] = partial_sum(i) / total keeps the final entry exactly 1 and
  // gives zero-probability bins zero-width intervals, so inverse-CDF lookup
  // can never select them.
  const Eigen::Index n = clamped.size();
  Eigen::ArrayXd cdf(n);
  double running = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    running += clamped[i];
    cdf[i] = running;
  }
  const double total = running;
  DiscreteDistribution dist;
  dist.probs_ = clamped / total;
  dist.cdf_ = cdf / total;
  dist.bins_ = pattern.resolved.points;
  dist.order_ = pattern.order;
  dist.bins_id_ = hash_bins(dist.bins_, dist.order_);

  Fnv1a h;
  h.add(dist.order_);
  for (Eigen::Index i = 0; i < n; ++i) h.add(dist.probs_[i]);
  h.state ^= dist.bins_id_;
  dist.id_ = h.state;
  return dist;
}

EventSet sample_events(const DiscreteDistribution& dist, std::size_t m,
                       std::uint64_t seed) {
  EventSet out;
  out.seed = seed;
  out.distribution_id = dist.id();
  out.bins_id = dist.bins_id();
  out.events.resize(m);
  const Eigen::ArrayXd& cdf = dist.cdf();
  const double* begin = cdf.data();
  const double* end = begin + cdf.size();
  for (std::size_t k = 0; k < m; ++k) {
    const double u = rng::uniform01(seed, k);
    const double* it = std::upper_bound(begin, end, u);
    // u < 1 = cdf.back(), so `it` is always a valid bin.
    out.events[k] = static_cast<std::int32_t>(it - begin);
  }
  return out;
}

Eigen::ArrayXd empirical_histogram(const EventSet& events,
                                   const DiscreteDistribution& dist) {
  if (events.distribution_id != dist.id()) {
    throw integrity_error(
        "empirical_histogram: events were not drawn from this distribution "
        "(hash mismatch)");
  }
  Eigen::ArrayXd freq = Eigen::ArrayXd::Zero(static_cast<Eigen::Index>(dist.size()));
  if (events.events.empty()) return freq;  // flagged all-zero result
  for (const std::int32_t e : events.events) {
    if (e < 0 || static_cast<std::size_t>(e) >= dist.size()) {
      throw integrity_error("empirical_histogram: event index out of range");
    }
    freq[e] += 1.0;
  }
  return freq / static_cast<double>(events.events.size());
}

}  // namespace ionscope
