#pragma once

#include <Eigen/Dense>

#include "ionscope/chain.hpp"
#include "ionscope/slice.hpp"

namespace ionscope {

/// Correlation values sampled over a slice, together with the configuration
/// that produced them. `values` has one entry per resolved slice point
/// (row-major with phi1 as the row index for Grid2D) and is kept in raw,
/// unnormalized form so amplitude information stays available to callers.
struct Pattern {
  SliceSpec slice;
  ResolvedSlice resolved;
  Eigen::ArrayXd values;
  IonChain chain;
  ExcitationPulse pulse;
  int order = 2;

  std::size_t size() const { return resolved.size(); }
};

}  // namespace ionscope
