#pragma once

#include <stdexcept>

namespace ionscope {

/// A slice resolved to zero points, or a pattern has no positive value to
/// normalize (e.g. fewer than two radiating ions for a coincidence pattern).
struct degenerate_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Events were paired with a distribution they do not belong to (bin grids or
/// source hashes disagree).
struct integrity_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ionscope
