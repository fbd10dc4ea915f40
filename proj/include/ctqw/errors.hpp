#pragma once

#include <stdexcept>

namespace ctqw {

// Numerical failure: ambiguous eigenvalue clustering, probabilities outside
// their tolerance band, and similar. Distinct from usage errors so the CLI
// can map it to its own exit code.
struct numerical_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace ctqw
