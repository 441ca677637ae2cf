#pragma once

#include <stdexcept>

namespace ptower {

/// An iterative method ran out of iterations before reaching its tolerance.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ptower
