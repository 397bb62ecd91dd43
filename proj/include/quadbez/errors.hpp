#ifndef QUADBEZ_ERRORS_HPP
#define QUADBEZ_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace quadbez {

// Bad user-facing input: unknown gallery name, malformed scalar string,
// a constant polynomial where degree >= 1 is required, and so on.
// The CLI maps this to exit code 2.
class InvalidInput : public std::runtime_error {
 public:
  explicit InvalidInput(const std::string& what) : std::runtime_error(what) {}
};

// A computation that is mathematically well-posed failed numerically: ambiguous
// rank, non-convergent root iteration, a Hermitian residual blowing past its
// bound. The CLI maps this to exit code 3.
class NumericalFailure : public std::runtime_error {
 public:
  explicit NumericalFailure(const std::string& what)
      : std::runtime_error(what) {}
};

}  // namespace quadbez

#endif
