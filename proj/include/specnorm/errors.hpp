#pragma once

#include <stdexcept>
#include <string>

namespace specnorm {

// Input files that fail to parse. The CLI maps this to exit code 2.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Out-of-range parameters and dimension mismatches. Exit code 3.
class ParameterError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Numerical failures: non-convergence, annihilated iterates, oracle size cap.
// Exit code 4.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

// Also rejects NaN.
inline void require_open_unit(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0)) {
    throw ParameterError(std::string(name) + " must lie in the open interval (0, 1)");
  }
}

}  // namespace detail

}  // namespace specnorm
