#pragma once

#include <stdexcept>
#include <string>

namespace manakov {

// Input rejected before any computation (CLI exit code 2).
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A numerical contract was violated mid-computation: residual check, snap
// ambiguity, non-integral monodromy (CLI exit code 3).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace exit_code {
inline constexpr int success = 0;
inline constexpr int validation = 2;
inline constexpr int numerical = 3;
inline constexpr int inconclusive = 4;
}  // namespace exit_code

}  // namespace manakov
