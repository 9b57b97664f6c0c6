#pragma once

#include "epist/bigint.hpp"

#include <stdexcept>
#include <string>

namespace epist {

// Domain errors (bad letters, wrong sequence class, malformed input, ...).
// The CLI maps these to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iteration did not reach the requested tolerance; carries the last
// enclosure seen so callers can still inspect it.
struct ConvergenceError : Error {
  ConvergenceError(const std::string& what, BigRat last_lo, BigRat last_hi)
      : Error(what), lo(std::move(last_lo)), hi(std::move(last_hi)) {}
  BigRat lo, hi;
};

struct BudgetError : Error {
  using Error::Error;
};

// An interval-arithmetic certificate straddles its threshold even at the
// precision cap.
struct IndeterminateError : Error {
  using Error::Error;
};

}  // namespace epist
