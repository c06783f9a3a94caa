#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace catgrp {

// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Input data is structurally broken: non-square table, index out of range,
// wrong map length, comp table not matching the pullback.
struct MalformedInputError : Error {
  using Error::Error;
};

// A documented precondition or type invariant was violated by the caller.
struct ContractError : Error {
  using Error::Error;
};

// Group order exceeds the configured cap.
struct OrderCapError : Error {
  using Error::Error;
};

// A subgroup expected to be normal is not; carries the conjugating witness.
struct NotNormalError : ContractError {
  NotNormalError(const std::string& what, std::vector<int> w)
      : ContractError(what), witness(std::move(w)) {}
  std::vector<int> witness;
};

// A state the math says cannot happen for valid inputs. Raised instead of
// silently accepting a wrong result.
struct InternalInconsistencyError : Error {
  using Error::Error;
};

}  // namespace catgrp
