#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace catgrp {

// Outcome of one verification. When a check fails, `witness` holds the
// element indices of the lexicographically first violation in row-major
// scan order, and re-evaluating the named equation at the witness
// reproduces the violation.
struct CheckReport {
  std::string check_name;
  bool passed = true;
  std::optional<std::vector<int>> witness;
  std::string detail;

  static CheckReport pass(std::string name, std::string detail = "ok") {
    return {std::move(name), true, std::nullopt, std::move(detail)};
  }
  static CheckReport fail(std::string name, std::vector<int> witness,
                          std::string detail) {
    return {std::move(name), false, std::move(witness), std::move(detail)};
  }
};

}  // namespace catgrp
