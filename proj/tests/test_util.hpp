#pragma once

#include <vector>

#include "catgrp/group.hpp"
#include "catgrp/scan.hpp"

namespace catgrp::test {

// Restores the order cap after a test that changes it.
struct CapGuard {
  int saved = order_cap();
  ~CapGuard() { set_order_cap(saved); }
};

struct ModeGuard {
  scan::Mode saved = scan::mode();
  ~ModeGuard() { scan::set_mode(saved); }
};

// Naive reference validator, kept independent of validate_group: plain
// nested loops, no scan kernel.
struct NaiveGroupCheck {
  bool passed = true;
  std::vector<int> witness;
};

inline NaiveGroupCheck naive_validate(const std::vector<int>& table, int n) {
  const auto at = [&](int a, int b) { return table[a * n + b]; };
  for (int g = 0; g < n; ++g)
    if (at(0, g) != g || at(g, 0) != g) return {false, {g}};
  for (int g = 0; g < n; ++g) {
    bool has_inverse = false;
    for (int h = 0; h < n; ++h)
      if (at(g, h) == 0 && at(h, g) == 0) {
        has_inverse = true;
        break;
      }
    if (!has_inverse) return {false, {g}};
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (at(at(a, b), c) != at(a, at(b, c))) return {false, {a, b, c}};
  return {};
}

// Frozen tables re-derived by an independent implementation of the
// documented conventions (lexicographic permutation words, h-then-g
// composition).
inline const std::vector<int>& s3_table() {
  static const std::vector<int> t = {
      0, 1, 2, 3, 4, 5,  //
      1, 0, 4, 5, 2, 3,  //
      2, 3, 0, 1, 5, 4,  //
      3, 2, 5, 4, 0, 1,  //
      4, 5, 1, 0, 3, 2,  //
      5, 4, 3, 2, 1, 0,
  };
  return t;
}

inline const std::vector<int>& s3_parity() {
  static const std::vector<int> p = {0, 1, 1, 0, 0, 1};
  return p;
}

}  // namespace catgrp::test
