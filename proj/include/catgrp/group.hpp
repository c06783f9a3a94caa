#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "catgrp/check_report.hpp"

namespace catgrp {

class FiniteGroup;

// Groups are immutable after construction and shared by reference between
// homs, actions and products.
using GroupRef = std::shared_ptr<const FiniteGroup>;

// Default maximum group order. Exhaustive association checks are cubic, so
// construction refuses anything above the cap with a hard error.
inline constexpr int kDefaultOrderCap = 200;

int order_cap();
void set_order_cap(int cap);

// A finite group presented by its full multiplication table. Element 0 is
// always the two-sided identity; `table[g * order + h]` holds g*h.
class FiniteGroup {
 public:
  // Validates the table (identity, inverses, associativity) and throws
  // MalformedInputError / OrderCapError when it is not a group.
  static FiniteGroup from_table(std::string name, std::vector<int> table);
  static GroupRef shared_from_table(std::string name, std::vector<int> table);

  int order() const { return order_; }
  const std::string& name() const { return name_; }
  int mul(int g, int h) const { return table_[g * order_ + h]; }
  int inv(int g) const { return inverses_[g]; }
  static constexpr int identity = 0;

  const std::vector<int>& table() const { return table_; }
  const std::vector<int>& inverses() const { return inverses_; }

  int element_order(int g) const;
  bool is_abelian() const;
  // Multiset of element orders, as order -> count. Isomorphic groups agree.
  std::map<int, int> order_profile() const;

 private:
  FiniteGroup() = default;
  std::string name_;
  int order_ = 0;
  std::vector<int> table_;
  std::vector<int> inverses_;
};

// Checks that a square table is a group with identity 0: element 0 is a
// two-sided identity, every element has a two-sided inverse, and all
// order^3 triples associate. The witness is the first violating element,
// pair or triple in row-major order.
CheckReport validate_group(const std::vector<int>& table);

// Builtin constructors. Element enumeration per builtin:
//   cyclic n      — residues 0..n-1 under addition mod n.
//   dihedral n    — order 2n; 0..n-1 are rotations r^i, n..2n-1 reflections
//                   (i, flip); (i,a)*(j,b) = (i + (-1)^a j mod n, a xor b).
//   symmetric n   — permutations of {0..n-1} in lexicographic order of their
//                   image words; product g*h is "h first, then g". n <= 8.
//   quaternion8   — 0:+1 1:-1 2:+i 3:-i 4:+j 5:-j 6:+k 7:-k.
GroupRef make_cyclic(int n);
GroupRef make_dihedral(int n);
GroupRef make_symmetric(int n);
GroupRef make_quaternion8();

// Permutation word of symmetric-group element g (inverse of the enumeration
// used by make_symmetric). Exposed for tests that need an independent view.
std::vector<int> symmetric_word(int n, int g);

}  // namespace catgrp
