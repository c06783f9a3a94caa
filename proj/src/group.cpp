#include "catgrp/group.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "catgrp/errors.hpp"
#include "catgrp/scan.hpp"

namespace catgrp {

namespace {
int g_order_cap = kDefaultOrderCap;

std::string describe(const std::vector<int>& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << w[i];
  os << ")";
  return os.str();
}
}  // namespace

int order_cap() { return g_order_cap; }

void set_order_cap(int cap) {
  if (cap < 1) throw ContractError("order cap must be positive");
  g_order_cap = cap;
}

CheckReport validate_group(const std::vector<int>& table) {
  const auto total = table.size();
  const int n = static_cast<int>(std::llround(std::sqrt(double(total))));
  if (n == 0 || std::size_t(n) * n != total)
    throw MalformedInputError("multiplication table is not square");
  if (n > g_order_cap)
    throw OrderCapError("group order " + std::to_string(n) +
                        " exceeds the cap of " + std::to_string(g_order_cap));
  for (int v : table)
    if (v < 0 || v >= n)
      throw MalformedInputError("table entry " + std::to_string(v) +
                                " out of range [0," + std::to_string(n) + ")");

  const auto at = [&](int g, int h) { return table[g * n + h]; };

  // Element 0 must be a two-sided identity.
  auto bad = scan::find_first(std::size_t(n), [&](std::size_t i) {
    const int g = static_cast<int>(i);
    return at(0, g) != g || at(g, 0) != g;
  });
  if (bad != scan::npos)
    return CheckReport::fail("validate_group", {int(bad)},
                             "element 0 is not an identity at " +
                                 describe({int(bad)}));

  // Every element needs a two-sided inverse.
  bad = scan::find_first(std::size_t(n), [&](std::size_t i) {
    const int g = static_cast<int>(i);
    for (int h = 0; h < n; ++h)
      if (at(g, h) == 0 && at(h, g) == 0) return false;
    return true;
  });
  if (bad != scan::npos)
    return CheckReport::fail(
        "validate_group", {int(bad)},
        "element " + std::to_string(bad) + " has no two-sided inverse");

  // Associativity over all triples, row-major (a, b, c).
  const std::size_t nn = std::size_t(n);
  bad = scan::find_first(nn * nn * nn, [&](std::size_t i) {
    const int c = static_cast<int>(i % nn);
    const int b = static_cast<int>((i / nn) % nn);
    const int a = static_cast<int>(i / (nn * nn));
    return at(at(a, b), c) != at(a, at(b, c));
  });
  if (bad != scan::npos) {
    const int c = static_cast<int>(bad % nn);
    const int b = static_cast<int>((bad / nn) % nn);
    const int a = static_cast<int>(bad / (nn * nn));
    return CheckReport::fail("validate_group", {a, b, c},
                             "associativity fails at " + describe({a, b, c}));
  }
  return CheckReport::pass("validate_group",
                           "group of order " + std::to_string(n));
}

FiniteGroup FiniteGroup::from_table(std::string name, std::vector<int> table) {
  CheckReport report = validate_group(table);
  if (!report.passed)
    throw MalformedInputError("'" + name + "': " + report.detail);
  FiniteGroup g;
  g.name_ = std::move(name);
  g.order_ = static_cast<int>(std::llround(std::sqrt(double(table.size()))));
  g.table_ = std::move(table);
  g.inverses_.assign(g.order_, 0);
  for (int x = 0; x < g.order_; ++x)
    for (int h = 0; h < g.order_; ++h)
      if (g.mul(x, h) == 0) {
        g.inverses_[x] = h;
        break;
      }
  return g;
}

GroupRef FiniteGroup::shared_from_table(std::string name,
                                        std::vector<int> table) {
  return std::make_shared<const FiniteGroup>(
      from_table(std::move(name), std::move(table)));
}

int FiniteGroup::element_order(int g) const {
  int k = 1;
  int acc = g;
  while (acc != identity) {
    acc = mul(acc, g);
    ++k;
  }
  return k;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

std::map<int, int> FiniteGroup::order_profile() const {
  std::map<int, int> profile;
  for (int g = 0; g < order_; ++g) ++profile[element_order(g)];
  return profile;
}

GroupRef make_cyclic(int n) {
  if (n < 1) throw ContractError("cyclic: n must be >= 1");
  std::vector<int> table(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a * n + b] = (a + b) % n;
  return FiniteGroup::shared_from_table("Z" + std::to_string(n),
                                        std::move(table));
}

GroupRef make_dihedral(int n) {
  if (n < 1) throw ContractError("dihedral: n must be >= 1");
  const int order = 2 * n;
  const auto idx = [&](int rot, int flip) { return flip * n + rot; };
  std::vector<int> table(std::size_t(order) * order);
  for (int a = 0; a < order; ++a) {
    const int i = a % n, fa = a / n;
    for (int b = 0; b < order; ++b) {
      const int j = b % n, fb = b / n;
      const int rot = fa == 0 ? (i + j) % n : ((i - j) % n + n) % n;
      table[a * order + b] = idx(rot, fa ^ fb);
    }
  }
  return FiniteGroup::shared_from_table("D" + std::to_string(n),
                                        std::move(table));
}

std::vector<int> symmetric_word(int n, int g) {
  std::vector<int> word(n);
  std::iota(word.begin(), word.end(), 0);
  for (int i = 0; i < g; ++i) std::next_permutation(word.begin(), word.end());
  return word;
}

GroupRef make_symmetric(int n) {
  if (n < 1 || n > 8)
    throw ContractError("symmetric: n must be in [1,8]");
  int order = 1;
  for (int i = 2; i <= n; ++i) order *= i;

  std::vector<std::vector<int>> words;
  words.reserve(order);
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 0);
  do {
    words.push_back(w);
  } while (std::next_permutation(w.begin(), w.end()));

  std::map<std::vector<int>, int> index;
  for (int i = 0; i < order; ++i) index[words[i]] = i;

  std::vector<int> table(std::size_t(order) * order);
  std::vector<int> prod(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      // g*h applies h first: (g*h)(x) = g(h(x)).
      for (int x = 0; x < n; ++x) prod[x] = words[a][words[b][x]];
      table[a * order + b] = index[prod];
    }
  return FiniteGroup::shared_from_table("S" + std::to_string(n),
                                        std::move(table));
}

GroupRef make_quaternion8() {
  // axis 0 is the scalar 1; axes 1,2,3 are i,j,k. index = 2*axis + (sign<0).
  const auto mul_units = [](int a, int b, int& sign, int& axis) {
    static constexpr int axis_table[4][4] = {
        {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static constexpr int sign_table[4][4] = {
        {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    axis = axis_table[a][b];
    sign = sign_table[a][b];
  };
  std::vector<int> table(64);
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int sign, axis;
      mul_units(a / 2, b / 2, sign, axis);
      if (a % 2) sign = -sign;
      if (b % 2) sign = -sign;
      table[a * 8 + b] = 2 * axis + (sign < 0 ? 1 : 0);
    }
  return FiniteGroup::shared_from_table("Q8", std::move(table));
}

}  // namespace catgrp
