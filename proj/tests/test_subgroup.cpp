#include <doctest.h>

#include <set>

#include "catgrp/catalog.hpp"
#include "catgrp/errors.hpp"
#include "catgrp/subgroup.hpp"
#include "test_util.hpp"

using namespace catgrp;

namespace {

// Full subset brute force, independent of the generator-closure method.
std::set<std::vector<int>> brute_force_subgroups(const FiniteGroup& g) {
  const int n = g.order();
  std::set<std::vector<int>> subs;
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (mask & (1u << x)) members.push_back(x);
    bool closed = true;
    for (int a : members) {
      for (int b : members) {
        const int p = g.mul(a, b);
        bool found = false;
        for (int m : members) found = found || m == p;
        if (!found) {
          closed = false;
          break;
        }
      }
      if (!closed) break;
    }
    if (closed) subs.insert(members);
  }
  return subs;
}

}  // namespace

TEST_CASE("subgroup construction and validation") {
  const GroupRef s3 = make_symmetric(3);
  const Subgroup pair = generated_subgroup(s3, {1});
  CHECK(pair.members == std::vector<int>{0, 1});
  CHECK(pair.as_group->order() == 2);
  CHECK_THROWS_AS(make_subgroup(s3, {0, 3}), ContractError);  // not closed
  CHECK_THROWS_AS(make_subgroup(s3, {1, 2}), ContractError);  // no identity
  CHECK(trivial_subgroup(s3).size() == 1);
  CHECK(full_subgroup(s3).size() == 6);
}

TEST_CASE("normality and the conjugating witness") {
  const GroupRef s3 = make_symmetric(3);
  SUBCASE("a transposition subgroup is not normal") {
    const Subgroup sub = generated_subgroup(s3, {1});
    const CheckReport r = is_normal(sub);
    REQUIRE_FALSE(r.passed);
    // The witness reproduces the violation.
    const auto& w = *r.witness;
    const int conj = s3->mul(s3->mul(w[0], w[1]), s3->inv(w[0]));
    CHECK_FALSE(sub.contains(conj));
  }
  SUBCASE("A3 is normal, with the expected induced table") {
    const Subgroup a3 = generated_subgroup(s3, {3});
    CHECK(a3.members == std::vector<int>{0, 3, 4});
    CHECK(is_normal(a3).passed);
    CHECK(a3.as_group->table() ==
          std::vector<int>{0, 1, 2, 1, 2, 0, 2, 0, 1});
  }
}

TEST_CASE("all_subgroups matches full subset brute force") {
  for (const char* name : {"S3", "Q8", "D4"}) {
    GroupRef g;
    for (const GroupRef& c : catalog())
      if (c->name() == name) g = c;
    REQUIRE(g);
    const auto expected = brute_force_subgroups(*g);
    std::set<std::vector<int>> got;
    for (const Subgroup& sub : all_subgroups(g)) got.insert(sub.members);
    CHECK(got == expected);
  }
}

TEST_CASE("subgroup counts over the catalog") {
  struct Row {
    const char* name;
    int subgroups;
    int normal;
  };
  for (const Row row : {Row{"S3", 6, 3}, Row{"D4", 10, 6}, Row{"Q8", 6, 6},
                        Row{"A4", 10, 3}}) {
    GroupRef g;
    for (const GroupRef& c : catalog())
      if (c->name() == row.name) g = c;
    REQUIRE(g);
    CHECK(all_subgroups(g).size() == std::size_t(row.subgroups));
    CHECK(normal_subgroups(g).size() == std::size_t(row.normal));
  }
}
