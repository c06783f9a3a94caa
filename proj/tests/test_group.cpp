#include <doctest.h>

#include <map>
#include <random>

#include "catgrp/catalog.hpp"
#include "catgrp/errors.hpp"
#include "catgrp/group.hpp"
#include "test_util.hpp"

using namespace catgrp;

TEST_CASE("validate_group accepts Z2 and Z3") {
  CHECK(validate_group({0, 1, 1, 0}).passed);
  const GroupRef z3 = make_cyclic(3);
  const CheckReport r = validate_group(z3->table());
  CHECK(r.passed);
  CHECK_FALSE(r.witness.has_value());
}

TEST_CASE("validate_group witnesses") {
  SUBCASE("missing inverse") {
    // (1,1) -> 1 leaves element 1 without an inverse.
    const CheckReport r = validate_group({0, 1, 1, 1});
    CHECK_FALSE(r.passed);
    CHECK(*r.witness == std::vector<int>{1});
  }
  SUBCASE("identity not at 0") {
    const CheckReport r = validate_group({1, 0, 0, 1});
    CHECK_FALSE(r.passed);
    CHECK(*r.witness == std::vector<int>{0});
  }
  SUBCASE("malformed tables throw") {
    CHECK_THROWS_AS(validate_group({0, 1, 1}), MalformedInputError);
    CHECK_THROWS_AS(validate_group({0, 1, 1, 7}), MalformedInputError);
  }
}

TEST_CASE("validate_group matches a naive reference on corrupted tables") {
  const GroupRef z5 = make_cyclic(5);
  std::mt19937 gen(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> table = z5->table();
    const int pos = int(gen() % table.size());
    table[pos] = int(gen() % 5);
    const CheckReport got = validate_group(table);
    const test::NaiveGroupCheck want = test::naive_validate(table, 5);
    CHECK(got.passed == want.passed);
    if (!want.passed) CHECK(*got.witness == want.witness);
  }
}

TEST_CASE("builtin constructors") {
  SUBCASE("cyclic") {
    CHECK(make_cyclic(1)->order() == 1);
    for (int n = 2; n <= 8; ++n) {
      const GroupRef g = make_cyclic(n);
      CHECK(g->order() == n);
      CHECK(g->element_order(1) == n);
      CHECK(g->is_abelian());
    }
    CHECK_THROWS_AS(make_cyclic(0), ContractError);
  }
  SUBCASE("symmetric matches the documented enumeration") {
    const GroupRef s3 = make_symmetric(3);
    CHECK(s3->order() == 6);
    CHECK(s3->table() == test::s3_table());
    bool commutes = true;
    for (int a = 0; a < 6 && commutes; ++a)
      for (int b = 0; b < 6; ++b)
        if (s3->mul(a, b) != s3->mul(b, a)) {
          commutes = false;
          break;
        }
    CHECK_FALSE(commutes);
    CHECK_THROWS_AS(make_symmetric(0), ContractError);
    CHECK_THROWS_AS(make_symmetric(9), ContractError);
  }
  SUBCASE("dihedral") {
    CHECK(make_dihedral(1)->order() == 2);
    const GroupRef d4 = make_dihedral(4);
    CHECK(d4->order() == 8);
    CHECK_FALSE(d4->is_abelian());
    // reflection * reflection is a rotation
    CHECK(d4->mul(4, 5) < 4);
    CHECK_THROWS_AS(make_dihedral(0), ContractError);
  }
  SUBCASE("quaternion order profile") {
    const GroupRef q8 = make_quaternion8();
    const std::map<int, int> expected = {{1, 1}, {2, 1}, {4, 6}};
    CHECK(q8->order_profile() == expected);
  }
  SUBCASE("alternating A4") {
    const GroupRef a4 = make_alternating4();
    CHECK(a4->order() == 12);
    const std::map<int, int> expected = {{1, 1}, {2, 3}, {3, 8}};
    CHECK(a4->order_profile() == expected);
  }
}

TEST_CASE("order cap") {
  test::CapGuard guard;
  set_order_cap(10);
  CHECK_THROWS_AS(make_cyclic(11), OrderCapError);
  set_order_cap(kDefaultOrderCap);
  CHECK_THROWS_AS(make_symmetric(6), OrderCapError);  // 720 > 200
  set_order_cap(1000);
  CHECK(make_symmetric(6)->order() == 720);
  CHECK_THROWS_AS(set_order_cap(0), ContractError);
}

TEST_CASE("catalog members validate and carry distinct names") {
  std::map<std::string, int> seen;
  for (const GroupRef& g : catalog()) {
    CHECK(validate_group(g->table()).passed);
    CHECK(++seen[g->name()] == 1);
  }
  CHECK(catalog().size() == 16);
}
