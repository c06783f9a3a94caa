#include <doctest.h>

#include "catgrp/catalog.hpp"
#include "catgrp/crossed_module.hpp"
#include "catgrp/errors.hpp"
#include "test_util.hpp"

using namespace catgrp;

namespace {

Subgroup a3_in_s3() {
  const GroupRef s3 = make_symmetric(3);
  return generated_subgroup(s3, {3}, "A3");
}

}  // namespace

TEST_CASE("identity crossed modules pass") {
  for (const char* name : {"Z6", "S3", "D4", "Q8"}) {
    GroupRef g;
    for (const GroupRef& c : catalog())
      if (c->name() == name) g = c;
    const CrossedModule xm = identity_crossed_module(g);
    CHECK(check_crossed_module(xm).passed);
    CHECK(kernel_abelian_check(xm).passed);
    CHECK(image_normal_check(xm).passed);
  }
}

TEST_CASE("A3 in S3 with conjugation is a crossed module") {
  const CrossedModule xm = inclusion_crossed_module(a3_in_s3());
  CHECK(check_crossed_module(xm).passed);
  CHECK(kernel_abelian_check(xm).passed);
  const CheckReport im = image_normal_check(xm);
  CHECK(im.passed);
}

TEST_CASE("the trivial action on A3 breaks equivariance") {
  const Subgroup a3 = a3_in_s3();
  const GroupRef s3 = a3.parent;
  const CrossedModule broken =
      make_crossed_module(a3.as_group, s3, inclusion_hom(a3),
                          trivial_action(s3, a3.as_group));
  const CheckReport r = check_crossed_module(broken);
  REQUIRE_FALSE(r.passed);
  CHECK(r.detail.find("equivariance") != std::string::npos);
  // Frozen by an independent scan: g = 1 (a transposition), c = 1
  // (a 3-cycle); d(g.c) = 3 while g d(c) g^-1 = 4.
  CHECK(*r.witness == std::vector<int>{1, 1});
  CHECK(broken.boundary.map[broken.action.apply(1, 1)] == 3);
  CHECK(s3->mul(s3->mul(1, broken.boundary.map[1]), s3->inv(1)) == 4);
}

TEST_CASE("inclusion crossed modules need a normal subgroup") {
  const GroupRef s3 = make_symmetric(3);
  const Subgroup transposition = generated_subgroup(s3, {1});
  try {
    inclusion_crossed_module(transposition);
    FAIL("expected NotNormalError");
  } catch (const NotNormalError& e) {
    REQUIRE(e.witness.size() == 2);
    const int conj =
        s3->mul(s3->mul(e.witness[0], e.witness[1]), s3->inv(e.witness[0]));
    CHECK_FALSE(transposition.contains(conj));
  }

  // N = G gives the identity crossed module up to the induced renaming.
  const CrossedModule full = inclusion_crossed_module(full_subgroup(s3));
  CHECK(check_crossed_module(full).passed);
  CHECK(full.c->order() == s3->order());
}

TEST_CASE("trivial boundary needs an abelian source") {
  const GroupRef z2 = make_cyclic(2);
  const GroupRef z1 = make_cyclic(1);
  const CrossedModule xm = make_crossed_module(
      z2, z1, trivial_hom(z2, z1), trivial_action(z1, z2));
  CHECK(check_crossed_module(xm).passed);
  CHECK(kernel_abelian_check(xm).passed);

  const GroupRef s3 = make_symmetric(3);
  const CrossedModule bad = make_crossed_module(
      s3, z1, trivial_hom(s3, z1), trivial_action(z1, s3));
  const CheckReport r = check_crossed_module(bad);
  REQUIRE_FALSE(r.passed);  // Peiffer forces the source abelian
  CHECK(r.detail.find("Peiffer") != std::string::npos);
}

TEST_CASE("every normal subgroup of the catalog gives a crossed module") {
  for (const char* name : {"S3", "D4", "Q8", "A4"}) {
    GroupRef g;
    for (const GroupRef& c : catalog())
      if (c->name() == name) g = c;
    for (const Subgroup& n : normal_subgroups(g)) {
      const CrossedModule xm = inclusion_crossed_module(n);
      CHECK(check_crossed_module(xm).passed);
      CHECK(kernel_abelian_check(xm).passed);
      CHECK(image_normal_check(xm).passed);
    }
  }
}

TEST_CASE("single action-table faults never go unnoticed") {
  const CrossedModule good = inclusion_crossed_module(a3_in_s3());
  const int rows = good.g->order();
  const int cols = good.c->order();
  for (int pos = 0; pos < rows * cols; ++pos) {
    for (int delta = 1; delta < cols; ++delta) {
      CrossedModule mutant = good;
      mutant.action.table[pos] = (mutant.action.table[pos] + delta) % cols;
      bool caught = false;
      try {
        caught = !check_crossed_module(mutant).passed;
      } catch (const ContractError&) {
        caught = true;  // action axioms or automorphism rows broke
      }
      CHECK(caught);
    }
  }
}

TEST_CASE("crossed module structure invariants are enforced") {
  const GroupRef z4 = make_cyclic(4);
  const GroupRef z2 = make_cyclic(2);
  // Boundary that is not a homomorphism.
  CHECK_THROWS_AS(
      make_crossed_module(z4, z4, make_hom(z4, z4, {1, 2, 3, 0}),
                          trivial_action(z4, z4)),
      ContractError);
  // Action endpoints that do not match.
  CHECK_THROWS_AS(
      make_crossed_module(z4, z2, trivial_hom(z4, z2),
                          trivial_action(z4, z4)),
      ContractError);
}
