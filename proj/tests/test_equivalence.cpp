#include <doctest.h>

#include "catgrp/catalog.hpp"
#include "catgrp/equivalence.hpp"
#include "catgrp/errors.hpp"
#include "test_util.hpp"

using namespace catgrp;

namespace {

CrossedModule a3_s3_xmod() {
  const GroupRef s3 = make_symmetric(3);
  return inclusion_crossed_module(generated_subgroup(s3, {3}, "A3"));
}

}  // namespace

TEST_CASE("xmod_to_internal on standard instances") {
  SUBCASE("trivial crossed module") {
    const GroupRef z1 = make_cyclic(1);
    const InternalCategory ic =
        xmod_to_internal(identity_crossed_module(z1));
    CHECK(ic.graph.arrows->order() == 1);
    CHECK(check_internal_category(ic).passed);
  }
  SUBCASE("A3 in S3") {
    const InternalCategory ic = xmod_to_internal(a3_s3_xmod());
    CHECK(ic.graph.arrows->order() == 18);
    CHECK(ic.graph.objects->order() == 6);
    CHECK(check_internal_category(ic).passed);
    CHECK(check_cat_group_structure(ic).passed);
    CHECK(is_internal_groupoid(ic).passed);
  }
  SUBCASE("one-object category from a trivial boundary") {
    const GroupRef z2 = make_cyclic(2);
    const GroupRef z1 = make_cyclic(1);
    const CrossedModule xm = make_crossed_module(
        z2, z1, trivial_hom(z2, z1), trivial_action(z1, z2));
    const InternalCategory ic = xmod_to_internal(xm);
    CHECK(ic.graph.objects->order() == 1);
    CHECK(ic.graph.arrows->order() == 2);
    CHECK(check_internal_category(ic).passed);
  }
}

TEST_CASE("internal_to_xmod recovers the kernel data") {
  SUBCASE("round shape on A3 in S3") {
    const InternalCategory ic = xmod_to_internal(a3_s3_xmod());
    const CrossedModule xm = internal_to_xmod(ic);
    CHECK(xm.c->order() == 3);
    CHECK(xm.g->order() == 6);
    CHECK(check_crossed_module(xm).passed);
    // The boundary is injective here (an inclusion up to reindexing).
    std::vector<char> seen(6, 0);
    for (int v : xm.boundary.map) {
      CHECK_FALSE(seen[v]);
      seen[v] = 1;
    }
  }
  SUBCASE("discrete category gives a trivial kernel") {
    const GroupRef z4 = make_cyclic(4);
    InternalDigraph dg{z4, z4, identity_hom(z4), identity_hom(z4),
                       identity_hom(z4)};
    std::vector<int> comp(4);
    for (int f = 0; f < 4; ++f) comp[f] = f;
    const CrossedModule xm =
        internal_to_xmod(make_internal_category(std::move(dg), comp));
    CHECK(xm.c->order() == 1);
  }
}

TEST_CASE("t is a homomorphism by the semidirect identity") {
  // t((c,g) * (d,h)) = d(c) g d(d) h over every arrow pair, for every
  // inclusion crossed module of the interesting catalog members.
  std::vector<CrossedModule> suite;
  for (const char* name : {"S3", "D4", "Q8", "A4"}) {
    GroupRef g;
    for (const GroupRef& c : catalog())
      if (c->name() == name) g = c;
    for (const Subgroup& n : normal_subgroups(g))
      suite.push_back(inclusion_crossed_module(n));
  }
  for (const CrossedModule& xm : suite) {
    const InternalCategory ic = xmod_to_internal(xm);
    const auto& a = *ic.graph.arrows;
    const auto& g = *xm.g;
    const int ng = g.order();
    bool all_equal = true;
    for (int p = 0; p < a.order() && all_equal; ++p)
      for (int q = 0; q < a.order(); ++q) {
        const int lhs = ic.graph.tgt.map[a.mul(p, q)];
        const int rhs = g.mul(
            g.mul(g.mul(xm.boundary.map[p / ng], p % ng),
                  xm.boundary.map[q / ng]),
            q % ng);
        if (lhs != rhs) {
          all_equal = false;
          break;
        }
      }
    CHECK(all_equal);
  }
}

TEST_CASE("roundtrip_xmod verifies the canonical isomorphism") {
  SUBCASE("trivial") {
    const XmodRoundtrip rt =
        roundtrip_xmod(identity_crossed_module(make_cyclic(1)));
    CHECK(rt.report.passed);
    CHECK_FALSE(rt.used_fallback);
  }
  SUBCASE("A3 in S3") {
    const XmodRoundtrip rt = roundtrip_xmod(a3_s3_xmod());
    CHECK(rt.report.passed);
    CHECK_FALSE(rt.used_fallback);
    CHECK(rt.iso.verified);
    // beta is the identity on G.
    for (int x = 0; x < 6; ++x) CHECK(rt.iso.beta.map[x] == x);
  }
  SUBCASE("identity crossed module on D4") {
    const XmodRoundtrip rt =
        roundtrip_xmod(identity_crossed_module(make_dihedral(4)));
    CHECK(rt.report.passed);
    CHECK_FALSE(rt.used_fallback);
  }
}

TEST_CASE("roundtrip_internal verifies on constructed categories") {
  SUBCASE("A3 in S3") {
    const InternalCategory ic = xmod_to_internal(a3_s3_xmod());
    CHECK(ic.pairs.size() == 54);
    const InternalRoundtrip rt = roundtrip_internal(ic);
    CHECK(rt.report.passed);
    CHECK(rt.iso.verified);
  }
  SUBCASE("discrete category on Z4") {
    const GroupRef z4 = make_cyclic(4);
    InternalDigraph dg{z4, z4, identity_hom(z4), identity_hom(z4),
                       identity_hom(z4)};
    std::vector<int> comp(4);
    for (int f = 0; f < 4; ++f) comp[f] = f;
    const InternalRoundtrip rt =
        roundtrip_internal(make_internal_category(std::move(dg), comp));
    CHECK(rt.report.passed);
  }
}

TEST_CASE("preconditions are contracts") {
  const GroupRef s3 = make_symmetric(3);
  const GroupRef z1 = make_cyclic(1);
  // Peiffer fails for a trivial boundary on a non-abelian carrier, so the
  // construction must refuse.
  const CrossedModule bad = make_crossed_module(
      s3, z1, trivial_hom(s3, z1), trivial_action(z1, s3));
  CHECK_THROWS_AS(xmod_to_internal(bad), ContractError);

  InternalCategory corrupted = xmod_to_internal(a3_s3_xmod());
  corrupted.comp[3] = (corrupted.comp[3] + 1) % 18;
  CHECK_THROWS_AS(internal_to_xmod(corrupted), ContractError);
  CHECK_THROWS_AS(roundtrip_internal(corrupted), ContractError);
}
