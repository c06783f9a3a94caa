#include <doctest.h>

#include <vector>

#include "catgrp/catalog.hpp"
#include "catgrp/errors.hpp"
#include "catgrp/hom.hpp"
#include "test_util.hpp"

using namespace catgrp;

namespace {

// Every homomorphism between two small groups, found by filtering all total
// maps; independent of is_homomorphism (plain loops).
std::vector<std::vector<int>> enumerate_homs(const FiniteGroup& g,
                                             const FiniteGroup& h) {
  std::vector<std::vector<int>> result;
  std::vector<int> map(g.order(), 0);
  while (true) {
    bool is_hom = true;
    for (int a = 0; a < g.order() && is_hom; ++a)
      for (int b = 0; b < g.order(); ++b)
        if (map[g.mul(a, b)] != h.mul(map[a], map[b])) {
          is_hom = false;
          break;
        }
    if (is_hom) result.push_back(map);
    int i = 0;
    while (i < g.order() && ++map[i] == h.order()) map[i++] = 0;
    if (i == g.order()) break;
  }
  return result;
}

}  // namespace

TEST_CASE("homomorphism check basics") {
  const GroupRef z4 = make_cyclic(4);
  CHECK(is_homomorphism(identity_hom(z4)).passed);
  CHECK(is_homomorphism(trivial_hom(z4, make_cyclic(3))).passed);

  // x -> x+1 is not a homomorphism; the first failing pair is (0,0).
  std::vector<int> shift = {1, 2, 3, 0};
  const Hom f = make_hom(z4, z4, shift);
  const CheckReport r = is_homomorphism(f);
  REQUIRE_FALSE(r.passed);
  CHECK(*r.witness == std::vector<int>{0, 0});
  // f(0*0) = 1 while f(0)*f(0) = 2.
  CHECK(f.map[z4->mul(0, 0)] == 1);
  CHECK(z4->mul(f.map[0], f.map[0]) == 2);
}

TEST_CASE("make_hom validates shape") {
  const GroupRef z4 = make_cyclic(4);
  const GroupRef z2 = make_cyclic(2);
  CHECK_THROWS_AS(make_hom(z4, z2, {0, 1, 0}), MalformedInputError);
  CHECK_THROWS_AS(make_hom(z4, z2, {0, 1, 0, 2}), MalformedInputError);
  CHECK_THROWS_AS(verified_hom(make_hom(z4, z4, {1, 2, 3, 0})),
                  ContractError);
}

TEST_CASE("kernel and image") {
  const GroupRef s3 = make_symmetric(3);
  const GroupRef z2 = make_cyclic(2);
  const Hom sign = verified_hom(make_hom(s3, z2, test::s3_parity()));

  const Subgroup ker = kernel(sign);
  CHECK(ker.members == std::vector<int>{0, 3, 4});  // the even permutations
  CHECK(is_normal(ker).passed);
  CHECK(image(sign).size() == 2);

  CHECK(kernel(identity_hom(s3)).members == std::vector<int>{0});
  CHECK(image(trivial_hom(s3, z2)).members == std::vector<int>{0});

  Hom unverified = make_hom(s3, z2, test::s3_parity());
  CHECK_THROWS_AS(kernel(unverified), ContractError);
  CHECK_THROWS_AS(image(unverified), ContractError);
}

TEST_CASE("enumerated homs: kernels normal, compositions homomorphic") {
  const GroupRef s3 = make_symmetric(3);
  const GroupRef z2 = make_cyclic(2);
  const GroupRef z4 = make_cyclic(4);
  const GroupRef z6 = make_cyclic(6);

  const auto homs_s3_z2 = enumerate_homs(*s3, *z2);
  CHECK(homs_s3_z2.size() == 2);  // trivial and parity
  const auto homs_z2_z4 = enumerate_homs(*z2, *z4);
  CHECK(homs_z2_z4.size() == 2);  // 1 -> 0 and 1 -> 2
  const auto homs_z6_z4 = enumerate_homs(*z6, *z4);
  CHECK(homs_z6_z4.size() == 2);  // 1 -> 0 and 1 -> 2

  for (const auto& m1 : homs_s3_z2) {
    const Hom f = verified_hom(make_hom(s3, z2, m1));
    CHECK(is_normal(kernel(f)).passed);
    for (const auto& m2 : homs_z2_z4) {
      const Hom g = verified_hom(make_hom(z2, z4, m2));
      const Hom gf = compose(g, f);
      CHECK(gf.verified);
      CHECK(is_homomorphism(gf).passed);
    }
  }
  CHECK_THROWS_AS(
      compose(verified_hom(make_hom(z2, z4, homs_z2_z4[0])),
              verified_hom(make_hom(z6, z4, homs_z6_z4[0]))),
      ContractError);
}
