#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "catgrp/catalog.hpp"
#include "catgrp/isomorphism.hpp"
#include "catgrp/products.hpp"

using namespace catgrp;

namespace {

// Existence oracle: try every bijection (feasible up to order 6).
bool iso_exists_brute_force(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return false;
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool is_hom = true;
    for (int a = 0; a < g.order() && is_hom; ++a)
      for (int b = 0; b < g.order(); ++b)
        if (perm[g.mul(a, b)] != h.mul(perm[a], perm[b])) {
          is_hom = false;
          break;
        }
    if (is_hom) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST_CASE("search on (G, G) returns the identity") {
  for (const GroupRef& g : catalog()) {
    const auto iso = isomorphism_search(g, g);
    REQUIRE(iso.has_value());
    for (int x = 0; x < g->order(); ++x) CHECK(iso->map[x] == x);
  }
}

TEST_CASE("classic isomorphism facts") {
  const GroupRef z6 = make_cyclic(6);
  const auto p = direct_product(make_cyclic(2), make_cyclic(3));
  const auto found = isomorphism_search(z6, p.group);
  REQUIRE(found.has_value());
  CHECK(found->verified);
  CHECK(is_bijective(*found));

  CHECK_FALSE(isomorphism_search(make_cyclic(4),
                                 direct_product(make_cyclic(2),
                                                make_cyclic(2))
                                     .group)
                  .has_value());
  CHECK_FALSE(
      isomorphism_search(make_quaternion8(), make_dihedral(4)).has_value());
  CHECK(isomorphism_search(make_dihedral(1), make_cyclic(2)).has_value());
  CHECK(isomorphism_search(make_dihedral(2),
                           direct_product(make_cyclic(2), make_cyclic(2))
                               .group)
            .has_value());

  const GroupRef z8 = make_cyclic(8);
  const GroupRef z2xz4 =
      direct_product(make_cyclic(2), make_cyclic(4)).group;
  CHECK_FALSE(isomorphism_search(z8, z2xz4).has_value());
}

TEST_CASE("search agrees with the all-bijections oracle on small pairs") {
  std::vector<GroupRef> small;
  for (const GroupRef& g : catalog())
    if (g->order() <= 6) small.push_back(g);
  for (const GroupRef& g : small)
    for (const GroupRef& h : small)
      CHECK(isomorphism_search(g, h).has_value() ==
            iso_exists_brute_force(*g, *h));
}

TEST_CASE("search is symmetric over the catalog") {
  const auto& groups = catalog();
  for (const GroupRef& g : groups)
    for (const GroupRef& h : groups)
      CHECK(isomorphism_search(g, h).has_value() ==
            isomorphism_search(h, g).has_value());
}
