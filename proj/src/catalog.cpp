#include "catgrp/catalog.hpp"

#include "catgrp/hom.hpp"
#include "catgrp/products.hpp"
#include "catgrp/subgroup.hpp"

namespace catgrp {

std::vector<int> symmetric_parity_map(int n) {
  int order = 1;
  for (int i = 2; i <= n; ++i) order *= i;
  std::vector<int> parity(order);
  for (int g = 0; g < order; ++g) {
    const std::vector<int> word = symmetric_word(n, g);
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (word[i] > word[j]) ++inversions;
    parity[g] = inversions % 2;
  }
  return parity;
}

GroupRef make_alternating4() {
  const GroupRef s4 = make_symmetric(4);
  const Hom sign =
      verified_hom(make_hom(s4, make_cyclic(2), symmetric_parity_map(4)));
  const Subgroup even = kernel(sign);
  return FiniteGroup::shared_from_table("A4", even.as_group->table());
}

const std::vector<GroupRef>& catalog() {
  static const std::vector<GroupRef> groups = [] {
    std::vector<GroupRef> g;
    for (int n = 1; n <= 8; ++n) g.push_back(make_cyclic(n));
    const GroupRef z2 = g[1];
    const GroupRef z4 = g[3];
    auto rename = [](const DirectProduct& p, const std::string& name) {
      return FiniteGroup::shared_from_table(name, p.group->table());
    };
    g.push_back(rename(direct_product(z2, z2), "Z2xZ2"));
    g.push_back(rename(direct_product(z2, z4), "Z2xZ4"));
    g.push_back(rename(direct_product(z2, direct_product(z2, z2).group),
                       "Z2xZ2xZ2"));
    g.push_back(make_symmetric(3));
    g.push_back(make_dihedral(4));
    g.push_back(make_quaternion8());
    g.push_back(make_dihedral(5));
    g.push_back(make_alternating4());
    return g;
  }();
  return groups;
}

}  // namespace catgrp
