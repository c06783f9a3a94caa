#include "catgrp/products.hpp"

#include "catgrp/errors.hpp"

namespace catgrp {

DirectProduct direct_product(GroupRef a, GroupRef b) {
  const int na = a->order(), nb = b->order();
  const int n = na * nb;
  const auto idx = [&](int x, int y) { return x * nb + y; };

  std::vector<int> table(std::size_t(n) * n);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y)
      for (int z = 0; z < na; ++z)
        for (int w = 0; w < nb; ++w)
          table[idx(x, y) * n + idx(z, w)] = idx(a->mul(x, z), b->mul(y, w));

  DirectProduct p;
  p.group = FiniteGroup::shared_from_table(a->name() + "x" + b->name(),
                                           std::move(table));

  std::vector<int> pf(n), ps(n), ia(na), ib(nb);
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) {
      pf[idx(x, y)] = x;
      ps[idx(x, y)] = y;
    }
  for (int x = 0; x < na; ++x) ia[x] = idx(x, 0);
  for (int y = 0; y < nb; ++y) ib[y] = idx(0, y);

  p.project_first = verified_hom(make_hom(p.group, a, std::move(pf)));
  p.project_second = verified_hom(make_hom(p.group, b, std::move(ps)));
  p.inject_first = verified_hom(make_hom(a, p.group, std::move(ia)));
  p.inject_second = verified_hom(make_hom(b, p.group, std::move(ib)));
  return p;
}

SemidirectProduct semidirect_product(GroupRef c, GroupRef g,
                                     const GroupAction& act) {
  if (!act.automorphism_verified)
    throw ContractError(
        "semidirect product needs an automorphism-verified action");
  if (act.group != g || act.carrier_group != c)
    throw ContractError("action endpoints do not match the factors");

  const int nc = c->order(), ng = g->order();
  const int n = nc * ng;
  const auto idx = [&](int x, int y) { return x * ng + y; };

  std::vector<int> table(std::size_t(n) * n);
  for (int c1 = 0; c1 < nc; ++c1)
    for (int g1 = 0; g1 < ng; ++g1)
      for (int c2 = 0; c2 < nc; ++c2)
        for (int g2 = 0; g2 < ng; ++g2)
          table[idx(c1, g1) * n + idx(c2, g2)] =
              idx(c->mul(c1, act.apply(g1, c2)), g->mul(g1, g2));

  SemidirectProduct p;
  p.group = FiniteGroup::shared_from_table(c->name() + "x|" + g->name(),
                                           std::move(table));

  std::vector<int> in(nc), ia(ng), pr(n);
  for (int x = 0; x < nc; ++x) in[x] = idx(x, 0);
  for (int y = 0; y < ng; ++y) ia[y] = idx(0, y);
  for (int x = 0; x < nc; ++x)
    for (int y = 0; y < ng; ++y) pr[idx(x, y)] = y;

  p.inject_normal = verified_hom(make_hom(c, p.group, std::move(in)));
  p.inject_acting = verified_hom(make_hom(g, p.group, std::move(ia)));
  p.project = verified_hom(make_hom(p.group, g, std::move(pr)));
  return p;
}

}  // namespace catgrp
