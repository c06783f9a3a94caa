#include "catgrp/crossed_module.hpp"

#include "catgrp/errors.hpp"
#include "catgrp/scan.hpp"

namespace catgrp {

namespace {

void validate_structure(const CrossedModule& xm) {
  if (xm.boundary.source != xm.c || xm.boundary.target != xm.g)
    throw ContractError("invariant violated: boundary must map C to G");
  if (!xm.boundary.verified || !is_homomorphism(xm.boundary).passed)
    throw ContractError(
        "invariant violated: boundary is not a verified homomorphism");
  if (xm.action.group != xm.g || xm.action.carrier_group != xm.c)
    throw ContractError("invariant violated: action must be of G on C");
  const CheckReport act = check_group_action(xm.action);
  if (!act.passed)
    throw ContractError("invariant violated: action axioms fail: " +
                        act.detail);
  const CheckReport aut = check_automorphism_action(xm.action);
  if (!aut.passed)
    throw ContractError(
        "invariant violated: action is not by automorphisms: " + aut.detail);
}

}  // namespace

CrossedModule make_crossed_module(GroupRef c, GroupRef g, Hom boundary,
                                  GroupAction action) {
  CrossedModule xm{std::move(c), std::move(g), std::move(boundary),
                   std::move(action)};
  validate_structure(xm);
  return xm;
}

CheckReport check_crossed_module(const CrossedModule& xm) {
  const char* name = "check_crossed_module";
  validate_structure(xm);
  const auto& c = *xm.c;
  const auto& g = *xm.g;
  const auto& d = xm.boundary.map;
  const std::size_t ng = std::size_t(g.order());
  const std::size_t nc = std::size_t(c.order());

  // Equivariance: d(g.c) = g d(c) g^-1.
  auto bad = scan::find_first(ng * nc, [&](std::size_t fl) {
    const int ci = static_cast<int>(fl % nc);
    const int gi = static_cast<int>(fl / nc);
    return d[xm.action.apply(gi, ci)] !=
           g.mul(g.mul(gi, d[ci]), g.inv(gi));
  });
  if (bad != scan::npos) {
    const int ci = static_cast<int>(bad % nc);
    const int gi = static_cast<int>(bad / nc);
    return CheckReport::fail(
        name, {gi, ci},
        "equivariance fails at (g,c)=(" + std::to_string(gi) + "," +
            std::to_string(ci) + "): d(g.c) = " +
            std::to_string(d[xm.action.apply(gi, ci)]) + " but g d(c) g^-1 = " +
            std::to_string(g.mul(g.mul(gi, d[ci]), g.inv(gi))));
  }

  // Peiffer identity: (d c).d' = c d' c^-1.
  bad = scan::find_first(nc * nc, [&](std::size_t fl) {
    const int di = static_cast<int>(fl % nc);
    const int ci = static_cast<int>(fl / nc);
    return xm.action.apply(d[ci], di) != c.mul(c.mul(ci, di), c.inv(ci));
  });
  if (bad != scan::npos) {
    const int di = static_cast<int>(bad % nc);
    const int ci = static_cast<int>(bad / nc);
    return CheckReport::fail(
        name, {ci, di},
        "Peiffer identity fails at (c,d)=(" + std::to_string(ci) + "," +
            std::to_string(di) + ")");
  }
  return CheckReport::pass(name, "equivariance and Peiffer identity hold");
}

CrossedModule inclusion_crossed_module(const Subgroup& n) {
  const CheckReport normal = is_normal(n);
  if (!normal.passed)
    throw NotNormalError("inclusion crossed module needs a normal subgroup: " +
                             normal.detail,
                         *normal.witness);
  return make_crossed_module(n.as_group, n.parent, inclusion_hom(n),
                             conjugation_action_on(n));
}

CrossedModule identity_crossed_module(GroupRef g) {
  return make_crossed_module(g, g, identity_hom(g), conjugation_action(g));
}

CheckReport kernel_abelian_check(const CrossedModule& xm) {
  const char* name = "kernel_abelian_check";
  const CheckReport axioms = check_crossed_module(xm);
  if (!axioms.passed)
    throw ContractError(
        "kernel_abelian_check precondition: crossed-module axioms fail");
  const Subgroup ker = kernel(xm.boundary);
  const auto& k = *ker.as_group;
  for (int a = 0; a < k.order(); ++a)
    for (int b = a + 1; b < k.order(); ++b)
      if (k.mul(a, b) != k.mul(b, a))
        return CheckReport::fail(
            name, {ker.members[a], ker.members[b]},
            "Ker(boundary) is not abelian (internal inconsistency: the "
            "Peiffer identity forces it)");
  return CheckReport::pass(name, "Ker(boundary) of order " +
                                     std::to_string(k.order()) +
                                     " is abelian");
}

CheckReport image_normal_check(const CrossedModule& xm) {
  const char* name = "image_normal_check";
  const CheckReport axioms = check_crossed_module(xm);
  if (!axioms.passed)
    throw ContractError(
        "image_normal_check precondition: crossed-module axioms fail");
  const Subgroup im = image(xm.boundary);
  const CheckReport normal = is_normal(im);
  if (!normal.passed)
    return CheckReport::fail(
        name, *normal.witness,
        "Im(boundary) is not normal in G (internal inconsistency: "
        "equivariance forces it): " +
            normal.detail);
  return CheckReport::pass(
      name, "Im(boundary) of order " + std::to_string(im.size()) +
                " is normal in G");
}

CheckReport check_crossed_module_iso(const CrossedModule& xm,
                                     const CrossedModule& xm2,
                                     const Hom& alpha, const Hom& beta) {
  const char* name = "check_crossed_module_iso";
  if (alpha.source != xm.c || alpha.target != xm2.c || beta.source != xm.g ||
      beta.target != xm2.g)
    throw ContractError("iso endpoints do not match the crossed modules");

  if (!is_homomorphism(alpha).passed || !is_bijective(alpha))
    return CheckReport::fail(name, {0},
                             "alpha is not a bijective homomorphism");
  if (!is_homomorphism(beta).passed || !is_bijective(beta))
    return CheckReport::fail(name, {0},
                             "beta is not a bijective homomorphism");

  // beta o d = d' o alpha.
  for (int c = 0; c < xm.c->order(); ++c)
    if (beta.map[xm.boundary.map[c]] != xm2.boundary.map[alpha.map[c]])
      return CheckReport::fail(
          name, {c}, "beta(d(c)) != d'(alpha(c)) at c = " + std::to_string(c));

  // alpha(g.c) = (beta g).(alpha c).
  for (int g = 0; g < xm.g->order(); ++g)
    for (int c = 0; c < xm.c->order(); ++c)
      if (alpha.map[xm.action.apply(g, c)] !=
          xm2.action.apply(beta.map[g], alpha.map[c]))
        return CheckReport::fail(
            name, {g, c},
            "alpha does not intertwine the actions at (g,c)=(" +
                std::to_string(g) + "," + std::to_string(c) + ")");

  return CheckReport::pass(name, "crossed-module isomorphism verified");
}

}  // namespace catgrp
