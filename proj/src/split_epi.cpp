#include "catgrp/split_epi.hpp"

#include "catgrp/errors.hpp"

namespace catgrp {

SplitEpiDecomposition split_epi_decompose(const Hom& s, const Hom& e) {
  if (!s.verified || !e.verified)
    throw ContractError("split_epi_decompose needs verified homomorphisms");
  if (s.source != e.target || s.target != e.source)
    throw ContractError("section endpoints do not match the epimorphism");
  const GroupRef a = s.source;
  const GroupRef o = s.target;
  for (int x = 0; x < o->order(); ++x)
    if (s.map[e.map[x]] != x)
      throw ContractError("s(e(x)) != x at x = " + std::to_string(x) +
                          ": the section does not split s");

  SplitEpiDecomposition d;
  d.kernel_part = kernel(s);
  const Subgroup& ker = d.kernel_part;

  // x.k = e(x) k e(x)^-1, expressed in kernel indices. Conjugation keeps
  // s(k) = 1, so the value always lands back in the kernel.
  const int m = ker.size();
  std::vector<int> table(std::size_t(o->order()) * m);
  for (int x = 0; x < o->order(); ++x) {
    const int ex = e.map[x];
    for (int k = 0; k < m; ++k) {
      const int conj = a->mul(a->mul(ex, ker.members[k]), a->inv(ex));
      const int sub = ker.parent_to_sub[conj];
      if (sub < 0)
        throw InternalInconsistencyError(
            "section conjugation left the kernel");
      table[x * m + k] = sub;
    }
  }
  d.action =
      verified_automorphism_action(make_action(o, ker.as_group, table));

  d.product = semidirect_product(ker.as_group, o, d.action);

  // phi(a) = (a * e(s(a))^-1, s(a)), pair-indexed k * |O| + x.
  std::vector<int> phi_map(a->order());
  for (int g = 0; g < a->order(); ++g) {
    const int x = s.map[g];
    const int k = a->mul(g, a->inv(e.map[x]));
    const int sub = ker.parent_to_sub[k];
    if (sub < 0)
      throw InternalInconsistencyError("a * e(s(a))^-1 left the kernel");
    phi_map[g] = sub * o->order() + x;
  }
  d.phi = make_hom(a, d.product.group, std::move(phi_map));

  const CheckReport hom_report = is_homomorphism(d.phi);
  if (!hom_report.passed) {
    d.report = CheckReport::fail(
        "split_epi_decompose", *hom_report.witness,
        "phi is not a homomorphism (internal bug): " + hom_report.detail);
    return d;
  }
  d.phi.verified = true;
  if (!is_bijective(d.phi)) {
    d.report = CheckReport::fail("split_epi_decompose", {0},
                                 "phi is not bijective (internal bug)");
    return d;
  }
  d.report = CheckReport::pass(
      "split_epi_decompose",
      "phi: " + a->name() + " ~= " + d.product.group->name() +
          " is a bijective homomorphism");
  return d;
}

}  // namespace catgrp
