#pragma once

#include "catgrp/action.hpp"
#include "catgrp/check_report.hpp"
#include "catgrp/hom.hpp"
#include "catgrp/subgroup.hpp"

namespace catgrp {

// A group homomorphism boundary: C -> G together with a G-action on C by
// automorphisms, subject to equivariance and the Peiffer identity.
struct CrossedModule {
  GroupRef c;
  GroupRef g;
  Hom boundary;        // C -> G
  GroupAction action;  // G on C
};

// Checks the structural invariants (verified boundary homomorphism with the
// right endpoints, automorphism-verified action) and throws ContractError
// naming the failed invariant; use for trusted construction paths.
CrossedModule make_crossed_module(GroupRef c, GroupRef g, Hom boundary,
                                  GroupAction action);

// Structural invariants (ContractError when violated), then the two axioms:
// equivariance d(g.c) = g d(c) g^-1 over all (g, c), and the Peiffer
// identity (d c).d' = c d' c^-1 over all (c, d'). Each axiom carries its own
// witness space; the report holds the first failure.
CheckReport check_crossed_module(const CrossedModule& xm);

// The crossed module (N, G, inclusion, conjugation) of a normal subgroup.
// Throws NotNormalError with the conjugating witness otherwise.
CrossedModule inclusion_crossed_module(const Subgroup& n);

// (G, G, id, conjugation).
CrossedModule identity_crossed_module(GroupRef g);

// Ker(boundary) must be abelian for a valid crossed module; a failure after
// the axioms passed is an internal inconsistency and is reported as such.
CheckReport kernel_abelian_check(const CrossedModule& xm);
// Im(boundary) must be normal in G.
CheckReport image_normal_check(const CrossedModule& xm);

// Isomorphism of crossed modules: bijective homs alpha: C -> C',
// beta: G -> G' with beta o d = d' o alpha and alpha(g.c) =
// (beta g).(alpha c).
CheckReport check_crossed_module_iso(const CrossedModule& xm,
                                     const CrossedModule& xm2,
                                     const Hom& alpha, const Hom& beta);

}  // namespace catgrp
