#pragma once

#include "catgrp/action.hpp"
#include "catgrp/check_report.hpp"
#include "catgrp/hom.hpp"
#include "catgrp/products.hpp"
#include "catgrp/subgroup.hpp"

namespace catgrp {

// Split epimorphism s: A -> O with section e: O -> A, s o e = id, decomposed
// as A ~= Ker s x| O. The recovered action is conjugation through the
// section, x.k = e(x) k e(x)^-1, and phi(a) = (a * e(s(a))^-1, s(a)).
struct SplitEpiDecomposition {
  Subgroup kernel_part;       // Ker s inside A
  GroupAction action;         // O on Ker s (as its induced group)
  SemidirectProduct product;  // Ker s x| O
  Hom phi;                    // A -> product.group
  CheckReport report;         // phi is a verified bijective homomorphism
};

// Throws ContractError when s, e are not verified homomorphisms with
// matching endpoints or s o e differs from the identity (the message names
// the first violating element). A failed report afterwards would mean an
// internal bug; it is reported, never silently accepted.
SplitEpiDecomposition split_epi_decompose(const Hom& s, const Hom& e);

}  // namespace catgrp
