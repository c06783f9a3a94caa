#pragma once

#include <string>
#include <vector>

#include "catgrp/check_report.hpp"
#include "catgrp/group.hpp"
#include "catgrp/subgroup.hpp"

namespace catgrp {

// A total map between two finite groups, tabulated on source indices.
// `verified` is set only by passing the homomorphism check; operations whose
// contract needs a homomorphism insist on the flag.
struct Hom {
  GroupRef source;
  GroupRef target;
  std::vector<int> map;
  bool verified = false;

  int operator()(int g) const { return map[g]; }
};

// Validates totality and range; does not check the homomorphism property.
Hom make_hom(GroupRef source, GroupRef target, std::vector<int> map);

// Passes iff f(g*h) = f(g)*f(h) over all source pairs; witness is the first
// failing pair in row-major order.
CheckReport is_homomorphism(const Hom& f);

// Returns a copy with `verified` set; throws ContractError when the
// homomorphism check fails.
Hom verified_hom(Hom f);

Hom identity_hom(GroupRef g);
Hom trivial_hom(GroupRef source, GroupRef target);
// Embedding of a subgroup's induced group into its parent.
Hom inclusion_hom(const Subgroup& sub);

// g o f. Endpoints must match.
Hom compose(const Hom& g, const Hom& f);

bool is_bijective(const Hom& f);

// Preimage of the target identity. Requires a verified homomorphism.
Subgroup kernel(const Hom& f);
// Set of values of f, as a subgroup of the target. Requires verified f.
Subgroup image(const Hom& f);

}  // namespace catgrp
