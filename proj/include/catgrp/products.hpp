#pragma once

#include "catgrp/action.hpp"
#include "catgrp/group.hpp"
#include "catgrp/hom.hpp"

namespace catgrp {

// Pair-index convention for every product in this library: the left factor
// is the major index, so (a, b) in A x B sits at a * |B| + b.

struct DirectProduct {
  GroupRef group;
  Hom project_first;    // A x B -> A
  Hom project_second;   // A x B -> B
  Hom inject_first;     // A -> A x B, a -> (a, 1)
  Hom inject_second;    // B -> A x B, b -> (1, b)
};

DirectProduct direct_product(GroupRef a, GroupRef b);

struct SemidirectProduct {
  GroupRef group;       // pairs (c, g), index c * |G| + g
  Hom inject_normal;    // C -> C x| G, c -> (c, 1)
  Hom inject_acting;    // G -> C x| G, g -> (1, g)
  Hom project;          // C x| G -> G
};

// Group on pairs (c, g) with (c,g)*(c',g') = (c * (g.c'), g*g'). The action
// must carry the automorphism-verified flag.
SemidirectProduct semidirect_product(GroupRef c, GroupRef g,
                                     const GroupAction& act);

}  // namespace catgrp
