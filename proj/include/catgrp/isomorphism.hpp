#pragma once

#include <optional>

#include "catgrp/hom.hpp"

namespace catgrp {

// Backtracking search for a bijective homomorphism G -> H. Prunes on the
// element-order multiset up front and on element orders of candidate
// generator images; the result is deterministic, with the lexicographically
// least generator-image assignment tried first. Returns the verified
// isomorphism, or nullopt when the groups are not isomorphic.
std::optional<Hom> isomorphism_search(GroupRef g, GroupRef h);

}  // namespace catgrp
