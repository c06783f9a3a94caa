#pragma once

#include <vector>

#include "catgrp/check_report.hpp"
#include "catgrp/group.hpp"
#include "catgrp/subgroup.hpp"

namespace catgrp {

// A left action of `group` tabulated as one permutation row per group
// element: `table[g * carrier_size + x]` is g acting on x. The carrier is a
// plain finite set unless `carrier_group` is set, in which case the rows can
// additionally be checked to be automorphisms.
struct GroupAction {
  GroupRef group;
  GroupRef carrier_group;  // null when acting on a plain set
  int carrier_size = 0;
  std::vector<int> table;
  bool automorphism_verified = false;

  int apply(int g, int x) const { return table[g * carrier_size + x]; }
};

GroupAction make_action(GroupRef group, GroupRef carrier,
                        std::vector<int> table);
GroupAction make_set_action(GroupRef group, int carrier_size,
                            std::vector<int> table);

// The two action axioms, checked exhaustively: the identity row is the
// identity permutation (witness [x]) and g(h x) = (g*h) x (witness [g,h,x]).
CheckReport check_group_action(const GroupAction& act);

// For group carriers: every row must be a bijection preserving the carrier
// product. Witness [g,x,y] at the first g(x*y) != g(x)*g(y).
CheckReport check_automorphism_action(const GroupAction& act);

// Runs both checks and stamps the flag; throws ContractError on failure.
GroupAction verified_automorphism_action(GroupAction act);

GroupAction trivial_action(GroupRef group, GroupRef carrier);
// g . x = g*x on the group's own element set (a set action, not by
// automorphisms).
GroupAction left_translation_action(GroupRef group);
// g . x = g*x*g^-1 on the group itself.
GroupAction conjugation_action(GroupRef group);
// Conjugation of the parent on a normal subgroup, in subgroup indices.
// Throws NotNormalError when conjugation leaves the subgroup.
GroupAction conjugation_action_on(const Subgroup& sub);

}  // namespace catgrp
