#pragma once

#include <vector>

#include "catgrp/check_report.hpp"
#include "catgrp/group.hpp"

namespace catgrp {

// A subgroup of `parent`, with the induced group on its members. Members are
// sorted parent indices; member 0 is always the parent identity, so the
// induced group keeps the identity-at-0 convention. `parent_to_sub[p]` is the
// member position of parent element p, or -1.
struct Subgroup {
  GroupRef parent;
  std::vector<int> members;
  GroupRef as_group;
  std::vector<int> parent_to_sub;

  int size() const { return static_cast<int>(members.size()); }
  bool contains(int parent_element) const {
    return parent_to_sub[parent_element] >= 0;
  }
};

// Builds the subgroup on an explicit member set; throws ContractError when
// the set is not closed under product and inverse or misses the identity.
Subgroup make_subgroup(GroupRef parent, std::vector<int> members,
                       std::string name = "");

// Closure of a generating set.
Subgroup generated_subgroup(GroupRef parent, const std::vector<int>& gens,
                            std::string name = "");

Subgroup trivial_subgroup(GroupRef parent);
Subgroup full_subgroup(GroupRef parent);

// Passes iff g n g^-1 stays in the subgroup for every g in the parent and n
// in the subgroup; the witness is the first conjugating pair (g, n).
CheckReport is_normal(const Subgroup& sub);

// All subgroups, by closing every generating subset of size <= 3 and
// deduplicating. Complete for groups whose subgroups are all 3-generated,
// which covers every group this library's catalog ships.
std::vector<Subgroup> all_subgroups(GroupRef parent);

std::vector<Subgroup> normal_subgroups(GroupRef parent);

}  // namespace catgrp
