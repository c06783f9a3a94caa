#pragma once

#include <vector>

#include "catgrp/check_report.hpp"
#include "catgrp/group.hpp"

namespace catgrp {

// A total map between plain finite sets, for structure maps that need not
// be homomorphisms.
struct FinSetMap {
  int source_size = 0;
  int target_size = 0;
  std::vector<int> map;

  int operator()(int x) const { return map[x]; }
};

FinSetMap make_finset_map(int source_size, int target_size,
                          std::vector<int> map);
FinSetMap finset_identity(int size);

enum class Ambient { FinSet, FinGrp };

// Candidate group-object data on a carrier: a binary operation m on pair
// indices (left factor major), a point e, and a unary i. In the FinGrp
// ambient the carrier is a group and the maps must additionally be
// homomorphisms (m from the direct-product group).
struct GroupObjectCandidate {
  Ambient ambient = Ambient::FinSet;
  int carrier_size = 0;
  GroupRef carrier_group;  // set when ambient == FinGrp
  FinSetMap m;             // carrier^2 -> carrier
  FinSetMap e;             // one-point set -> carrier
  FinSetMap i;             // carrier -> carrier
};

// A group viewed as the candidate built from its own table, identity and
// inverses.
GroupObjectCandidate group_as_candidate(GroupRef g, Ambient ambient);

// Associativity square plus both unit triangles; in FinGrp also m and e as
// homomorphisms.
CheckReport check_monoid_object(const GroupObjectCandidate& cand);

// Monoid legs plus both inverse diagrams m(i(g),g) = e = m(g,i(g)); in
// FinGrp also i as a homomorphism.
CheckReport check_group_object(const GroupObjectCandidate& cand);

// (x star y) dot (z star w) = (x dot z) star (y dot w) over all quadruples.
CheckReport check_interchange(int carrier_size, const FinSetMap& star,
                              const FinSetMap& dot);

// For a candidate that passed check_group_object in FinGrp: confirms that m
// coincides with the carrier's native table and that the native table is
// commutative. Both facts are reported in the detail. Throws ContractError
// when the precondition fails.
CheckReport eckmann_hilton(const GroupObjectCandidate& cand);

// Candidate cogroup data in finite Set: a comultiplication into the tagged
// disjoint union C + C. Values v in [0, 2n) encode side v / n, element
// v % n. The counit would have to reach the empty set, so only the empty
// carrier can pass.
struct CogroupCandidate {
  int carrier_size = 0;
  std::vector<int> w;  // carrier -> carrier + carrier
};

CogroupCandidate make_cogroup_candidate(int carrier_size, std::vector<int> w);

// Co-associativity alone: both composites C -> C + C + C agree after the
// canonical left-associated flattening.
CheckReport check_cogroup_coassociativity(const CogroupCandidate& cand);

// Co-associativity plus the counit/co-inverse legs. Nonempty carriers fail
// on the counit leg: no map to the initial object exists.
CheckReport check_cogroup_object(const CogroupCandidate& cand);

}  // namespace catgrp
