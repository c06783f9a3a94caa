#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "catgrp/check_report.hpp"
#include "catgrp/hom.hpp"

namespace catgrp {

// Reflexive digraph internal to finite groups: arrow and object groups with
// source/target homomorphisms split by the unit, src o unit = id = tgt o unit.
struct InternalDigraph {
  GroupRef arrows;   // A
  GroupRef objects;  // O
  Hom src;           // A -> O
  Hom tgt;           // A -> O
  Hom unit;          // O -> A
};

// The pullback of composable pairs {(f, g) : tgt f = src g}, enumerated
// row-major with f major. `position` is dense over |A|^2 flat pair indices,
// -1 for non-composable pairs.
struct ComposablePairs {
  int arrow_count = 0;
  std::vector<std::pair<int, int>> list;
  std::vector<int> position;

  int size() const { return static_cast<int>(list.size()); }
  int find(int f, int g) const { return position[f * arrow_count + g]; }
};

// Composition is a dense array over the composable-pair enumeration;
// comp[pairs.find(f, g)] is "f then g". Off-pullback queries have no slot by
// construction.
struct InternalCategory {
  InternalDigraph graph;
  ComposablePairs pairs;
  std::vector<int> comp;

  int compose(int f, int g) const { return comp[pairs.find(f, g)]; }
};

// Homomorphism legs for src, tgt, unit plus both splitting identities.
CheckReport check_internal_digraph(const InternalDigraph& dg);

// Pair enumeration without any precondition; used by parsers before the
// digraph has been checked.
ComposablePairs enumerate_composable_pairs(int arrow_count,
                                           const std::vector<int>& src_map,
                                           const std::vector<int>& tgt_map);

// Requires a valid digraph (ContractError otherwise); verifies that the
// pullback is closed under the componentwise product and contains the unit
// diagonal, then returns the enumeration.
ComposablePairs composable_pairs(const InternalDigraph& dg);

InternalCategory make_internal_category(InternalDigraph graph,
                                        std::vector<int> comp);

// The four legs, in order: (a) source/target compatibility of composites,
// (b) associativity over composable triples, (c) unit arrows neutral on both
// sides, (d) composition as a homomorphism from the pullback group — the
// interchange law. The failing leg is named in the report detail.
CheckReport check_internal_category(const InternalCategory& ic);

// Per-arrow compositional inverses: inv[f] with inv[f] o f = unit(src f) and
// f o inv[f] = unit(tgt f); nullopt when some arrow has none.
std::optional<std::vector<int>> arrow_inverses(const InternalCategory& ic);

// Requires check_internal_category to pass (ContractError otherwise).
CheckReport is_internal_groupoid(const InternalCategory& ic);

// Instance-level check that the category is a group object in Cat: pairwise
// multiplication is functorial (preserves sources, targets, unit arrows and
// composition) and so is pointwise inversion. Requires only structural
// validity of the digraph, so it can be evaluated on fault-injected
// composition tables as well.
CheckReport check_cat_group_structure(const InternalCategory& ic);

}  // namespace catgrp
