#include "catgrp/internal_category.hpp"

#include <string>

#include "catgrp/errors.hpp"
#include "catgrp/scan.hpp"

namespace catgrp {

namespace {

std::string tuple_str(std::initializer_list<int> xs) {
  std::string s = "(";
  bool first = true;
  for (int x : xs) {
    if (!first) s += ",";
    s += std::to_string(x);
    first = false;
  }
  return s + ")";
}

}  // namespace

CheckReport check_internal_digraph(const InternalDigraph& dg) {
  const char* name = "check_internal_digraph";
  struct Leg {
    const Hom* hom;
    const char* label;
  };
  for (const Leg leg : {Leg{&dg.src, "src"}, Leg{&dg.tgt, "tgt"},
                        Leg{&dg.unit, "unit"}}) {
    const CheckReport r = is_homomorphism(*leg.hom);
    if (!r.passed)
      return CheckReport::fail(name, *r.witness,
                               std::string(leg.label) +
                                   " is not a homomorphism: " + r.detail);
  }
  if (dg.src.source != dg.arrows || dg.src.target != dg.objects ||
      dg.tgt.source != dg.arrows || dg.tgt.target != dg.objects ||
      dg.unit.source != dg.objects || dg.unit.target != dg.arrows)
    throw MalformedInputError("digraph map endpoints do not match A and O");

  const std::size_t no = std::size_t(dg.objects->order());
  const auto bad = scan::find_first(no, [&](std::size_t x) {
    return dg.src.map[dg.unit.map[x]] != static_cast<int>(x) ||
           dg.tgt.map[dg.unit.map[x]] != static_cast<int>(x);
  });
  if (bad != scan::npos)
    return CheckReport::fail(
        name, {int(bad)},
        "splitting fails: src(unit(x)) or tgt(unit(x)) differs from x at x = " +
            std::to_string(bad));
  return CheckReport::pass(name);
}

ComposablePairs enumerate_composable_pairs(int arrow_count,
                                           const std::vector<int>& src_map,
                                           const std::vector<int>& tgt_map) {
  ComposablePairs pairs;
  pairs.arrow_count = arrow_count;
  pairs.position.assign(std::size_t(arrow_count) * arrow_count, -1);
  for (int f = 0; f < arrow_count; ++f)
    for (int g = 0; g < arrow_count; ++g)
      if (tgt_map[f] == src_map[g]) {
        pairs.position[f * arrow_count + g] =
            static_cast<int>(pairs.list.size());
        pairs.list.emplace_back(f, g);
      }
  return pairs;
}

ComposablePairs composable_pairs(const InternalDigraph& dg) {
  const CheckReport digraph = check_internal_digraph(dg);
  if (!digraph.passed)
    throw ContractError("composable_pairs needs a valid digraph: " +
                        digraph.detail);
  ComposablePairs pairs = enumerate_composable_pairs(
      dg.arrows->order(), dg.src.map, dg.tgt.map);

  // Guard: the pullback must be a subgroup of A x A and contain the unit
  // diagonal. Impossible to violate with verified homomorphisms.
  const auto& a = *dg.arrows;
  for (const auto& [f, g] : pairs.list)
    for (const auto& [f2, g2] : pairs.list)
      if (pairs.find(a.mul(f, f2), a.mul(g, g2)) < 0)
        throw InternalInconsistencyError(
            "composable pairs are not closed under the componentwise product");
  for (int x = 0; x < dg.objects->order(); ++x)
    if (pairs.find(dg.unit.map[x], dg.unit.map[x]) < 0)
      throw InternalInconsistencyError(
          "unit diagonal missing from the pullback");
  return pairs;
}

InternalCategory make_internal_category(InternalDigraph graph,
                                        std::vector<int> comp) {
  ComposablePairs pairs = enumerate_composable_pairs(
      graph.arrows->order(), graph.src.map, graph.tgt.map);
  if (comp.size() != pairs.list.size())
    throw MalformedInputError(
        "composition table has " + std::to_string(comp.size()) +
        " entries but the pullback has " + std::to_string(pairs.list.size()));
  for (int v : comp)
    if (v < 0 || v >= graph.arrows->order())
      throw MalformedInputError("composition value out of range");
  return InternalCategory{std::move(graph), std::move(pairs),
                          std::move(comp)};
}

CheckReport check_internal_category(const InternalCategory& ic) {
  const char* name = "check_internal_category";
  const CheckReport digraph = check_internal_digraph(ic.graph);
  if (!digraph.passed)
    throw ContractError("check_internal_category needs a valid digraph: " +
                        digraph.detail);
  if (ic.comp.size() != ic.pairs.list.size())
    throw MalformedInputError("composition is not total on the pullback");

  const auto& a = *ic.graph.arrows;
  const auto& src = ic.graph.src.map;
  const auto& tgt = ic.graph.tgt.map;
  const auto& unit = ic.graph.unit.map;
  const std::size_t np = std::size_t(ic.pairs.size());

  // Leg (a): composites have the source of f and the target of g.
  auto bad = scan::find_first(np, [&](std::size_t p) {
    const auto [f, g] = ic.pairs.list[p];
    const int c = ic.comp[p];
    return src[c] != src[f] || tgt[c] != tgt[g];
  });
  if (bad != scan::npos) {
    const auto [f, g] = ic.pairs.list[bad];
    return CheckReport::fail(
        name, {f, g},
        "leg source-target: composite of " + tuple_str({f, g}) +
            " has wrong source or target");
  }

  // Leg (b): associativity over composable triples (f, g, h), enumerated
  // from the pairs list with h ranging over arrows out of tgt(g).
  const int na = a.order();
  bad = scan::find_first(np * std::size_t(na), [&](std::size_t fl) {
    const int h = static_cast<int>(fl % na);
    const auto [f, g] = ic.pairs.list[fl / na];
    if (src[h] != tgt[g]) return false;
    const int gf = ic.comp[ic.pairs.find(f, g)];
    const int hg = ic.comp[ic.pairs.find(g, h)];
    return ic.comp[ic.pairs.find(gf, h)] != ic.comp[ic.pairs.find(f, hg)];
  });
  if (bad != scan::npos) {
    const int h = static_cast<int>(bad % na);
    const auto [f, g] = ic.pairs.list[bad / na];
    return CheckReport::fail(
        name, {f, g, h},
        "leg associativity: h o (g o f) != (h o g) o f at " +
            tuple_str({f, g, h}));
  }

  // Leg (c): unit arrows are neutral on both sides.
  bad = scan::find_first(std::size_t(na), [&](std::size_t fi) {
    const int f = static_cast<int>(fi);
    return ic.comp[ic.pairs.find(f, unit[tgt[f]])] != f ||
           ic.comp[ic.pairs.find(unit[src[f]], f)] != f;
  });
  if (bad != scan::npos)
    return CheckReport::fail(
        name, {int(bad)},
        "leg identities: unit arrows are not neutral for arrow " +
            std::to_string(bad));

  // Leg (d): composition is a homomorphism from the pullback group — the
  // interchange law (g o f) * (g' o f') = (g * g') o (f * f').
  bad = scan::find_first(np * np, [&](std::size_t fl) {
    const auto [f, g] = ic.pairs.list[fl / np];
    const auto [f2, g2] = ic.pairs.list[fl % np];
    return a.mul(ic.comp[fl / np], ic.comp[fl % np]) !=
           ic.comp[ic.pairs.find(a.mul(f, f2), a.mul(g, g2))];
  });
  if (bad != scan::npos) {
    const auto [f, g] = ic.pairs.list[bad / np];
    const auto [f2, g2] = ic.pairs.list[bad % np];
    return CheckReport::fail(
        name, {f, g, f2, g2},
        "leg interchange: (g o f) * (g' o f') != (g * g') o (f * f') at " +
            tuple_str({f, g, f2, g2}));
  }
  return CheckReport::pass(name, "all four legs hold on " +
                                     std::to_string(np) +
                                     " composable pairs");
}

std::optional<std::vector<int>> arrow_inverses(const InternalCategory& ic) {
  const auto& src = ic.graph.src.map;
  const auto& tgt = ic.graph.tgt.map;
  const auto& unit = ic.graph.unit.map;
  const int na = ic.graph.arrows->order();
  std::vector<int> inv(na, -1);
  for (int f = 0; f < na; ++f) {
    for (int cand = 0; cand < na; ++cand) {
      if (src[cand] != tgt[f] || tgt[cand] != src[f]) continue;
      if (ic.comp[ic.pairs.find(f, cand)] == unit[src[f]] &&
          ic.comp[ic.pairs.find(cand, f)] == unit[tgt[f]]) {
        inv[f] = cand;
        break;
      }
    }
    if (inv[f] < 0) return std::nullopt;
  }
  return inv;
}

CheckReport is_internal_groupoid(const InternalCategory& ic) {
  const char* name = "is_internal_groupoid";
  const CheckReport cat = check_internal_category(ic);
  if (!cat.passed)
    throw ContractError(
        "is_internal_groupoid precondition: check_internal_category fails: " +
        cat.detail);

  const auto& src = ic.graph.src.map;
  const auto& tgt = ic.graph.tgt.map;
  const auto& unit = ic.graph.unit.map;
  const int na = ic.graph.arrows->order();
  for (int f = 0; f < na; ++f) {
    bool found = false;
    for (int cand = 0; cand < na && !found; ++cand) {
      if (src[cand] != tgt[f] || tgt[cand] != src[f]) continue;
      found = ic.comp[ic.pairs.find(f, cand)] == unit[src[f]] &&
              ic.comp[ic.pairs.find(cand, f)] == unit[tgt[f]];
    }
    if (!found)
      return CheckReport::fail(
          name, {f},
          "arrow " + std::to_string(f) + " has no compositional inverse");
  }
  return CheckReport::pass(
      name, "every arrow has a two-sided compositional inverse");
}

CheckReport check_cat_group_structure(const InternalCategory& ic) {
  const char* name = "check_cat_group_structure";
  const CheckReport digraph = check_internal_digraph(ic.graph);
  if (!digraph.passed)
    throw ContractError("check_cat_group_structure needs a valid digraph: " +
                        digraph.detail);
  if (ic.comp.size() != ic.pairs.list.size())
    throw MalformedInputError("composition is not total on the pullback");

  const auto& a = *ic.graph.arrows;
  const auto& o = *ic.graph.objects;
  const auto& src = ic.graph.src.map;
  const auto& tgt = ic.graph.tgt.map;
  const auto& unit = ic.graph.unit.map;
  const std::size_t na = std::size_t(a.order());
  const std::size_t no = std::size_t(o.order());
  const std::size_t np = std::size_t(ic.pairs.size());

  // mu preserves sources and targets of arrows.
  auto bad = scan::find_first(na * na, [&](std::size_t fl) {
    const int f = static_cast<int>(fl / na);
    const int g = static_cast<int>(fl % na);
    return src[a.mul(f, g)] != o.mul(src[f], src[g]) ||
           tgt[a.mul(f, g)] != o.mul(tgt[f], tgt[g]);
  });
  if (bad != scan::npos) {
    const int f = static_cast<int>(bad / na);
    const int g = static_cast<int>(bad % na);
    return CheckReport::fail(name, {f, g},
                             "mu does not preserve sources/targets at " +
                                 tuple_str({f, g}));
  }

  // mu preserves unit arrows.
  bad = scan::find_first(no * no, [&](std::size_t fl) {
    const int x = static_cast<int>(fl / no);
    const int y = static_cast<int>(fl % no);
    return unit[o.mul(x, y)] != a.mul(unit[x], unit[y]);
  });
  if (bad != scan::npos) {
    const int x = static_cast<int>(bad / no);
    const int y = static_cast<int>(bad % no);
    return CheckReport::fail(name, {x, y},
                             "mu does not preserve unit arrows at " +
                                 tuple_str({x, y}));
  }

  // mu preserves composition: mu(g o f, g' o f') = mu(g,g') o mu(f,f').
  bad = scan::find_first(np * np, [&](std::size_t fl) {
    const auto [f, g] = ic.pairs.list[fl / np];
    const auto [f2, g2] = ic.pairs.list[fl % np];
    return a.mul(ic.comp[fl / np], ic.comp[fl % np]) !=
           ic.comp[ic.pairs.find(a.mul(f, f2), a.mul(g, g2))];
  });
  if (bad != scan::npos) {
    const auto [f, g] = ic.pairs.list[bad / np];
    const auto [f2, g2] = ic.pairs.list[bad % np];
    return CheckReport::fail(name, {f, g, f2, g2},
                             "mu is not functorial on composition at " +
                                 tuple_str({f, g, f2, g2}));
  }

  // iota preserves sources, targets and unit arrows.
  bad = scan::find_first(na, [&](std::size_t f) {
    return src[a.inv(static_cast<int>(f))] != o.inv(src[f]) ||
           tgt[a.inv(static_cast<int>(f))] != o.inv(tgt[f]);
  });
  if (bad != scan::npos)
    return CheckReport::fail(
        name, {int(bad)},
        "iota does not preserve sources/targets at arrow " +
            std::to_string(bad));
  bad = scan::find_first(no, [&](std::size_t x) {
    return unit[o.inv(static_cast<int>(x))] != a.inv(unit[x]);
  });
  if (bad != scan::npos)
    return CheckReport::fail(
        name, {int(bad)},
        "iota does not preserve unit arrows at object " + std::to_string(bad));

  // iota preserves composition: (g o f)^-1 = g^-1 o f^-1.
  bad = scan::find_first(np, [&](std::size_t p) {
    const auto [f, g] = ic.pairs.list[p];
    return a.inv(ic.comp[p]) !=
           ic.comp[ic.pairs.find(a.inv(f), a.inv(g))];
  });
  if (bad != scan::npos) {
    const auto [f, g] = ic.pairs.list[bad];
    return CheckReport::fail(name, {f, g},
                             "iota is not functorial on composition at " +
                                 tuple_str({f, g}));
  }
  return CheckReport::pass(
      name, "mu and iota are functorial: the category is a group object");
}

}  // namespace catgrp
