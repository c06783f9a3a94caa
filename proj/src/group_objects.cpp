#include "catgrp/group_objects.hpp"

#include <string>

#include "catgrp/errors.hpp"
#include "catgrp/scan.hpp"

namespace catgrp {

FinSetMap make_finset_map(int source_size, int target_size,
                          std::vector<int> map) {
  if (static_cast<int>(map.size()) != source_size)
    throw MalformedInputError("finite-set map has " +
                              std::to_string(map.size()) +
                              " entries, expected " +
                              std::to_string(source_size));
  for (int v : map)
    if (v < 0 || v >= target_size)
      throw MalformedInputError("finite-set map value out of range");
  return FinSetMap{source_size, target_size, std::move(map)};
}

FinSetMap finset_identity(int size) {
  std::vector<int> map(size);
  for (int i = 0; i < size; ++i) map[i] = i;
  return FinSetMap{size, size, std::move(map)};
}

GroupObjectCandidate group_as_candidate(GroupRef g, Ambient ambient) {
  GroupObjectCandidate cand;
  cand.ambient = ambient;
  cand.carrier_size = g->order();
  if (ambient == Ambient::FinGrp) cand.carrier_group = g;
  cand.m = make_finset_map(g->order() * g->order(), g->order(), g->table());
  cand.e = make_finset_map(1, g->order(), {FiniteGroup::identity});
  cand.i = make_finset_map(g->order(), g->order(), g->inverses());
  return cand;
}

namespace {

void validate_candidate(const GroupObjectCandidate& cand) {
  const int n = cand.carrier_size;
  if (cand.m.source_size != n * n || cand.m.target_size != n ||
      cand.e.source_size != 1 || cand.e.target_size != n ||
      cand.i.source_size != n || cand.i.target_size != n)
    throw MalformedInputError("candidate map arities do not fit the carrier");
  if (cand.ambient == Ambient::FinGrp &&
      (!cand.carrier_group || cand.carrier_group->order() != n))
    throw MalformedInputError("FinGrp candidate needs its carrier group");
}

// m as a homomorphism from the direct-product group to the carrier:
// m((x,y) (z,w)) = m(x,y) * m(z,w) with the componentwise pair product.
CheckReport product_hom_leg(const GroupObjectCandidate& cand,
                            const char* check_name) {
  const auto& g = *cand.carrier_group;
  const std::size_t n = std::size_t(cand.carrier_size);
  const auto idx = [&](int a, int b) {
    return a * static_cast<int>(n) + b;
  };
  const auto bad = scan::find_first(n * n * n * n, [&](std::size_t fl) {
    const int w = static_cast<int>(fl % n);
    const int z = static_cast<int>((fl / n) % n);
    const int y = static_cast<int>((fl / (n * n)) % n);
    const int x = static_cast<int>(fl / (n * n * n));
    const int lhs = cand.m(idx(g.mul(x, z), g.mul(y, w)));
    const int rhs = g.mul(cand.m(idx(x, y)), cand.m(idx(z, w)));
    return lhs != rhs;
  });
  if (bad == scan::npos) return CheckReport::pass(check_name);
  const int w = static_cast<int>(bad % n);
  const int z = static_cast<int>((bad / n) % n);
  const int y = static_cast<int>((bad / (n * n)) % n);
  const int x = static_cast<int>(bad / (n * n * n));
  return CheckReport::fail(
      check_name, {x, y, z, w},
      "m is not a homomorphism from the product group: m((x,y)(z,w)) != "
      "m(x,y)*m(z,w) at (x,y,z,w)=(" +
          std::to_string(x) + "," + std::to_string(y) + "," +
          std::to_string(z) + "," + std::to_string(w) + ")");
}

}  // namespace

CheckReport check_monoid_object(const GroupObjectCandidate& cand) {
  validate_candidate(cand);
  const char* name = "check_monoid_object";
  const std::size_t n = std::size_t(cand.carrier_size);
  const auto idx = [&](int a, int b) { return a * static_cast<int>(n) + b; };

  // Associativity square.
  auto bad = scan::find_first(n * n * n, [&](std::size_t fl) {
    const int c = static_cast<int>(fl % n);
    const int b = static_cast<int>((fl / n) % n);
    const int a = static_cast<int>(fl / (n * n));
    return cand.m(idx(cand.m(idx(a, b)), c)) !=
           cand.m(idx(a, cand.m(idx(b, c))));
  });
  if (bad != scan::npos) {
    const int c = static_cast<int>(bad % n);
    const int b = static_cast<int>((bad / n) % n);
    const int a = static_cast<int>(bad / (n * n));
    return CheckReport::fail(name, {a, b, c},
                             "associativity diagram fails at (" +
                                 std::to_string(a) + "," + std::to_string(b) +
                                 "," + std::to_string(c) + ")");
  }

  // Unit triangles on both sides.
  const int unit = cand.e(0);
  bad = scan::find_first(n, [&](std::size_t x) {
    const int xi = static_cast<int>(x);
    return cand.m(idx(unit, xi)) != xi || cand.m(idx(xi, unit)) != xi;
  });
  if (bad != scan::npos)
    return CheckReport::fail(
        name, {int(bad)},
        "unit triangle fails at element " + std::to_string(bad) + ": m(" +
            std::to_string(unit) + "," + std::to_string(bad) + ") = " +
            std::to_string(cand.m(idx(unit, int(bad)))));

  if (cand.ambient == Ambient::FinGrp) {
    CheckReport m_hom = product_hom_leg(cand, name);
    if (!m_hom.passed) return m_hom;
    // e from the one-element group is a homomorphism iff it picks the
    // carrier identity.
    if (unit != FiniteGroup::identity)
      return CheckReport::fail(
          name, {unit},
          "e is not a homomorphism: it picks " + std::to_string(unit) +
              ", not the carrier identity");
  }
  return CheckReport::pass(name);
}

CheckReport check_group_object(const GroupObjectCandidate& cand) {
  const char* name = "check_group_object";
  CheckReport monoid = check_monoid_object(cand);
  if (!monoid.passed) {
    monoid.check_name = name;
    return monoid;
  }

  const std::size_t n = std::size_t(cand.carrier_size);
  const auto idx = [&](int a, int b) { return a * static_cast<int>(n) + b; };
  const int unit = cand.e(0);

  // Inverse diagrams through the diagonal, both variants.
  auto bad = scan::find_first(n, [&](std::size_t g) {
    const int gi = static_cast<int>(g);
    return cand.m(idx(cand.i(gi), gi)) != unit ||
           cand.m(idx(gi, cand.i(gi))) != unit;
  });
  if (bad != scan::npos)
    return CheckReport::fail(
        name, {int(bad)},
        "inverse diagram fails at element " + std::to_string(bad));

  if (cand.ambient == Ambient::FinGrp) {
    const auto& g = *cand.carrier_group;
    bad = scan::find_first(n * n, [&](std::size_t fl) {
      const int y = static_cast<int>(fl % n);
      const int x = static_cast<int>(fl / n);
      return cand.i(g.mul(x, y)) != g.mul(cand.i(x), cand.i(y));
    });
    if (bad != scan::npos) {
      const int y = static_cast<int>(bad % n);
      const int x = static_cast<int>(bad / n);
      return CheckReport::fail(name, {x, y},
                               "i is not a homomorphism at (" +
                                   std::to_string(x) + "," +
                                   std::to_string(y) + ")");
    }
  }
  return CheckReport::pass(name);
}

CheckReport check_interchange(int carrier_size, const FinSetMap& star,
                              const FinSetMap& dot) {
  const char* name = "check_interchange";
  const std::size_t n = std::size_t(carrier_size);
  if (star.source_size != carrier_size * carrier_size ||
      dot.source_size != carrier_size * carrier_size ||
      star.target_size != carrier_size || dot.target_size != carrier_size)
    throw MalformedInputError("binary maps do not fit the carrier");
  const auto idx = [&](int a, int b) { return a * carrier_size + b; };

  const auto bad = scan::find_first(n * n * n * n, [&](std::size_t fl) {
    const int w = static_cast<int>(fl % n);
    const int z = static_cast<int>((fl / n) % n);
    const int y = static_cast<int>((fl / (n * n)) % n);
    const int x = static_cast<int>(fl / (n * n * n));
    return dot(idx(star(idx(x, y)), star(idx(z, w)))) !=
           star(idx(dot(idx(x, z)), dot(idx(y, w))));
  });
  if (bad == scan::npos) return CheckReport::pass(name);
  const int w = static_cast<int>(bad % n);
  const int z = static_cast<int>((bad / n) % n);
  const int y = static_cast<int>((bad / (n * n)) % n);
  const int x = static_cast<int>(bad / (n * n * n));
  return CheckReport::fail(
      name, {x, y, z, w},
      "(x*y).(z*w) != (x.z)*(y.w) at (x,y,z,w)=(" + std::to_string(x) + "," +
          std::to_string(y) + "," + std::to_string(z) + "," +
          std::to_string(w) + ")");
}

CheckReport eckmann_hilton(const GroupObjectCandidate& cand) {
  const char* name = "eckmann_hilton";
  if (cand.ambient != Ambient::FinGrp)
    throw ContractError("eckmann_hilton needs the FinGrp ambient");
  if (!check_group_object(cand).passed)
    throw ContractError(
        "eckmann_hilton precondition: check_group_object must pass");

  const auto& g = *cand.carrier_group;
  const std::size_t n = std::size_t(cand.carrier_size);
  const auto idx = [&](int a, int b) { return a * static_cast<int>(n) + b; };

  auto bad = scan::find_first(n * n, [&](std::size_t fl) {
    const int y = static_cast<int>(fl % n);
    const int x = static_cast<int>(fl / n);
    return cand.m(idx(x, y)) != g.mul(x, y);
  });
  const bool m_is_native = bad == scan::npos;
  std::vector<int> m_witness;
  if (!m_is_native)
    m_witness = {static_cast<int>(bad / n), static_cast<int>(bad % n)};

  bad = scan::find_first(n * n, [&](std::size_t fl) {
    const int y = static_cast<int>(fl % n);
    const int x = static_cast<int>(fl / n);
    return g.mul(x, y) != g.mul(y, x);
  });
  const bool abelian = bad == scan::npos;
  std::vector<int> ab_witness;
  if (!abelian)
    ab_witness = {static_cast<int>(bad / n), static_cast<int>(bad % n)};

  const std::string detail =
      std::string("m equals the native operation: ") +
      (m_is_native ? "yes" : "no") +
      "; native table is commutative: " + (abelian ? "yes" : "no");
  if (m_is_native && abelian) return CheckReport::pass(name, detail);
  return CheckReport::fail(name, m_is_native ? ab_witness : m_witness,
                           detail + " (internal inconsistency: both must "
                                    "hold once the group-object check "
                                    "passes)");
}

CogroupCandidate make_cogroup_candidate(int carrier_size,
                                        std::vector<int> w) {
  if (static_cast<int>(w.size()) != carrier_size)
    throw MalformedInputError("comultiplication must be total on the carrier");
  for (int v : w)
    if (v < 0 || v >= 2 * carrier_size)
      throw MalformedInputError("comultiplication tag out of range");
  return CogroupCandidate{carrier_size, std::move(w)};
}

CheckReport check_cogroup_coassociativity(const CogroupCandidate& cand) {
  const char* name = "check_cogroup_coassociativity";
  const int n = cand.carrier_size;
  // Values in C+C+C are flat in [0, 3n) after left-associated re-tagging.
  const auto bad = scan::find_first(std::size_t(n), [&](std::size_t xi) {
    const int v = cand.w[xi];
    const int side = v / n, elem = v % n;
    const int lhs = side == 0 ? cand.w[elem] : 2 * n + elem;  // (w + id) o w
    const int rhs = side == 0 ? elem : n + cand.w[elem];      // (id + w) o w
    return lhs != rhs;
  });
  if (bad == scan::npos)
    return CheckReport::pass(name, "both composites into C+C+C agree");
  return CheckReport::fail(
      name, {int(bad)},
      "co-associativity square fails at element " + std::to_string(bad));
}

CheckReport check_cogroup_object(const CogroupCandidate& cand) {
  const char* name = "check_cogroup_object";
  const CheckReport coassoc = check_cogroup_coassociativity(cand);
  if (cand.carrier_size > 0) {
    // The counit would have to reach the empty set, so this leg fails for
    // every nonempty carrier whatever w looks like.
    return CheckReport::fail(
        name, {0},
        "counit leg: no map to the initial object exists (the carrier is "
        "nonempty, the initial object in finite Set is empty); "
        "co-associativity: " +
            std::string(coassoc.passed ? "ok" : coassoc.detail));
  }
  if (!coassoc.passed)
    return CheckReport::fail(name, *coassoc.witness,
                             "co-associativity: " + coassoc.detail);
  return CheckReport::pass(name,
                           "empty carrier: co-associativity, counit and "
                           "co-inverse diagrams commute vacuously");
}

}  // namespace catgrp
