#include "catgrp/hom.hpp"

#include <algorithm>

#include "catgrp/errors.hpp"
#include "catgrp/scan.hpp"

namespace catgrp {

Hom make_hom(GroupRef source, GroupRef target, std::vector<int> map) {
  if (static_cast<int>(map.size()) != source->order())
    throw MalformedInputError(
        "hom map has length " + std::to_string(map.size()) + ", expected " +
        std::to_string(source->order()));
  for (int v : map)
    if (v < 0 || v >= target->order())
      throw MalformedInputError("hom image " + std::to_string(v) +
                                " out of range [0," +
                                std::to_string(target->order()) + ")");
  return Hom{std::move(source), std::move(target), std::move(map), false};
}

CheckReport is_homomorphism(const Hom& f) {
  if (static_cast<int>(f.map.size()) != f.source->order())
    throw MalformedInputError("hom map length does not match its source");
  const std::size_t n = std::size_t(f.source->order());
  const auto bad = scan::find_first(n * n, [&](std::size_t i) {
    const int g = static_cast<int>(i / n);
    const int h = static_cast<int>(i % n);
    return f.map[f.source->mul(g, h)] !=
           f.target->mul(f.map[g], f.map[h]);
  });
  if (bad != scan::npos) {
    const int g = static_cast<int>(bad / n);
    const int h = static_cast<int>(bad % n);
    return CheckReport::fail(
        "is_homomorphism", {g, h},
        "f(" + std::to_string(g) + "*" + std::to_string(h) + ") = " +
            std::to_string(f.map[f.source->mul(g, h)]) + " but f(g)*f(h) = " +
            std::to_string(f.target->mul(f.map[g], f.map[h])));
  }
  return CheckReport::pass("is_homomorphism");
}

Hom verified_hom(Hom f) {
  const CheckReport report = is_homomorphism(f);
  if (!report.passed)
    throw ContractError("map " + f.source->name() + " -> " +
                        f.target->name() +
                        " is not a homomorphism: " + report.detail);
  f.verified = true;
  return f;
}

Hom identity_hom(GroupRef g) {
  std::vector<int> map(g->order());
  for (int i = 0; i < g->order(); ++i) map[i] = i;
  Hom h = make_hom(g, g, std::move(map));
  h.verified = true;
  return h;
}

Hom trivial_hom(GroupRef source, GroupRef target) {
  std::vector<int> map(source->order(), 0);
  Hom h = make_hom(std::move(source), std::move(target), std::move(map));
  h.verified = true;
  return h;
}

Hom inclusion_hom(const Subgroup& sub) {
  // The induced table is the parent product restricted to members, so this
  // must verify; run the scan anyway.
  return verified_hom(make_hom(sub.as_group, sub.parent, sub.members));
}

Hom compose(const Hom& g, const Hom& f) {
  if (f.target != g.source)
    throw ContractError("compose: endpoints do not match");
  std::vector<int> map(f.map.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = g.map[f.map[i]];
  Hom result = make_hom(f.source, g.target, std::move(map));
  result.verified = f.verified && g.verified;
  return result;
}

bool is_bijective(const Hom& f) {
  if (f.source->order() != f.target->order()) return false;
  std::vector<char> hit(f.target->order(), 0);
  for (int v : f.map) {
    if (hit[v]) return false;
    hit[v] = 1;
  }
  return true;
}

Subgroup kernel(const Hom& f) {
  if (!f.verified)
    throw ContractError("kernel: map is not a verified homomorphism");
  std::vector<int> members;
  for (int g = 0; g < f.source->order(); ++g)
    if (f.map[g] == FiniteGroup::identity) members.push_back(g);
  return make_subgroup(f.source, std::move(members),
                       "Ker(" + f.source->name() + "->" + f.target->name() +
                           ")");
}

Subgroup image(const Hom& f) {
  if (!f.verified)
    throw ContractError("image: map is not a verified homomorphism");
  std::vector<int> members = f.map;
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return make_subgroup(f.target, std::move(members),
                       "Im(" + f.source->name() + "->" + f.target->name() +
                           ")");
}

}  // namespace catgrp
