#include "catgrp/subgroup.hpp"

#include <algorithm>
#include <set>

#include "catgrp/errors.hpp"

namespace catgrp {

namespace {

std::string default_name(const GroupRef& parent, std::size_t size) {
  return parent->name() + "-sub" + std::to_string(size);
}

}  // namespace

Subgroup make_subgroup(GroupRef parent, std::vector<int> members,
                       std::string name) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty() || members.front() != FiniteGroup::identity)
    throw ContractError("subgroup must contain the identity");
  for (int m : members)
    if (m < 0 || m >= parent->order())
      throw ContractError("subgroup member out of range");

  std::vector<int> parent_to_sub(parent->order(), -1);
  for (std::size_t i = 0; i < members.size(); ++i)
    parent_to_sub[members[i]] = static_cast<int>(i);

  for (int a : members) {
    if (parent_to_sub[parent->inv(a)] < 0)
      throw ContractError("subgroup not closed under inverse at element " +
                          std::to_string(a));
    for (int b : members)
      if (parent_to_sub[parent->mul(a, b)] < 0)
        throw ContractError("subgroup not closed under product at (" +
                            std::to_string(a) + "," + std::to_string(b) + ")");
  }

  const int n = static_cast<int>(members.size());
  std::vector<int> table(std::size_t(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[a * n + b] = parent_to_sub[parent->mul(members[a], members[b])];

  Subgroup sub;
  sub.parent = parent;
  sub.members = std::move(members);
  sub.as_group = FiniteGroup::shared_from_table(
      name.empty() ? default_name(parent, sub.members.size())
                   : std::move(name),
      std::move(table));
  sub.parent_to_sub = std::move(parent_to_sub);
  return sub;
}

Subgroup generated_subgroup(GroupRef parent, const std::vector<int>& gens,
                            std::string name) {
  std::vector<char> seen(parent->order(), 0);
  std::vector<int> frontier{FiniteGroup::identity};
  seen[FiniteGroup::identity] = 1;
  for (int g : gens) {
    if (g < 0 || g >= parent->order())
      throw ContractError("generator out of range");
    if (!seen[g]) {
      seen[g] = 1;
      frontier.push_back(g);
    }
  }
  // Orbit closure under right-multiplication by generators and inverses.
  for (std::size_t i = 0; i < frontier.size(); ++i) {
    const int a = frontier[i];
    for (int g : gens) {
      for (int next : {parent->mul(a, g), parent->mul(a, parent->inv(g))}) {
        if (!seen[next]) {
          seen[next] = 1;
          frontier.push_back(next);
        }
      }
    }
  }
  std::vector<int> members;
  for (int x = 0; x < parent->order(); ++x)
    if (seen[x]) members.push_back(x);
  return make_subgroup(parent, std::move(members), std::move(name));
}

Subgroup trivial_subgroup(GroupRef parent) {
  return make_subgroup(parent, {FiniteGroup::identity},
                       parent->name() + "-triv");
}

Subgroup full_subgroup(GroupRef parent) {
  std::vector<int> all(parent->order());
  for (int i = 0; i < parent->order(); ++i) all[i] = i;
  return make_subgroup(parent, std::move(all), parent->name());
}

CheckReport is_normal(const Subgroup& sub) {
  const auto& g = *sub.parent;
  for (int x = 0; x < g.order(); ++x) {
    for (int n : sub.members) {
      const int conj = g.mul(g.mul(x, n), g.inv(x));
      if (!sub.contains(conj))
        return CheckReport::fail(
            "is_normal", {x, n},
            "conjugate " + std::to_string(x) + "*" + std::to_string(n) + "*" +
                std::to_string(x) + "^-1 = " + std::to_string(conj) +
                " leaves the subgroup");
    }
  }
  return CheckReport::pass("is_normal", "subgroup is normal");
}

std::vector<Subgroup> all_subgroups(GroupRef parent) {
  const int n = parent->order();
  std::set<std::vector<int>> member_sets;

  const auto close = [&](const std::vector<int>& gens) {
    std::vector<char> seen(n, 0);
    std::vector<int> frontier{0};
    seen[0] = 1;
    for (int g : gens)
      if (!seen[g]) {
        seen[g] = 1;
        frontier.push_back(g);
      }
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (int g : gens) {
        const int next = parent->mul(frontier[i], g);
        if (!seen[next]) {
          seen[next] = 1;
          frontier.push_back(next);
        }
      }
    std::vector<int> members;
    for (int x = 0; x < n; ++x)
      if (seen[x]) members.push_back(x);
    return members;
  };

  member_sets.insert(close({}));
  for (int a = 1; a < n; ++a) {
    member_sets.insert(close({a}));
    for (int b = a + 1; b < n; ++b) {
      member_sets.insert(close({a, b}));
      for (int c = b + 1; c < n; ++c) member_sets.insert(close({a, b, c}));
    }
  }

  std::vector<Subgroup> subs;
  subs.reserve(member_sets.size());
  for (const auto& members : member_sets)
    subs.push_back(make_subgroup(parent, members));
  // Deterministic order: by size, then by member list.
  std::sort(subs.begin(), subs.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.members.size() != b.members.size())
      return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return subs;
}

std::vector<Subgroup> normal_subgroups(GroupRef parent) {
  std::vector<Subgroup> result;
  for (auto& sub : all_subgroups(parent))
    if (is_normal(sub).passed) result.push_back(std::move(sub));
  return result;
}

}  // namespace catgrp
