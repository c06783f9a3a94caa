#include "catgrp/action.hpp"

#include "catgrp/errors.hpp"
#include "catgrp/scan.hpp"

namespace catgrp {

namespace {

void validate_table(const GroupAction& act) {
  if (static_cast<int>(act.table.size()) !=
      act.group->order() * act.carrier_size)
    throw MalformedInputError("action table has " +
                              std::to_string(act.table.size()) +
                              " entries, expected " +
                              std::to_string(act.group->order()) + "x" +
                              std::to_string(act.carrier_size));
  for (int v : act.table)
    if (v < 0 || v >= act.carrier_size)
      throw MalformedInputError("action table entry out of range");
}

}  // namespace

GroupAction make_action(GroupRef group, GroupRef carrier,
                        std::vector<int> table) {
  GroupAction act;
  act.group = std::move(group);
  act.carrier_group = carrier;
  act.carrier_size = carrier->order();
  act.table = std::move(table);
  validate_table(act);
  return act;
}

GroupAction make_set_action(GroupRef group, int carrier_size,
                            std::vector<int> table) {
  GroupAction act;
  act.group = std::move(group);
  act.carrier_size = carrier_size;
  act.table = std::move(table);
  validate_table(act);
  return act;
}

CheckReport check_group_action(const GroupAction& act) {
  validate_table(act);
  const int m = act.carrier_size;
  const std::size_t n = std::size_t(act.group->order());

  auto bad = scan::find_first(std::size_t(m), [&](std::size_t x) {
    return act.apply(FiniteGroup::identity, static_cast<int>(x)) !=
           static_cast<int>(x);
  });
  if (bad != scan::npos)
    return CheckReport::fail("check_group_action", {int(bad)},
                             "identity moves element " + std::to_string(bad));

  bad = scan::find_first(n * n * std::size_t(m), [&](std::size_t i) {
    const int x = static_cast<int>(i % m);
    const int h = static_cast<int>((i / m) % n);
    const int g = static_cast<int>(i / (m * n));
    return act.apply(g, act.apply(h, x)) !=
           act.apply(act.group->mul(g, h), x);
  });
  if (bad != scan::npos) {
    const int x = static_cast<int>(bad % m);
    const int h = static_cast<int>((bad / m) % n);
    const int g = static_cast<int>(bad / (m * n));
    return CheckReport::fail(
        "check_group_action", {g, h, x},
        "g(h x) != (g*h) x at (g,h,x)=(" + std::to_string(g) + "," +
            std::to_string(h) + "," + std::to_string(x) + ")");
  }
  return CheckReport::pass("check_group_action");
}

CheckReport check_automorphism_action(const GroupAction& act) {
  if (!act.carrier_group)
    throw ContractError("automorphism check needs a group carrier");
  const auto& c = *act.carrier_group;
  const std::size_t m = std::size_t(c.order());

  for (int g = 0; g < act.group->order(); ++g) {
    std::vector<char> hit(m, 0);
    for (int x = 0; x < c.order(); ++x) {
      const int y = act.apply(g, x);
      if (hit[y])
        return CheckReport::fail(
            "check_automorphism_action", {g, x},
            "row " + std::to_string(g) + " is not a bijection");
      hit[y] = 1;
    }
  }

  const std::size_t n = std::size_t(act.group->order());
  const auto bad = scan::find_first(n * m * m, [&](std::size_t i) {
    const int y = static_cast<int>(i % m);
    const int x = static_cast<int>((i / m) % m);
    const int g = static_cast<int>(i / (m * m));
    return act.apply(g, c.mul(x, y)) != c.mul(act.apply(g, x),
                                              act.apply(g, y));
  });
  if (bad != scan::npos) {
    const int y = static_cast<int>(bad % m);
    const int x = static_cast<int>((bad / m) % m);
    const int g = static_cast<int>(bad / (m * m));
    return CheckReport::fail(
        "check_automorphism_action", {g, x, y},
        "row " + std::to_string(g) + " does not preserve the product at (" +
            std::to_string(x) + "," + std::to_string(y) + ")");
  }
  return CheckReport::pass("check_automorphism_action");
}

GroupAction verified_automorphism_action(GroupAction act) {
  CheckReport report = check_group_action(act);
  if (!report.passed)
    throw ContractError("not a group action: " + report.detail);
  report = check_automorphism_action(act);
  if (!report.passed)
    throw ContractError("action is not by automorphisms: " + report.detail);
  act.automorphism_verified = true;
  return act;
}

GroupAction trivial_action(GroupRef group, GroupRef carrier) {
  const int m = carrier->order();
  std::vector<int> table(std::size_t(group->order()) * m);
  for (int g = 0; g < group->order(); ++g)
    for (int x = 0; x < m; ++x) table[g * m + x] = x;
  return verified_automorphism_action(
      make_action(std::move(group), std::move(carrier), std::move(table)));
}

GroupAction left_translation_action(GroupRef group) {
  const int n = group->order();
  std::vector<int> table(std::size_t(n) * n);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x) table[g * n + x] = group->mul(g, x);
  return make_set_action(std::move(group), n, std::move(table));
}

GroupAction conjugation_action(GroupRef group) {
  const int n = group->order();
  std::vector<int> table(std::size_t(n) * n);
  for (int g = 0; g < n; ++g)
    for (int x = 0; x < n; ++x)
      table[g * n + x] = group->mul(group->mul(g, x), group->inv(g));
  return verified_automorphism_action(
      make_action(group, group, std::move(table)));
}

GroupAction conjugation_action_on(const Subgroup& sub) {
  const CheckReport normal = is_normal(sub);
  if (!normal.passed)
    throw NotNormalError("conjugation action needs a normal subgroup: " +
                             normal.detail,
                         *normal.witness);
  const auto& g = *sub.parent;
  const int m = sub.size();
  std::vector<int> table(std::size_t(g.order()) * m);
  for (int x = 0; x < g.order(); ++x)
    for (int k = 0; k < m; ++k)
      table[x * m + k] =
          sub.parent_to_sub[g.mul(g.mul(x, sub.members[k]), g.inv(x))];
  return verified_automorphism_action(
      make_action(sub.parent, sub.as_group, std::move(table)));
}

}  // namespace catgrp
