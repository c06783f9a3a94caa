#include "catgrp/isomorphism.hpp"

#include <algorithm>

#include "catgrp/errors.hpp"

namespace catgrp {

namespace {

// Greedy generator chain: repeatedly the smallest element outside the
// subgroup generated so far. The identity-first branch of the search then
// reproduces the identity map on (G, G).
std::vector<int> generator_chain(const FiniteGroup& g) {
  std::vector<char> reached(g.order(), 0);
  reached[0] = 1;
  int count = 1;
  std::vector<int> gens;
  std::vector<int> closure{0};

  while (count < g.order()) {
    int fresh = -1;
    for (int x = 1; x < g.order(); ++x)
      if (!reached[x]) {
        fresh = x;
        break;
      }
    gens.push_back(fresh);
    // Close under the new generator set.
    reached[fresh] = 1;
    closure.push_back(fresh);
    ++count;
    for (std::size_t i = 0; i < closure.size(); ++i)
      for (int gen : gens) {
        const int next = g.mul(closure[i], gen);
        if (!reached[next]) {
          reached[next] = 1;
          closure.push_back(next);
          ++count;
        }
      }
  }
  return gens;
}

struct SearchState {
  const FiniteGroup& g;
  const FiniteGroup& h;
  const std::vector<int>& gens;
  std::vector<int> image;      // g-element -> h-element, -1 unknown
  std::vector<char> used;      // h-elements already hit
  std::vector<int> mapped;     // g-elements with known image, insertion order
};

// Extends the partial map with img(x) = y and closes under products with
// already-mapped elements. Returns false (and rolls back) on any conflict.
bool extend(SearchState& st, int x, int y, std::vector<int>& added) {
  const auto assign = [&](int a, int b) {
    if (st.image[a] != -1) return st.image[a] == b;
    if (st.used[b]) return false;
    st.image[a] = b;
    st.used[b] = 1;
    st.mapped.push_back(a);
    added.push_back(a);
    return true;
  };

  if (!assign(x, y)) return false;
  // Product-closure: for every known pair, the product's image is forced.
  for (std::size_t i = 0; i < st.mapped.size(); ++i) {
    const int a = st.mapped[i];
    for (std::size_t j = 0; j < st.mapped.size(); ++j) {
      const int b = st.mapped[j];
      if (!assign(st.g.mul(a, b), st.h.mul(st.image[a], st.image[b])))
        return false;
    }
  }
  return true;
}

void rollback(SearchState& st, const std::vector<int>& added) {
  for (int a : added) {
    st.used[st.image[a]] = 0;
    st.image[a] = -1;
  }
  st.mapped.resize(st.mapped.size() - added.size());
}

bool search(SearchState& st, std::size_t gen_pos,
            const std::vector<int>& h_orders,
            const std::vector<int>& g_orders) {
  if (gen_pos == st.gens.size())
    return std::find(st.image.begin(), st.image.end(), -1) == st.image.end();

  const int gen = st.gens[gen_pos];
  if (st.image[gen] != -1)  // image already forced by closure
    return search(st, gen_pos + 1, h_orders, g_orders);

  for (int y = 0; y < st.h.order(); ++y) {
    if (st.used[y] || h_orders[y] != g_orders[gen]) continue;
    std::vector<int> added;
    if (extend(st, gen, y, added) &&
        search(st, gen_pos + 1, h_orders, g_orders))
      return true;
    rollback(st, added);
  }
  return false;
}

}  // namespace

std::optional<Hom> isomorphism_search(GroupRef g, GroupRef h) {
  if (g->order() != h->order()) return std::nullopt;
  if (g->order_profile() != h->order_profile()) return std::nullopt;

  std::vector<int> g_orders(g->order()), h_orders(h->order());
  for (int x = 0; x < g->order(); ++x) g_orders[x] = g->element_order(x);
  for (int y = 0; y < h->order(); ++y) h_orders[y] = h->element_order(y);

  const std::vector<int> gens = generator_chain(*g);
  SearchState st{*g, *h, gens, std::vector<int>(g->order(), -1),
                 std::vector<char>(h->order(), 0), {}};
  std::vector<int> seed;
  if (!extend(st, 0, 0, seed))
    throw InternalInconsistencyError("identity seed failed");

  if (!search(st, 0, h_orders, g_orders)) return std::nullopt;

  Hom iso = verified_hom(make_hom(g, h, st.image));
  if (!is_bijective(iso))
    throw InternalInconsistencyError("search produced a non-bijection");
  return iso;
}

}  // namespace catgrp
