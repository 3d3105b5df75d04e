#pragma once

// Slow, direct reference computations used to cross-check the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "edgeposet/perm.hpp"
#include "edgeposet/poset.hpp"

namespace oracle {

using edgeposet::Cover;
using edgeposet::GradedPoset;

// Warshall on the raw cover list.
inline std::vector<std::vector<char>> closure(std::size_t n, const std::vector<Cover>& covers) {
  std::vector<std::vector<char>> le(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) le[i][i] = 1;
  for (const auto& [x, y] : covers) le[x][y] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (le[i][k])
        for (std::size_t j = 0; j < n; ++j)
          if (le[k][j]) le[i][j] = 1;
  return le;
}

inline std::vector<std::vector<char>> closure(const GradedPoset& p) {
  return closure(p.size(), {p.covers().begin(), p.covers().end()});
}

// Largest subset whose longest chain has at most k elements (Mirsky).
inline std::size_t max_k_antichain_union(const GradedPoset& p, std::size_t k) {
  const std::size_t n = p.size();
  const auto le = closure(p);
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return p.rank_of(a) < p.rank_of(b); });
  std::size_t best = 0;
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(s));
    if (size <= best) continue;
    std::vector<std::size_t> longest(n, 0);
    std::size_t height = 0;
    for (int v : order) {
      if (!(s >> v & 1U)) continue;
      longest[v] = 1;
      for (int u : order)
        if (u != v && (s >> u & 1U) && le[u][v]) longest[v] = std::max(longest[v], longest[u] + 1);
      height = std::max(height, longest[v]);
    }
    if (height <= k) best = size;
  }
  return best;
}

// Random graded poset; every element above rank 0 gets at least one lower cover.
inline GradedPoset random_poset(std::mt19937& rng, int max_elements, int max_rank, double density) {
  std::uniform_int_distribution<int> size_dist(1, max_elements);
  std::uniform_int_distribution<int> rank_dist(0, max_rank);
  std::bernoulli_distribution coin(density);
  const int n = size_dist(rng);
  std::vector<int> ranks(static_cast<std::size_t>(n));
  for (auto& r : ranks) r = rank_dist(rng);
  std::sort(ranks.begin(), ranks.end());
  ranks[0] = 0;
  // Close rank gaps so the poset has every rank between 0 and its maximum.
  for (std::size_t i = 1; i < ranks.size(); ++i) ranks[i] = std::min(ranks[i], ranks[i - 1] + 1);
  std::vector<Cover> covers;
  for (int y = 0; y < n; ++y) {
    if (ranks[y] == 0) continue;
    std::vector<int> below;
    for (int x = 0; x < n; ++x)
      if (ranks[x] + 1 == ranks[y]) below.push_back(x);
    bool any = false;
    for (int x : below)
      if (coin(rng)) {
        covers.emplace_back(x, y);
        any = true;
      }
    if (!any) covers.emplace_back(below[std::uniform_int_distribution<std::size_t>(0, below.size() - 1)(rng)], y);
  }
  return GradedPoset::build(std::move(ranks), std::move(covers));
}

// Every bijection, for posets of at most nine elements.
inline bool isomorphic(const GradedPoset& p, const GradedPoset& q) {
  if (p.size() != q.size() || p.covers().size() != q.covers().size()) return false;
  std::vector<int> perm(p.size());
  std::iota(perm.begin(), perm.end(), 0);
  const std::set<Cover> target(q.covers().begin(), q.covers().end());
  do {
    bool ok = true;
    for (std::size_t x = 0; x < p.size() && ok; ++x) ok = p.rank_of(static_cast<int>(x)) == q.rank_of(perm[x]);
    for (const auto& [x, y] : p.covers())
      if (ok && !target.count({perm[x], perm[y]})) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// Closure of permutations given as image vectors.
inline std::set<std::vector<int>> group_closure(int degree, const std::vector<std::vector<int>>& gens) {
  std::vector<int> id(static_cast<std::size_t>(degree));
  std::iota(id.begin(), id.end(), 0);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> todo{id};
  while (!todo.empty()) {
    auto g = todo.back();
    todo.pop_back();
    for (const auto& h : gens) {
      std::vector<int> gh(g.size());
      for (std::size_t i = 0; i < g.size(); ++i) gh[i] = h[g[i]];
      if (seen.insert(gh).second) todo.push_back(gh);
    }
  }
  return seen;
}

inline std::vector<std::vector<int>> images_of(const edgeposet::PermGroup& g) {
  std::vector<std::vector<int>> out;
  for (const auto& e : g.elements()) out.emplace_back(e.images().begin(), e.images().end());
  return out;
}

inline std::uint32_t apply(const std::vector<int>& g, std::uint32_t mask) {
  std::uint32_t out = 0;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (mask >> i & 1U) out |= std::uint32_t{1} << g[i];
  return out;
}

// Orbits of subsets of [n] per size, by least image under all group elements.
inline std::vector<std::size_t> subset_orbits_by_size(int n, const std::vector<std::vector<int>>& elements) {
  std::vector<std::size_t> counts(static_cast<std::size_t>(n) + 1, 0);
  for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
    std::uint32_t least = s;
    for (const auto& g : elements) least = std::min(least, apply(g, s));
    if (least == s) ++counts[static_cast<std::size_t>(__builtin_popcount(s))];
  }
  return counts;
}

// Orbits of edges (x, x + {i}) of B_n per |x|.
inline std::vector<std::size_t> edge_orbits_by_size(int n, const std::vector<std::vector<int>>& elements) {
  std::set<std::pair<std::uint32_t, std::uint32_t>> reps;
  std::vector<std::size_t> counts(static_cast<std::size_t>(n), 0);
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x)
    for (int i = 0; i < n; ++i) {
      if (x >> i & 1U) continue;
      std::pair<std::uint32_t, std::uint32_t> least{x, x | (1U << i)};
      for (const auto& g : elements) least = std::min(least, std::make_pair(apply(g, x), apply(g, x | (1U << i))));
      if (reps.insert(least).second) ++counts[static_cast<std::size_t>(__builtin_popcount(x))];
    }
  return counts;
}

// Pairs (orbit of x, orbit of y) with x covered by y, per |x|: the ranks of E(B_n/G).
inline std::vector<std::size_t> quotient_edges_by_size(int n, const std::vector<std::vector<int>>& elements) {
  auto least = [&](std::uint32_t s) {
    std::uint32_t m = s;
    for (const auto& g : elements) m = std::min(m, apply(g, s));
    return m;
  };
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairs;
  std::vector<std::size_t> counts(static_cast<std::size_t>(n), 0);
  for (std::uint32_t x = 0; x < (std::uint32_t{1} << n); ++x)
    for (int i = 0; i < n; ++i)
      if (!(x >> i & 1U) && pairs.insert({least(x), least(x | (1U << i))}).second)
        ++counts[static_cast<std::size_t>(__builtin_popcount(x))];
  return counts;
}

// Partitions of k in the l x m box by recursion on the largest part, then sum of binom(nu, r).
inline std::uint64_t p_count(int k, int l, int m, int r) {
  std::uint64_t total = 0;
  std::vector<int> parts;
  auto binom = [](int a, int b) -> std::uint64_t {
    if (b < 0 || b > a) return 0;
    std::uint64_t v = 1;
    for (int i = 0; i < b; ++i) v = v * static_cast<std::uint64_t>(a - i) / static_cast<std::uint64_t>(i + 1);
    return v;
  };
  auto rec = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      total += binom(static_cast<int>(std::set<int>(parts.begin(), parts.end()).size()), r);
      return;
    }
    if (static_cast<int>(parts.size()) == l) return;
    for (int part = 1; part <= std::min(cap, remaining); ++part) {
      parts.push_back(part);
      self(self, remaining - part, part);
      parts.pop_back();
    }
  };
  rec(rec, k, m);
  return total;
}

}  // namespace oracle
