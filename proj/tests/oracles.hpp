#pragma once

// Test-only reference implementations. These stay independent of the library
// code paths they are used to check: plain loops over has_edge, permutations,
// and subset scans.

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "hampow/graph.hpp"

namespace oracles {

// Does `order` (a full cyclic ordering) realize the m-th cycle power?
inline bool cyclic_order_ok(const hampow::Graph& g, const std::vector<int>& order, int m) {
  const int n = g.order();
  for (int a = 0; a < n; ++a) {
    for (int d = 1; d <= m; ++d) {
      const int b = (a + d) % n;
      if (a == b) continue;
      if (!g.has_edge(order[static_cast<std::size_t>(a)], order[static_cast<std::size_t>(b)])) {
        return false;
      }
    }
  }
  return true;
}

// Brute force over all (n-1)!/2 cyclic orderings (vertex 0 anchored,
// reflection deduplicated).
inline bool contains_cycle_power(const hampow::Graph& g, int m) {
  const int n = g.order();
  std::vector<int> rest(static_cast<std::size_t>(n - 1));
  std::iota(rest.begin(), rest.end(), 1);
  std::vector<int> order(static_cast<std::size_t>(n));
  order[0] = 0;
  do {
    if (n > 2 && rest.front() > rest.back()) continue;
    std::copy(rest.begin(), rest.end(), order.begin() + 1);
    if (cyclic_order_ok(g, order, m)) return true;
  } while (std::next_permutation(rest.begin(), rest.end()));
  return false;
}

// Subset-scan clique count restricted to `allowed` (empty = all vertices).
inline std::uint64_t clique_count(const hampow::Graph& g, int ell, std::vector<int> allowed = {}) {
  if (allowed.empty()) {
    allowed.resize(static_cast<std::size_t>(g.order()));
    std::iota(allowed.begin(), allowed.end(), 0);
  }
  std::uint64_t count = 0;
  std::vector<int> pick(static_cast<std::size_t>(ell));
  const int n = static_cast<int>(allowed.size());
  auto rec = [&](auto&& self, int start, int depth) -> void {
    if (depth == ell) {
      ++count;
      return;
    }
    for (int i = start; i < n; ++i) {
      bool ok = true;
      for (int j = 0; j < depth; ++j) {
        if (!g.has_edge(allowed[static_cast<std::size_t>(i)], pick[static_cast<std::size_t>(j)])) {
          ok = false;
          break;
        }
      }
      if (!ok) continue;
      pick[static_cast<std::size_t>(depth)] = allowed[static_cast<std::size_t>(i)];
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return count;
}

// Edge-set union of two explicit edge lists.
inline std::set<std::pair<int, int>> edge_union(const std::vector<std::pair<int, int>>& a,
                                                const std::vector<std::pair<int, int>>& b) {
  std::set<std::pair<int, int>> out;
  for (auto [u, v] : a) out.emplace(std::min(u, v), std::max(u, v));
  for (auto [u, v] : b) out.emplace(std::min(u, v), std::max(u, v));
  return out;
}

// Deterministic random graph for test inputs (independent of the library's
// counter-based sampler).
inline hampow::Graph random_graph(int n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  hampow::GraphBuilder b(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (unit(rng) < p) b.add_edge(u, v);
    }
  }
  return std::move(b).build();
}

inline hampow::Graph random_tree(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  hampow::GraphBuilder b(n);
  for (int v = 1; v < n; ++v) {
    std::uniform_int_distribution<int> parent(0, v - 1);
    b.add_edge(v, parent(rng));
  }
  return std::move(b).build();
}

}  // namespace oracles
