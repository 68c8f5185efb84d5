// Independent brute-force oracles for the test suite. These deliberately
// avoid the library's algorithms: cuts by subset enumeration, isomorphism by
// permutation search, egg cuts by bipartition scan. Small inputs only.
#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "scramble/multigraph.hpp"

namespace oracles {

using scramble::Multigraph;
using scramble::VertexSet;

// Minimum crossing multiplicity over all proper vertex cuts.
inline int brute_edge_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 1) return scramble::kInfinity;
  if (!g.connected()) return 0;
  int best = scramble::kInfinity;
  for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << n); ++bits) {
    if (!(bits & 1)) continue;
    VertexSet a = VertexSet::from_bits(bits);
    VertexSet b = g.vertices() - a;
    int cut = 0;
    a.for_each([&](int u) {
      (g.neighbors(u) & b).for_each([&](int v) { cut += g.multiplicity(u, v); });
    });
    best = std::min(best, cut);
  }
  return best;
}

// lambda2 by deleting edge-copy subsets and checking the two-component
// condition directly. Exponential in the number of bundles.
inline int brute_lambda2_by_deletion(const Multigraph& g) {
  auto edges = g.edges();
  const int b = static_cast<int>(edges.size());
  int best = scramble::kInfinity;
  std::vector<int> del(b, 0);
  for (;;) {
    Multigraph h = g;
    int deleted = 0;
    for (int i = 0; i < b; ++i) {
      h.set_multiplicity(edges[i].u, edges[i].v, edges[i].mult - del[i]);
      deleted += del[i];
    }
    if (deleted < best) {
      auto comps = h.components();
      if (comps.size() == 2 && comps[0].size() >= 2 && comps[1].size() >= 2)
        best = deleted;
    }
    int i = 0;
    while (i < b && del[i] == edges[i].mult) del[i++] = 0;
    if (i == b) break;
    ++del[i];
  }
  return best;
}

inline int brute_independence(const Multigraph& g) {
  const int n = g.vertex_count();
  int best = 0;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet s = VertexSet::from_bits(bits);
    bool ok = true;
    s.for_each([&](int u) {
      if (ok && (g.neighbors(u) & s).size() > 0) ok = false;
    });
    if (ok) best = std::max(best, s.size());
  }
  return best;
}

inline int brute_hitting(const std::vector<VertexSet>& eggs, int n) {
  for (int size = 0; size <= n; ++size)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      VertexSet s = VertexSet::from_bits(bits);
      if (s.size() != size) continue;
      bool hits_all = true;
      for (const auto& e : eggs)
        if (!e.intersects(s)) hits_all = false;
      if (hits_all) return size;
    }
  return n;
}

// Egg cut straight from the definition: min crossing multiplicity over
// bipartitions into two connected sides each containing an egg.
inline int brute_egg_cut(const Multigraph& g, const std::vector<VertexSet>& eggs) {
  const int n = g.vertex_count();
  int best = scramble::kInfinity;
  for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << n); ++bits) {
    if (!(bits & 1)) continue;
    VertexSet a = VertexSet::from_bits(bits);
    VertexSet b = g.vertices() - a;
    if (!g.connected_within(a) || !g.connected_within(b)) continue;
    bool egg_a = false, egg_b = false;
    for (const auto& e : eggs) {
      egg_a = egg_a || e.subset_of(a);
      egg_b = egg_b || e.subset_of(b);
    }
    if (!egg_a || !egg_b) continue;
    int cut = 0;
    a.for_each([&](int u) {
      (g.neighbors(u) & b).for_each([&](int v) { cut += g.multiplicity(u, v); });
    });
    best = std::min(best, cut);
  }
  return best;
}

inline bool naive_isomorphic(const Multigraph& a, const Multigraph& b) {
  const int n = a.vertex_count();
  if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool match = true;
    for (int u = 0; u < n && match; ++u)
      for (int v = u + 1; v < n && match; ++v)
        if (a.multiplicity(u, v) != b.multiplicity(perm[u], perm[v])) match = false;
    if (match) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

// All connected multigraphs up to isomorphism by the dumbest possible
// route: generate every labeled graph, keep one per naive-isomorphism
// class.
inline std::vector<Multigraph> naive_enumerate_connected(int max_n, int max_mult) {
  std::vector<Multigraph> out;
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::vector<int> assign(pairs.size(), 0);
    std::vector<Multigraph> classes;
    for (;;) {
      Multigraph g(n);
      for (size_t i = 0; i < pairs.size(); ++i)
        if (assign[i] > 0) g.add_edge(pairs[i].first, pairs[i].second, assign[i]);
      if (g.connected()) {
        bool fresh = true;
        for (const auto& c : classes)
          if (naive_isomorphic(g, c)) {
            fresh = false;
            break;
          }
        if (fresh) classes.push_back(g);
      }
      size_t i = 0;
      while (i < pairs.size() && assign[i] == max_mult) assign[i++] = 0;
      if (i == pairs.size()) break;
      ++assign[i];
    }
    for (auto& c : classes) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace oracles
