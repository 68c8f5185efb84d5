#include "scramble/topo_minor.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "scramble/canonical.hpp"
#include "scramble/errors.hpp"

namespace scramble {

Multigraph smooth(const Multigraph& g, int v) {
  if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  if (g.degree(v) != 2) throw std::invalid_argument("smoothing needs degree exactly 2");
  VertexSet nb = g.neighbors(v);
  if (nb.size() != 2)
    throw std::invalid_argument("smoothing needs two distinct neighbors");
  auto ns = nb.to_vector();
  std::vector<int> old_of_new;
  Multigraph h = g.without_vertex(v, &old_of_new);
  // Map neighbor indices into the shrunk graph.
  auto new_of = [&](int old) {
    return static_cast<int>(std::lower_bound(old_of_new.begin(), old_of_new.end(), old) -
                            old_of_new.begin());
  };
  h.add_edge(new_of(ns[0]), new_of(ns[1]), 1);
  return h;
}

Multigraph multi_smooth(const Multigraph& g, int u) {
  if (u < 0 || u >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
  VertexSet nb = g.neighbors(u);
  if (nb.size() != 2)
    throw std::invalid_argument("multi-smoothing needs exactly two distinct neighbors");
  auto ns = nb.to_vector();
  int m = g.multiplicity(u, ns[0]);
  int n = g.multiplicity(u, ns[1]);
  std::vector<int> old_of_new;
  Multigraph h = g.without_vertex(u, &old_of_new);
  auto new_of = [&](int old) {
    return static_cast<int>(std::lower_bound(old_of_new.begin(), old_of_new.end(), old) -
                            old_of_new.begin());
  };
  h.add_edge(new_of(ns[0]), new_of(ns[1]), std::min(m, n));
  return h;
}

bool verify_embedding(const Multigraph& h, const Multigraph& g, const EmbeddingModel& m,
                      std::string* reason) {
  auto fail = [&](const std::string& why) {
    if (reason) *reason = why;
    return false;
  };
  const int hn = h.vertex_count();
  if (static_cast<int>(m.branch_map.size()) != hn) return fail("branch map size");
  VertexSet branch_images;
  for (int b : m.branch_map) {
    if (b < 0 || b >= g.vertex_count()) return fail("branch image out of range");
    if (branch_images.contains(b)) return fail("branch map not injective");
    branch_images.add(b);
  }
  // One path per edge copy, endpoints at the right images.
  std::map<std::pair<int, int>, int> copies_needed, copies_seen;
  for (const auto& e : h.edges()) copies_needed[{e.u, e.v}] = e.mult;
  std::map<std::pair<int, int>, int> g_usage;
  VertexSet internals_seen;
  for (const auto& pe : m.paths) {
    int a = std::min(pe.hu, pe.hv), b = std::max(pe.hu, pe.hv);
    ++copies_seen[{a, b}];
    const auto& p = pe.vertices;
    if (p.size() < 2) return fail("path too short");
    if (p.front() != m.branch_map[pe.hu] || p.back() != m.branch_map[pe.hv])
      return fail("path endpoints mismatch branch images");
    VertexSet on_path;
    for (size_t i = 0; i < p.size(); ++i) {
      int v = p[i];
      if (v < 0 || v >= g.vertex_count()) return fail("path vertex out of range");
      if (on_path.contains(v)) return fail("path repeats a vertex");
      on_path.add(v);
      if (i > 0) {
        auto key = std::minmax(p[i - 1], v);
        if (++g_usage[{key.first, key.second}] > g.multiplicity(key.first, key.second))
          return fail("edge bundle over-used");
      }
      if (i > 0 && i + 1 < p.size()) {
        if (branch_images.contains(v)) return fail("path passes through a branch image");
        if (internals_seen.contains(v)) return fail("paths share an internal vertex");
        internals_seen.add(v);
      }
    }
  }
  if (copies_seen != copies_needed) return fail("path multiset mismatches h edges");
  return true;
}

namespace {

// Vertex-capacity feasibility: can `need` internally disjoint paths run
// between a and b, avoiding the other currently assigned branch images?
// Split every ordinary vertex into in/out with capacity 1; terminals are
// uncapacitated; blocked vertices are removed. Necessary, not sufficient:
// used purely as pruning before the exact packing.
bool flow_feasible(const Multigraph& g, int a, int b, VertexSet blocked, int need) {
  const int n = g.vertex_count();
  const int nn = 2 * n;
  const int big = 1 << 20;
  std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
  auto in = [](int v) { return 2 * v; };
  auto out = [](int v) { return 2 * v + 1; };
  for (int v = 0; v < n; ++v) {
    if (blocked.contains(v)) continue;
    cap[in(v)][out(v)] = (v == a || v == b) ? big : 1;
  }
  for (const auto& e : g.edges()) {
    if (blocked.contains(e.u) || blocked.contains(e.v)) continue;
    cap[out(e.u)][in(e.v)] = e.mult;
    cap[out(e.v)][in(e.u)] = e.mult;
  }
  // Edmonds-Karp, stop once `need` units are routed.
  int flow = 0;
  const int s = out(a), t = in(b);
  while (flow < need) {
    std::vector<int> parent(nn, -1);
    parent[s] = s;
    std::deque<int> q{s};
    while (!q.empty() && parent[t] < 0) {
      int u = q.front();
      q.pop_front();
      for (int v = 0; v < nn; ++v)
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = u;
          q.push_back(v);
        }
    }
    if (parent[t] < 0) return false;
    int aug = big;
    for (int v = t; v != s; v = parent[v]) aug = std::min(aug, cap[parent[v]][v]);
    for (int v = t; v != s; v = parent[v]) {
      cap[parent[v]][v] -= aug;
      cap[v][parent[v]] += aug;
    }
    flow += aug;
  }
  return true;
}

struct EmbedSearch {
  const Multigraph& h;
  const Multigraph& g;
  std::vector<int> h_order;    // h vertices, decreasing weighted degree
  std::vector<int> g_by_deg;   // g vertices, decreasing weighted degree
  std::vector<int> branch;     // h-vertex -> g-vertex or -1
  VertexSet used_branch;
  std::optional<EmbeddingModel> result;

  EmbedSearch(const Multigraph& hh, const Multigraph& gg) : h(hh), g(gg) {
    h_order.resize(h.vertex_count());
    std::iota(h_order.begin(), h_order.end(), 0);
    std::stable_sort(h_order.begin(), h_order.end(),
                     [&](int a, int b) { return h.degree(a) > h.degree(b); });
    g_by_deg.resize(g.vertex_count());
    std::iota(g_by_deg.begin(), g_by_deg.end(), 0);
    std::stable_sort(g_by_deg.begin(), g_by_deg.end(),
                     [&](int a, int b) { return g.degree(a) > g.degree(b); });
    branch.assign(h.vertex_count(), -1);
  }

  bool run() {
    if (h.vertex_count() > g.vertex_count()) return false;
    if (h.edge_count() > g.edge_count()) return false;
    return assign(0);
  }

  bool assign(size_t idx) {
    if (idx == h_order.size()) return pack_paths();
    int hv = h_order[idx];
    for (int gv : g_by_deg) {
      if (used_branch.contains(gv)) continue;
      if (g.degree(gv) < h.degree(hv)) continue;
      branch[hv] = gv;
      used_branch.add(gv);
      bool ok = true;
      // Pairwise flow feasibility against already-assigned neighbors.
      h.neighbors(hv).for_each([&](int hu) {
        if (!ok || branch[hu] < 0) return;
        VertexSet blocked = used_branch;
        blocked.remove(gv);
        blocked.remove(branch[hu]);
        if (!flow_feasible(g, gv, branch[hu], blocked, h.multiplicity(hv, hu)))
          ok = false;
      });
      if (ok && assign(idx + 1)) return true;
      used_branch.remove(gv);
      branch[hv] = -1;
    }
    return false;
  }

  // ---- exact path packing over all h edge copies ----

  std::vector<std::pair<int, int>> copy_list;  // one entry per copy
  std::vector<std::vector<int>> found_paths;
  VertexSet used_internal;
  std::vector<std::vector<int>> budget;  // residual copies per g pair

  bool pack_paths() {
    copy_list.clear();
    for (const auto& e : h.edges())
      for (int c = 0; c < e.mult; ++c) copy_list.emplace_back(e.u, e.v);
    found_paths.assign(copy_list.size(), {});
    used_internal = VertexSet{};
    const int n = g.vertex_count();
    budget.assign(n, std::vector<int>(n, 0));
    for (const auto& e : g.edges()) {
      budget[e.u][e.v] = e.mult;
      budget[e.v][e.u] = e.mult;
    }
    VertexSet branch_images;
    for (int b : branch) branch_images.add(b);
    if (pack(0, branch_images)) {
      EmbeddingModel m;
      m.branch_map = branch;
      for (size_t i = 0; i < copy_list.size(); ++i)
        m.paths.push_back({copy_list[i].first, copy_list[i].second, found_paths[i]});
      std::string why;
      if (!verify_embedding(h, g, m, &why))
        throw std::logic_error("embedding witness failed verification: " + why);
      result = std::move(m);
      return true;
    }
    return false;
  }

  bool pack(size_t copy, VertexSet branch_images) {
    if (copy == copy_list.size()) return true;
    auto [hu, hv] = copy_list[copy];
    int s = branch[hu], t = branch[hv];
    // Parallel copies of one h-edge are interchangeable: force their paths
    // into nondecreasing lexicographic order to kill the symmetry.
    const std::vector<int>* floor_path = nullptr;
    if (copy > 0 && copy_list[copy - 1] == copy_list[copy])
      floor_path = &found_paths[copy - 1];
    std::vector<int> path{s};
    return extend(copy, branch_images, path, t, floor_path);
  }

  bool extend(size_t copy, VertexSet branch_images, std::vector<int>& path, int target,
              const std::vector<int>* floor_path) {
    int at = path.back();
    for (int next = 0; next < g.vertex_count(); ++next) {
      if (budget[at][next] <= 0) continue;
      if (floor_path) {
        // Compare (path so far + next) against the floor prefix.
        size_t i = path.size();
        if (i < floor_path->size()) {
          int f = (*floor_path)[i];
          bool equal_prefix = std::equal(path.begin(), path.end(), floor_path->begin());
          if (equal_prefix && next < f) continue;
        }
      }
      if (next == target) {
        --budget[at][next];
        --budget[next][at];
        path.push_back(next);
        found_paths[copy] = path;
        if (pack(copy + 1, branch_images)) return true;
        path.pop_back();
        ++budget[at][next];
        ++budget[next][at];
        continue;
      }
      if (branch_images.contains(next) || used_internal.contains(next)) continue;
      if (std::find(path.begin(), path.end(), next) != path.end()) continue;
      --budget[at][next];
      --budget[next][at];
      used_internal.add(next);
      path.push_back(next);
      if (extend(copy, branch_images, path, target, floor_path)) return true;
      path.pop_back();
      used_internal.remove(next);
      ++budget[at][next];
      ++budget[next][at];
    }
    return false;
  }
};

}  // namespace

std::optional<EmbeddingModel> is_topological_minor(const Multigraph& h,
                                                   const Multigraph& g) {
  if (h.vertex_count() == 0) throw std::invalid_argument("empty pattern");
  EmbedSearch search(h, g);
  if (search.run()) return search.result;
  return std::nullopt;
}

bool is_multi_topological_minor(const Multigraph& h, const Multigraph& g) {
  if (g.vertex_count() > 9)
    throw size_bound_error("is_multi_topological_minor: 9-vertex cap on the host");
  const CanonicalForm target = canonical_form(h);
  const int hn = h.vertex_count();
  const int hm = h.edge_count();
  std::unordered_set<CanonicalForm> seen;
  std::deque<Multigraph> queue;
  auto push = [&](const Multigraph& s) {
    if (s.vertex_count() < hn || s.edge_count() < hm) return false;
    CanonicalForm cf = canonical_form(s);
    if (cf == target) return true;
    if (seen.size() >= 1000000)
      throw size_bound_error("multi-topological-minor closure exceeded 1e6 states");
    if (seen.insert(cf).second) queue.push_back(canonical_graph(s));
    return false;
  };
  if (push(g)) return true;
  while (!queue.empty()) {
    Multigraph s = std::move(queue.front());
    queue.pop_front();
    for (const auto& e : s.edges())
      if (push(s.without_edge(e.u, e.v))) return true;
    for (int v = 0; v < s.vertex_count(); ++v) {
      if (s.vertex_count() <= 1) break;
      if (push(s.without_vertex(v))) return true;
      if (s.neighbors(v).size() == 2 && push(multi_smooth(s, v))) return true;
    }
  }
  return false;
}

}  // namespace scramble
