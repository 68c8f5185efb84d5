#include "scramble/multigraph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

#include "scramble/errors.hpp"

namespace scramble {

Multigraph::Multigraph(int n) : n_(n) {
  if (n < 0 || n > VertexSet::kMaxVertices)
    throw size_bound_error("vertex count must be in 0.." +
                           std::to_string(VertexSet::kMaxVertices));
  mult_.assign(static_cast<size_t>(n) * n, 0);
  wdeg_.assign(n, 0);
  neighbors_.assign(n, VertexSet{});
}

Multigraph Multigraph::from_edges(int n, const std::vector<EdgeBundle>& edges) {
  Multigraph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.mult);
  return g;
}

void Multigraph::add_edge(int u, int v, int mult) {
  set_multiplicity(u, v, multiplicity(u, v) + mult);
}

void Multigraph::set_multiplicity(int u, int v, int mult) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_)
    throw std::invalid_argument("edge endpoint out of range");
  if (u == v) throw std::invalid_argument("loops are not allowed");
  if (mult < 0) throw std::invalid_argument("multiplicity must be nonnegative");
  int old = mult_[u * n_ + v];
  mult_[u * n_ + v] = mult;
  mult_[v * n_ + u] = mult;
  total_ += mult - old;
  wdeg_[u] += mult - old;
  wdeg_[v] += mult - old;
  if (mult > 0) {
    neighbors_[u].add(v);
    neighbors_[v].add(u);
  } else {
    neighbors_[u].remove(v);
    neighbors_[v].remove(u);
  }
}

int Multigraph::distinct_pair_count() const {
  int c = 0;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (multiplicity(u, v) > 0) ++c;
  return c;
}

std::vector<EdgeBundle> Multigraph::edges() const {
  std::vector<EdgeBundle> out;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (int m = multiplicity(u, v); m > 0) out.push_back({u, v, m});
  return out;
}

bool Multigraph::connected() const {
  if (n_ == 0) return false;
  return connected_within(vertices());
}

bool Multigraph::connected_within(VertexSet s) const {
  if (s.empty()) return false;
  VertexSet reached = VertexSet::single(s.lowest());
  VertexSet frontier = reached;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](int v) { next = next | (neighbors_[v] & s); });
    next = next - reached;
    reached = reached | next;
    frontier = next;
  }
  return reached == s;
}

std::vector<VertexSet> Multigraph::components() const {
  std::vector<VertexSet> out;
  VertexSet left = vertices();
  while (!left.empty()) {
    VertexSet comp = VertexSet::single(left.lowest());
    VertexSet frontier = comp;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](int v) { next = next | neighbors_[v]; });
      next = next - comp;
      comp = comp | next;
      frontier = next;
    }
    out.push_back(comp);
    left = left - comp;
  }
  return out;
}

Multigraph Multigraph::induced(VertexSet s, std::vector<int>* old_of_new) const {
  std::vector<int> olds = s.to_vector();
  Multigraph g(static_cast<int>(olds.size()));
  for (size_t i = 0; i < olds.size(); ++i)
    for (size_t j = i + 1; j < olds.size(); ++j)
      if (int m = multiplicity(olds[i], olds[j]); m > 0)
        g.add_edge(static_cast<int>(i), static_cast<int>(j), m);
  if (old_of_new) *old_of_new = std::move(olds);
  return g;
}

Multigraph Multigraph::without_vertex(int v, std::vector<int>* old_of_new) const {
  VertexSet keep = vertices();
  keep.remove(v);
  return induced(keep, old_of_new);
}

Multigraph Multigraph::without_edge(int u, int v, int count) const {
  int m = multiplicity(u, v);
  if (m < count) throw std::invalid_argument("bundle has fewer copies than requested");
  Multigraph g = *this;
  g.set_multiplicity(u, v, m - count);
  return g;
}

Multigraph Multigraph::with_bundle(int u, int v, int mult) const {
  Multigraph g = *this;
  g.set_multiplicity(u, v, mult);
  return g;
}

Multigraph Multigraph::permuted(const std::vector<int>& new_of_old) const {
  Multigraph g(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (int m = multiplicity(u, v); m > 0)
        g.add_edge(new_of_old[u], new_of_old[v], m);
  return g;
}

namespace {

// Edmonds-Karp on an explicit capacity matrix; node count stays tiny here.
int max_flow_matrix(std::vector<std::vector<int>>& cap, int s, int t,
                    std::vector<char>* side_of_s) {
  const int n = static_cast<int>(cap.size());
  int flow = 0;
  for (;;) {
    std::vector<int> parent(n, -1);
    parent[s] = s;
    std::queue<int> q;
    q.push(s);
    while (!q.empty() && parent[t] < 0) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v)
        if (parent[v] < 0 && cap[u][v] > 0) {
          parent[v] = u;
          q.push(v);
        }
    }
    if (parent[t] < 0) {
      if (side_of_s) {
        side_of_s->assign(n, 0);
        for (int v = 0; v < n; ++v) (*side_of_s)[v] = parent[v] >= 0;
      }
      return flow;
    }
    int aug = kInfinity;
    for (int v = t; v != s; v = parent[v]) aug = std::min(aug, cap[parent[v]][v]);
    for (int v = t; v != s; v = parent[v]) {
      cap[parent[v]][v] -= aug;
      cap[v][parent[v]] += aug;
    }
    flow += aug;
  }
}

}  // namespace

int max_flow(const Multigraph& g, VertexSet source, VertexSet sink,
             VertexSet* cut_side) {
  if (source.empty() || sink.empty() || source.intersects(sink))
    throw std::invalid_argument("terminals must be nonempty and disjoint");
  // Contract each terminal set to one node; other vertices keep identity.
  const int n = g.vertex_count();
  std::vector<int> node_of(n, -1);
  std::vector<int> mids;
  for (int v = 0; v < n; ++v) {
    if (source.contains(v))
      node_of[v] = 0;
    else if (sink.contains(v))
      node_of[v] = 1;
    else {
      node_of[v] = 2 + static_cast<int>(mids.size());
      mids.push_back(v);
    }
  }
  const int nn = 2 + static_cast<int>(mids.size());
  std::vector<std::vector<int>> cap(nn, std::vector<int>(nn, 0));
  for (const auto& e : g.edges()) {
    int a = node_of[e.u], b = node_of[e.v];
    if (a == b) continue;
    cap[a][b] += e.mult;
    cap[b][a] += e.mult;
  }
  std::vector<char> side;
  int f = max_flow_matrix(cap, 0, 1, cut_side ? &side : nullptr);
  if (cut_side) {
    VertexSet s = source;
    for (size_t i = 0; i < mids.size(); ++i)
      if (side[2 + i]) s.add(mids[i]);
    *cut_side = s;
  }
  return f;
}

int edge_connectivity(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n == 0) return 0;
  if (n == 1) return kInfinity;
  if (!g.connected()) return 0;
  // lambda = min over t != 0 of maxflow(0, t).
  int best = kInfinity;
  for (int t = 1; t < n; ++t)
    best = std::min(best, max_flow(g, VertexSet::single(0), VertexSet::single(t)));
  return best;
}

int lambda2(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n < 4 || !g.connected()) return kInfinity;
  if (n > 24) throw size_bound_error("lambda2 is exhaustive; 24-vertex cap");
  int best = kInfinity;
  const VertexSet all = g.vertices();
  // Sides of a two-component split, one side forced to contain vertex 0.
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); bits += 2) {
    VertexSet a = VertexSet::from_bits(bits);
    VertexSet b = all - a;
    if (a.size() < 2 || b.size() < 2) continue;
    if (!g.connected_within(a) || !g.connected_within(b)) continue;
    int cut = 0;
    a.for_each([&](int u) {
      (g.neighbors(u) & b).for_each([&](int v) { cut += g.multiplicity(u, v); });
    });
    best = std::min(best, cut);
  }
  return best;
}

namespace {

int mis_recurse(const Multigraph& g, VertexSet pool) {
  if (pool.empty()) return 0;
  // Branch on a maximum-degree vertex within the pool.
  int pick = -1, pick_deg = -1;
  pool.for_each([&](int v) {
    int d = (g.neighbors(v) & pool).size();
    if (d > pick_deg) {
      pick_deg = d;
      pick = v;
    }
  });
  if (pick_deg == 0) return pool.size();
  VertexSet without = pool;
  without.remove(pick);
  int best = 1 + mis_recurse(g, without - g.neighbors(pick));
  best = std::max(best, mis_recurse(g, without));
  return best;
}

}  // namespace

int independence_number(const Multigraph& g) {
  if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
  return mis_recurse(g, g.vertices());
}

std::vector<std::pair<int, int>> bridges(const Multigraph& g) {
  std::vector<std::pair<int, int>> out;
  for (const auto& e : g.edges()) {
    if (e.mult != 1) continue;
    if (!g.without_edge(e.u, e.v).connected()) out.emplace_back(e.u, e.v);
  }
  return out;
}

std::vector<VertexSet> connected_subsets(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n > 24) throw size_bound_error("connected_subsets is exhaustive; 24-vertex cap");
  std::vector<VertexSet> out;
  for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
    VertexSet s = VertexSet::from_bits(bits);
    if (g.connected_within(s)) out.push_back(s);
  }
  std::stable_sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  return out;
}

}  // namespace scramble
