#include "scramble/screewidth.hpp"

#include <algorithm>
#include <stdexcept>

#include "scramble/errors.hpp"
#include "scramble/families.hpp"

namespace scramble {

namespace {

// Node sets of the components of the decomposition tree after deleting
// `drop_node` (or after deleting the link when drop_link >= 0).
std::vector<std::vector<int>> tree_components(const TreeCutDecomposition& d, int drop_node,
                                              int drop_link) {
  std::vector<std::vector<int>> adj(d.node_count);
  for (int i = 0; i < static_cast<int>(d.links.size()); ++i) {
    if (i == drop_link) continue;
    auto [a, b] = d.links[i];
    if (a == drop_node || b == drop_node) continue;
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> comp(d.node_count, -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < d.node_count; ++start) {
    if (start == drop_node || comp[start] >= 0) continue;
    std::vector<int> stack{start};
    comp[start] = static_cast<int>(out.size());
    out.emplace_back();
    while (!stack.empty()) {
      int b = stack.back();
      stack.pop_back();
      out.back().push_back(b);
      for (int nb : adj[b])
        if (comp[nb] < 0) {
          comp[nb] = comp[b];
          stack.push_back(nb);
        }
    }
  }
  return out;
}

std::vector<EdgeBundle> crossing_edges(const Multigraph& g,
                                       const std::vector<VertexSet>& parts) {
  std::vector<int> part_of(g.vertex_count(), -1);
  for (int p = 0; p < static_cast<int>(parts.size()); ++p)
    parts[p].for_each([&](int v) { part_of[v] = p; });
  std::vector<EdgeBundle> out;
  for (const auto& e : g.edges())
    if (part_of[e.u] >= 0 && part_of[e.v] >= 0 && part_of[e.u] != part_of[e.v])
      out.push_back(e);
  return out;
}

}  // namespace

void validate_decomposition(const Multigraph& g, const TreeCutDecomposition& d) {
  if (d.node_count <= 0) throw std::invalid_argument("decomposition has no nodes");
  if (static_cast<int>(d.bags.size()) != d.node_count)
    throw std::invalid_argument("bag count differs from node count");
  if (static_cast<int>(d.links.size()) != d.node_count - 1)
    throw std::invalid_argument("a tree on t nodes has t-1 links");
  for (auto [a, b] : d.links)
    if (a < 0 || b < 0 || a >= d.node_count || b >= d.node_count || a == b)
      throw std::invalid_argument("link endpoint out of range");
  if (d.node_count > 0 && tree_components(d, -1, -1).size() != 1)
    throw std::invalid_argument("links do not form a connected tree");
  VertexSet seen;
  for (const auto& bag : d.bags) {
    if (!bag.subset_of(g.vertices()))
      throw std::invalid_argument("bag contains a vertex outside the graph");
    if (bag.intersects(seen)) throw std::invalid_argument("bags are not disjoint");
    seen = seen | bag;
  }
  if (seen != g.vertices())
    throw std::invalid_argument("bags do not cover every vertex");
}

std::vector<EdgeBundle> link_adhesion(const Multigraph& g, const TreeCutDecomposition& d,
                                      int link) {
  if (link < 0 || link >= static_cast<int>(d.links.size()))
    throw std::invalid_argument("unknown link");
  auto comps = tree_components(d, -1, link);
  std::vector<VertexSet> parts;
  for (const auto& comp : comps) {
    VertexSet s;
    for (int b : comp) s = s | d.bags[b];
    parts.push_back(s);
  }
  return crossing_edges(g, parts);
}

std::vector<EdgeBundle> node_adhesion(const Multigraph& g, const TreeCutDecomposition& d,
                                      int node) {
  if (node < 0 || node >= d.node_count) throw std::invalid_argument("unknown node");
  auto comps = tree_components(d, node, -1);
  std::vector<VertexSet> parts;
  for (const auto& comp : comps) {
    VertexSet s;
    for (int b : comp) s = s | d.bags[b];
    parts.push_back(s);
  }
  return crossing_edges(g, parts);
}

int width(const Multigraph& g, const TreeCutDecomposition& d) {
  validate_decomposition(g, d);
  int w = 0;
  for (int l = 0; l < static_cast<int>(d.links.size()); ++l)
    w = std::max(w, bundle_total(link_adhesion(g, d, l)));
  for (int b = 0; b < d.node_count; ++b)
    w = std::max(w, bundle_total(node_adhesion(g, d, b)) + d.bags[b].size());
  return w;
}

namespace {

// ---- exact screewidth -----------------------------------------------------
//
// Root the decomposition anywhere. The link above a subtree containing
// vertex set S has adhesion cut(S), independent of the subtree's internal
// shape; the node term at a node with bag X, child subtrees S_1..S_c and
// parent-side rest P is |X| + (edges between different members of
// {S_1..S_c, P}). Both depend only on vertex sets, so minimizing the width
// of a subtree hanging below a link is a function best(S) of its vertex set
// alone.

struct ScwChoice {
  VertexSet bag;
  std::vector<VertexSet> blocks;
};

struct ScwSolver {
  const Multigraph& g;
  int n;
  int full;
  std::vector<int> inner;  // 2^n: edge copies with both endpoints inside
  std::vector<int> best;   // memo; -1 = unknown
  std::vector<ScwChoice> choice;

  explicit ScwSolver(const Multigraph& graph)
      : g(graph), n(graph.vertex_count()), full((1 << n) - 1) {
    inner.assign(1 << n, 0);
    for (int m = 1; m <= full; ++m) {
      int v = __builtin_ctz(m);
      int rest = m & (m - 1);
      int add = 0;
      VertexSet vs = VertexSet::from_bits(static_cast<std::uint64_t>(rest));
      (g.neighbors(v) & vs).for_each([&](int u) { add += g.multiplicity(v, u); });
      inner[m] = inner[rest] + add;
    }
    best.assign(1 << n, -1);
    choice.resize(1 << n);
  }

  int cut(int s) const { return inner[full] - inner[s] - inner[full & ~s]; }

  // Edges crossing between different members of {blocks..., P} where the
  // member union is (all \ X); P is the complement of S. Derivation:
  // inner(all \ X) - sum inner(block) - inner(P).
  int solve(int s) {
    if (best[s] >= 0) return best[s];
    best[s] = g.vertex_count() + g.edge_count() + 1;  // safe upper sentinel
    enumerate(s, s, /*is_root=*/false);
    return best[s];
  }

  int solve_root() {
    best_root = g.vertex_count() + g.edge_count() + 1;
    enumerate(full, full, /*is_root=*/true);
    return best_root;
  }

  int best_root = 0;
  ScwChoice root_choice;

  // Enumerate bags X subset of s, then partitions of s \ X into blocks.
  // The block list is per-call state: solve() recursion re-enters here.
  void enumerate(int s, int /*unused*/, bool is_root) {
    std::vector<int> blocks;
    int x = s;
    for (;;) {
      blocks.clear();
      descend_blocks(s, x, s & ~x, is_root, VertexSet::from_bits(x).size(), blocks);
      if (x == 0) break;
      x = (x - 1) & s;
    }
  }

  int incumbent(bool is_root, int s) const { return is_root ? best_root : best[s]; }

  void record(bool is_root, int s, int value, VertexSet bag,
              const std::vector<int>& blocks) {
    ScwChoice c;
    c.bag = bag;
    for (int b : blocks) c.blocks.push_back(VertexSet::from_bits(b));
    if (is_root) {
      best_root = value;
      root_choice = std::move(c);
    } else {
      best[s] = value;
      choice[s] = std::move(c);
    }
  }

  // Partition `rest` into blocks (each handed to solve recursively); the
  // running node term is finished once rest is empty.
  void descend_blocks(int s, int x, int rest, bool is_root, int bag_size,
                      std::vector<int>& blocks) {
    if (rest == 0) {
      // Node term: |X| + cross({blocks, P}).
      int p = full & ~s;
      int sum_inner = 0;
      for (int b : blocks) sum_inner += inner[b];
      int cross = inner[full & ~x] - sum_inner - inner[p];
      if (x == 0 && blocks.size() == 1 && blocks[0] == s)
        return;  // empty degree<=2 node, no progress
      int term = bag_size + cross;
      int value = term;
      for (int b : blocks) {
        value = std::max(value, cut(b));
        value = std::max(value, solve(b));
        if (value >= incumbent(is_root, s)) return;
      }
      if (value < incumbent(is_root, s))
        record(is_root, s, value, VertexSet::from_bits(x), blocks);
      return;
    }
    // First block takes the lowest remaining vertex; enumerate its subsets.
    int low = rest & (-rest);
    int others = rest & ~low;
    for (int sub = others;; sub = (sub - 1) & others) {
      int block = sub | low;
      blocks.push_back(block);
      descend_blocks(s, x, rest & ~block, is_root, bag_size, blocks);
      blocks.pop_back();
      if (sub == 0) break;
    }
  }

  // Materialize the winning decomposition.
  TreeCutDecomposition build() {
    TreeCutDecomposition d;
    build_node(root_choice, full, &d);
    return d;
  }

  int build_node(const ScwChoice& c, int s, TreeCutDecomposition* d) {
    int id = d->node_count++;
    d->bags.push_back(c.bag);
    for (VertexSet blk : c.blocks) {
      int sub = static_cast<int>(blk.bits());
      int child = build_node(choice[sub], sub, d);
      d->links.emplace_back(id, child);
    }
    (void)s;
    return id;
  }
};

}  // namespace

std::pair<int, TreeCutDecomposition> screewidth_exact(const Multigraph& g,
                                                      int node_budget) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("empty graph");
  if (n > 8) throw size_bound_error("screewidth_exact: 8-vertex cap");
  if (node_budget < 0) node_budget = 2 * n;
  if (node_budget < 2 * n)
    throw std::invalid_argument(
        "node budget below 2|V| may exclude optimal decompositions");
  ScwSolver solver(g);
  int w = solver.solve_root();
  TreeCutDecomposition d = solver.build();
  return {w, d};
}

namespace {

TreeCutDecomposition singleton_path(const std::vector<int>& order) {
  TreeCutDecomposition d;
  d.node_count = static_cast<int>(order.size());
  for (int i = 0; i < d.node_count; ++i) {
    d.bags.push_back(VertexSet::single(order[i]));
    if (i > 0) d.links.emplace_back(i - 1, i);
  }
  return d;
}

TreeCutDecomposition bag_path(const std::vector<VertexSet>& bags) {
  TreeCutDecomposition d;
  d.node_count = static_cast<int>(bags.size());
  d.bags = bags;
  for (int i = 1; i < d.node_count; ++i) d.links.emplace_back(i - 1, i);
  return d;
}

}  // namespace

std::pair<Multigraph, TreeCutDecomposition> canonical_decomposition(CycleFamily fam, int n,
                                                                    int k,
                                                                    int deleted_bundle) {
  if (fam == CycleFamily::C) {
    Multigraph g = make_cycle(n, k);
    if (deleted_bundle < 0 || deleted_bundle >= n)
      throw std::invalid_argument("bundle index outside family structure");
    int u = deleted_bundle, v = (deleted_bundle + 1) % n;
    Multigraph h = g.without_edge(std::min(u, v), std::max(u, v));
    // Path of singletons starting just past the cut bundle.
    std::vector<int> order;
    for (int i = 0; i < n; ++i) order.push_back((deleted_bundle + 1 + i) % n);
    return {h, singleton_path(order)};
  }

  Multigraph g = make_ctilde(n, k);
  if (deleted_bundle < 0 || deleted_bundle >= n)
    throw std::invalid_argument("bundle index outside family structure");
  int u = deleted_bundle, v = (deleted_bundle + 1) % n;
  Multigraph h = g.without_edge(std::min(u, v), std::max(u, v));

  if (deleted_bundle >= 2 * k) {
    // Light bundle: cyclic singleton path; the k-1 remaining copies cross
    // every link, each other link carries one full bundle.
    std::vector<int> order;
    for (int i = 0; i < n; ++i) order.push_back((deleted_bundle + 1 + i) % n);
    return {h, singleton_path(order)};
  }

  // Heavy bundle. 0-based heavy positions are 0..2k-1; the reflection
  // j -> (2k - j) mod n is an automorphism sending bundle p to 2k-1-p, so
  // it suffices to build the pattern for p in {k, ..., 2k-1}.
  int p = deleted_bundle;
  bool reflected = false;
  if (p < k) {
    p = 2 * k - 1 - p;
    reflected = true;
  }
  std::vector<VertexSet> bags;
  if (p >= k + 1) {
    // Off-center: leaf bag {0..p}, bag {p+1..2k+1}, then singletons. Every
    // link carries 2k edges (remnant or a light bundle, plus the wrap
    // bundle); the second bag has size <= k and adhesion k.
    VertexSet first, second;
    for (int i = 0; i <= p; ++i) first.add(i);
    for (int i = p + 1; i <= 2 * k + 1; ++i) second.add(i);
    bags.push_back(first);
    bags.push_back(second);
    for (int i = 2 * k + 2; i < n; ++i) bags.push_back(VertexSet::single(i));
  } else {
    // Central bundle (p == k): two end bags of k+1 vertices flanking the
    // remnant, singleton chain through the light arc. The remnant's k
    // copies cross every link together with one light bundle.
    VertexSet first, second;
    for (int i = k + 1; i <= 2 * k + 1; ++i) first.add(i);
    for (int i = 0; i <= k; ++i) second.add(i);
    bags.push_back(first);
    for (int i = 2 * k + 2; i < n; ++i) bags.push_back(VertexSet::single(i));
    bags.push_back(second);
  }
  TreeCutDecomposition d = bag_path(bags);
  if (reflected) {
    for (auto& bag : d.bags) {
      VertexSet moved;
      bag.for_each([&](int j) { moved.add(((2 * k - j) % n + n) % n); });
      bag = moved;
    }
  }
  return {h, d};
}

}  // namespace scramble
