#pragma once

#include <utility>
#include <vector>

#include "scramble/multigraph.hpp"

namespace scramble {

/// Tree-cut decomposition: a tree on `node_count` nodes (links are its
/// edges) plus one bag per node. Bags form a near partition of the host's
/// vertices: pairwise disjoint, union everything, empty bags allowed.
struct TreeCutDecomposition {
  int node_count = 0;
  std::vector<std::pair<int, int>> links;
  std::vector<VertexSet> bags;
};

/// Throws std::invalid_argument naming the violated invariant (not a tree,
/// bags overlap, bags miss a vertex, ...). Never silently normalizes.
void validate_decomposition(const Multigraph& g, const TreeCutDecomposition& d);

/// Edges of g crossing the bipartition induced by deleting link l (indexed
/// into d.links), with multiplicities.
std::vector<EdgeBundle> link_adhesion(const Multigraph& g, const TreeCutDecomposition& d,
                                      int link);

/// Edges of g whose endpoints lie in bags of two different components of
/// the tree minus node b. Empty for leaves by convention (and vacuously:
/// one component remains).
std::vector<EdgeBundle> node_adhesion(const Multigraph& g, const TreeCutDecomposition& d,
                                      int node);

inline int bundle_total(const std::vector<EdgeBundle>& edges) {
  int t = 0;
  for (const auto& e : edges) t += e.mult;
  return t;
}

/// Width: max over links of the adhesion size and over nodes of adhesion
/// size plus bag size. Validates first; a one-node decomposition has width
/// |V(g)|.
int width(const Multigraph& g, const TreeCutDecomposition& d);

/// Exact screewidth with one optimal decomposition, by dynamic programming
/// over rooted sub-decompositions keyed on the vertex subset below a link.
/// Covers every decomposition: empty leaves and empty degree-2 nodes never
/// lower width, so trees never need more than 2|V| nodes. `node_budget`
/// defaults to 2|V(g)|; smaller budgets are rejected because optimality is
/// only guaranteed at that size. Desk scale: |V(g)| <= 8.
std::pair<int, TreeCutDecomposition> screewidth_exact(const Multigraph& g,
                                                      int node_budget = -1);

enum class CycleFamily { C, Ctilde };

/// The width-optimal decompositions used for the single-edge-deleted cycle
/// families, built directly (no search):
///   C(n, k) minus one copy from bundle `deleted_bundle`: path of singleton
///     bags in cyclic order; width 2k-1.
///   Ctilde(n, k) minus one copy: width 2k, with the bag pattern depending
///     on whether the bundle is light (k), heavy off-center, or one of the
///     two central heavy bundles.
/// Returns the deleted graph and its decomposition.
std::pair<Multigraph, TreeCutDecomposition> canonical_decomposition(CycleFamily fam, int n,
                                                                    int k,
                                                                    int deleted_bundle);

}  // namespace scramble
