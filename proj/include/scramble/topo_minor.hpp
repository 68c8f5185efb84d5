#pragma once

#include <optional>
#include <string>
#include <vector>

#include "scramble/multigraph.hpp"

namespace scramble {

/// Witness that h embeds into g as a subdivision: an injective branch map
/// plus one path per edge copy of h. Paths are internally disjoint from each
/// other and from every branch image; parallel copies get their own paths.
struct EmbeddingModel {
  std::vector<int> branch_map;  // g-vertex for each h-vertex
  struct PathForEdge {
    int hu, hv;                 // h-edge endpoints (one entry per copy)
    std::vector<int> vertices;  // g-path from branch_map[hu] to branch_map[hv]
  };
  std::vector<PathForEdge> paths;
};

/// Polynomial re-check of all EmbeddingModel invariants, independent of the
/// search that produced the witness. `reason` names the first violation.
bool verify_embedding(const Multigraph& h, const Multigraph& g, const EmbeddingModel& m,
                      std::string* reason = nullptr);

/// Smooth a degree-2 vertex with two distinct neighbors, each joined by a
/// single edge: delete it and add one edge between the neighbors. Vertices
/// above v shift down by one. Rejects anything else (in particular a vertex
/// inside a parallel bundle).
Multigraph smooth(const Multigraph& g, int v);

/// Multi-smoothing: u must be adjacent to exactly two distinct vertices,
/// via m and n parallel edges; u is removed and min(m, n) edges are added
/// between them.
Multigraph multi_smooth(const Multigraph& g, int u);

/// Decides h <= g (topological minor) by exhaustive branch-vertex
/// assignment with degree pruning and internally-disjoint path packing;
/// per-pair feasibility is prefiltered with a vertex-capacity flow before
/// the exact backtracking. Returns a verified witness when one exists.
std::optional<EmbeddingModel> is_topological_minor(const Multigraph& h,
                                                   const Multigraph& g);

/// Decides the multi-topological-minor relation (deletions plus
/// multi-smoothings) by breadth-first closure from g with canonical-form
/// memoization. Desk scale: |V(g)| <= 9; the closure is capped at 1e6
/// states and errors past that.
bool is_multi_topological_minor(const Multigraph& h, const Multigraph& g);

}  // namespace scramble
