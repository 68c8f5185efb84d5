#pragma once

#include <optional>
#include <vector>

#include "scramble/multigraph.hpp"

namespace scramble {

/// A scramble: a duplicate-free set of eggs (connected vertex subsets) on a
/// host graph. Eggs are kept sorted by size then bit pattern. Immutable.
struct Scramble {
  Multigraph host;
  std::vector<VertexSet> eggs;
};

/// Validates eggs (nonempty, connected in the host), deduplicates and sorts.
/// An empty egg list is rejected: the order of an empty scramble is
/// undefined.
Scramble make_scramble(const Multigraph& host, std::vector<VertexSet> eggs);

/// Evaluated order of a scramble together with its witnesses.
struct ScrambleOrder {
  int hitting = 0;
  int egg_cut = kInfinity;  // kInfinity when all egg pairs overlap
  int order = 0;            // min(hitting, egg_cut)
  VertexSet hitting_witness;
  /// Indices (into eggs) of a disjoint pair realizing the egg cut, plus the
  /// cut edges with the number of copies each contributes.
  std::optional<std::pair<int, int>> cut_pair;
  std::vector<EdgeBundle> cut_edges;
};

/// Exact minimum hitting set size (branch and bound on the smallest unhit
/// egg). `witness` receives one optimal hitting set.
int hitting_number(const Scramble& s, VertexSet* witness = nullptr);

/// Same search over a raw egg list with a cap: returns the exact minimum
/// when it is <= cap, otherwise cap+1.
int hitting_number_raw(const std::vector<VertexSet>& eggs, int cap,
                       VertexSet* witness = nullptr);

/// Exact egg-cut number: minimum over disjoint egg pairs of the contracted
/// min cut between them; kInfinity when every pair of eggs overlaps.
int egg_cut_number(const Scramble& s, std::optional<std::pair<int, int>>* pair = nullptr,
                   std::vector<EdgeBundle>* cut = nullptr);

ScrambleOrder order(const Scramble& s);

/// Restriction to a subgraph h of the host. `host_of_sub[i]` names the host
/// vertex that is vertex i of h (identity when omitted; then h must have the
/// same vertex count). Eggs are intersected with V(h); empty or disconnected
/// intersections are dropped, duplicates merged. Rejects h that is not a
/// subgraph (vertex subset plus edge sub-multiset) of the host.
Scramble restrict(const Scramble& s, const Multigraph& h,
                  const std::vector<int>& host_of_sub = {});

bool is_disjoint(const Scramble& s);

/// The 2-uniform scramble: one egg {u, v} per adjacent vertex pair.
Scramble uniform_scramble_2(const Multigraph& g);

/// The scramble whose eggs are the single vertices. Its order is
/// min(|V|, lambda).
Scramble vertex_scramble(const Multigraph& g);

}  // namespace scramble
