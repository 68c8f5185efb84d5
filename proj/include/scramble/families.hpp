#pragma once

#include <optional>
#include <string>

#include "scramble/multigraph.hpp"

namespace scramble {

/// Named graph families. Vertex labelings are fixed and documented:
///   K4        complete graph on 4 vertices.
///   P33       path 0-1-2 with both bundles tripled.
///   C3221     triangle with bundles (0,1):2, (1,2):2, (0,2):1.
///   LL6       6-cycle 0..5 with bundles alternating 2,1 starting at (0,1).
///   W5        5-cycle 0..4 plus hub 5 adjacent to every rim vertex.
///   P2        two vertices joined by n parallel edges (n >= 1).
///   C         cycle on n >= 3 vertices, k >= 1 parallel copies per edge;
///             bundle i joins (i, i+1 mod n).
///   Ctilde    cycle on n >= 3k vertices (k >= 2); bundles 0..2k-1 carry k+1
///             copies, the rest carry k.
///   KminusC   complete graph on n >= 4 vertices minus the Hamiltonian
///             cycle (i, i+1 mod n).
/// Out-of-range parameters are rejected with the violated constraint named.
Multigraph family(const std::string& id, std::optional<int> n = std::nullopt,
                  std::optional<int> k = std::nullopt);

Multigraph make_k4();
Multigraph make_p33();
Multigraph make_c3221();
Multigraph make_ll6();
Multigraph make_w5();
Multigraph make_banana(int n);           // P2
Multigraph make_cycle(int n, int k);     // C
Multigraph make_ctilde(int n, int k);    // Ctilde
Multigraph make_k_minus_cycle(int n);    // KminusC

}  // namespace scramble
