#pragma once

#include <functional>
#include <string>
#include <vector>

#include "scramble/multigraph.hpp"

namespace scramble {

/// Canonical encoding of a multigraph: byte 0 is the vertex count, then the
/// lower-triangle multiplicities row by row under the canonical labeling.
/// Equal encodings <=> isomorphic graphs.
using CanonicalForm = std::string;

CanonicalForm canonical_form(const Multigraph& g);

/// new_of_old permutation realizing the canonical labeling.
std::vector<int> canonical_labeling(const Multigraph& g);

/// The graph relabeled into canonical form.
Multigraph canonical_graph(const Multigraph& g);

bool isomorphic(const Multigraph& a, const Multigraph& b);

/// Every connected multigraph with at most max_n vertices and per-bundle
/// multiplicity at most max_mult, exactly once up to isomorphism, in a fixed
/// order: by vertex count, then by first occurrence in the lexicographic
/// sweep of multiplicity assignments. Emitted graphs are canonically
/// labeled. Desk-scale bounds: max_n <= 7, max_mult <= 4.
void enumerate_connected_multigraphs(int max_n, int max_mult,
                                     const std::function<void(const Multigraph&)>& emit);

std::vector<Multigraph> enumerate_connected_multigraphs(int max_n, int max_mult);

}  // namespace scramble
