#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "scramble/errors.hpp"
#include "scramble/multigraph.hpp"
#include "scramble/scramble.hpp"
#include "scramble/screewidth.hpp"
#include "scramble/topo_minor.hpp"

namespace scramble {

/// Pipeline switches. Everything defaults on; the property suites switch
/// individual rungs off to break circularity when a rung is itself the
/// statement under test.
struct SnOptions {
  bool use_tree_shortcut = true;
  bool use_bridge_split = true;
  bool use_classifier = true;
  bool use_scw_bound = true;
  Deadline deadline;
};

/// Marker for "the exhaustive antichain search refuted every larger order".
struct ExhaustedSearch {
  std::string description;
};

/// Paired witnesses for an exact scramble number: a scramble of the claimed
/// order below, and either an equal-width tree-cut decomposition or an
/// exhausted-search marker above. Both re-verify independently.
struct SnCertificate {
  int value = 0;
  Scramble lower_witness;
  ScrambleOrder lower_order;
  std::variant<TreeCutDecomposition, ExhaustedSearch> upper_witness;
};

/// Exact scramble number with certificate. Pipeline: tree test, bridge
/// split, the forbidden-minor classifier for <=2 vs >=3, then bounds
/// (vertex-scramble order below, exact screewidth above) closed by
/// exhaustive search over antichain scrambles of connected subsets.
/// Desk scale: connected input, |V| <= 8.
SnCertificate sn_exact(const Multigraph& g, const SnOptions& opts = {});

/// Scramble number of a possibly disconnected graph: max over components.
int sn_max_over_components(const Multigraph& g, const SnOptions& opts = {});

enum class SnVerdict { kSn1, kSn2, kSnAtLeast3 };

/// Outcome of the finite forbidden-topological-minor test for sn <= 2.
struct ClassificationResult {
  SnVerdict verdict = SnVerdict::kSn1;
  /// For kSnAtLeast3: which pattern embedded, with its witness.
  std::string pattern;
  std::optional<EmbeddingModel> embedding;
  /// Patterns checked (all four, in order) when the verdict is kSn2.
  std::vector<std::string> negative_checks;
};

/// Classifies sn(g) as 1 (tree), 2, or >= 3 via the four minimal
/// obstructions K4, P33, C3221, LL6. Connected input required.
ClassificationResult classify_sn_le_2(const Multigraph& g);

/// Exact disjoint scramble number: the same search restricted to pairwise
/// disjoint egg families (hitting number = egg count there).
int dsn_exact(const Multigraph& g, const SnOptions& opts = {},
              Scramble* witness = nullptr);

struct MinimalityResult {
  bool minimal = false;
  int sn = 0;
  std::string failure;  // empty when minimal
  /// sn after deleting one copy from each bundle (u, v, sn_after).
  std::vector<std::tuple<int, int, int>> deletions;
};

/// Is g k-scramble-minimal? Checks sn(g) >= k, that no degree-2 vertex has
/// two distinct single-edge neighbors (such a vertex could be smoothed
/// without changing sn), and that deleting any single edge copy drops sn
/// below k. Any proper topological minor factors through one of those two
/// first moves, so the check is sufficient.
MinimalityResult is_k_scramble_minimal(const Multigraph& g, int k,
                                       const SnOptions& opts = {});

struct SweepReport {
  std::string name;
  int checked = 0;
  std::vector<std::string> violations;
  bool passed() const { return violations.empty(); }
};

/// Every 3-edge-connected multigraph with 3 <= |V| <= max_n and
/// multiplicity <= max_mult must contain K4, P33 or C3221 as a topological
/// minor. Caps: max_n <= 6, max_mult <= 4.
SweepReport verify_corollary_3ec(int max_n, int max_mult, int threads = 1);

/// Named property suites over a graph universe (see the CLI `verify lemma`
/// subcommand): edgeconnect, bridge, restrict, monotone, scw-bound.
SweepReport run_property_suite(const std::string& name,
                               const std::vector<Multigraph>& graphs, int threads = 1);

/// Additional internal consistency sweeps used by the acceptance suite.
/// Pairwise over the universe: h topological (or multi-topological) minor
/// of g implies sn(h) <= sn(g). Quadratic; meant for graphs <= 4 vertices.
SweepReport property_minor_monotonicity(const std::vector<Multigraph>& graphs,
                                        int threads = 1);
SweepReport property_superset_redundancy(const std::vector<Multigraph>& graphs);
/// Brute force over every scramble (all subsets of the egg universe, no
/// antichain restriction): the max order must equal sn_exact. Hosts above
/// 4 vertices are skipped.
SweepReport property_sn_bruteforce(const std::vector<Multigraph>& graphs);
/// The full pipeline and the bare search (every shortcut disabled) must
/// agree on sn for every graph.
SweepReport property_pipeline_consistency(const std::vector<Multigraph>& graphs,
                                          int threads = 1);
SweepReport property_eggcut_definition(const std::vector<Multigraph>& graphs);
SweepReport property_e2_formula(const std::vector<Multigraph>& graphs);
SweepReport property_dsn_relations(const std::vector<Multigraph>& graphs);

/// Deterministic stream of connected multigraphs for the property sweeps:
/// a fixed-constant 64-bit LCG (no external seed), vertex counts 3..max_n,
/// disconnected draws discarded.
std::vector<Multigraph> pseudorandom_connected_multigraphs(int count, int max_n,
                                                           int max_mult);

}  // namespace scramble
