#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <utility>
#include <vector>

namespace scramble {

/// Stand-in for an infinite edge count (single-vertex edge connectivity,
/// egg-cut number of an all-overlapping scramble, ...).
inline constexpr int kInfinity = std::numeric_limits<int>::max();

/// Subset of the vertices 0..n-1 of a host graph, packed into one word.
class VertexSet {
 public:
  static constexpr int kMaxVertices = 64;

  constexpr VertexSet() = default;
  static constexpr VertexSet from_bits(std::uint64_t bits) {
    VertexSet s;
    s.bits_ = bits;
    return s;
  }
  static constexpr VertexSet single(int v) { return from_bits(std::uint64_t{1} << v); }
  static constexpr VertexSet all(int n) {
    return from_bits(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }
  static VertexSet of(std::initializer_list<int> vs) {
    VertexSet s;
    for (int v : vs) s.add(v);
    return s;
  }

  std::uint64_t bits() const { return bits_; }
  bool contains(int v) const { return (bits_ >> v) & 1; }
  void add(int v) { bits_ |= std::uint64_t{1} << v; }
  void remove(int v) { bits_ &= ~(std::uint64_t{1} << v); }
  int size() const { return __builtin_popcountll(bits_); }
  bool empty() const { return bits_ == 0; }
  bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
  bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
  int lowest() const { return __builtin_ctzll(bits_); }

  friend VertexSet operator|(VertexSet a, VertexSet b) { return from_bits(a.bits_ | b.bits_); }
  friend VertexSet operator&(VertexSet a, VertexSet b) { return from_bits(a.bits_ & b.bits_); }
  friend VertexSet operator-(VertexSet a, VertexSet b) { return from_bits(a.bits_ & ~b.bits_); }
  friend bool operator==(VertexSet a, VertexSet b) = default;
  friend auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(__builtin_ctzll(b));
    return out;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::uint64_t b = bits_; b; b &= b - 1) fn(__builtin_ctzll(b));
  }

 private:
  std::uint64_t bits_ = 0;
};

/// One edge bundle: an unordered vertex pair u < v with its multiplicity.
struct EdgeBundle {
  int u;
  int v;
  int mult;
  friend bool operator==(const EdgeBundle&, const EdgeBundle&) = default;
};

/// Undirected multigraph without loops, vertices 0..n-1, parallel edges
/// stored as per-pair multiplicities. Instances are treated as immutable
/// values once built; every algorithm takes a const reference and returns
/// fresh graphs, so sharing across threads is safe.
class Multigraph {
 public:
  explicit Multigraph(int n = 0);
  static Multigraph from_edges(int n, const std::vector<EdgeBundle>& edges);

  int vertex_count() const { return n_; }
  int multiplicity(int u, int v) const { return mult_[u * n_ + v]; }
  /// Total edge count, counting parallel copies.
  int edge_count() const { return total_; }
  int distinct_pair_count() const;

  /// Multiplicity-weighted degree.
  int degree(int v) const { return wdeg_[v]; }
  /// Number of distinct neighbors.
  int simple_degree(int v) const { return neighbors_[v].size(); }
  VertexSet neighbors(int v) const { return neighbors_[v]; }
  VertexSet vertices() const { return VertexSet::all(n_); }

  /// Bundles sorted by (u, v), u < v.
  std::vector<EdgeBundle> edges() const;

  bool connected() const;
  /// Is the subgraph induced by `s` connected? Empty sets count as not.
  bool connected_within(VertexSet s) const;
  std::vector<VertexSet> components() const;

  /// Induced subgraph on `s`; `old_of_new[i]` gives the source index of the
  /// i-th vertex of the result (ascending order of `s`).
  Multigraph induced(VertexSet s, std::vector<int>* old_of_new = nullptr) const;
  Multigraph without_vertex(int v, std::vector<int>* old_of_new = nullptr) const;
  /// Removes `count` parallel copies from the bundle {u, v}.
  Multigraph without_edge(int u, int v, int count = 1) const;
  Multigraph with_bundle(int u, int v, int mult) const;
  Multigraph permuted(const std::vector<int>& new_of_old) const;

  void add_edge(int u, int v, int mult = 1);
  void set_multiplicity(int u, int v, int mult);

  friend bool operator==(const Multigraph& a, const Multigraph& b) {
    return a.n_ == b.n_ && a.mult_ == b.mult_;
  }

 private:
  int n_ = 0;
  int total_ = 0;
  std::vector<int> mult_;        // n*n symmetric, zero diagonal
  std::vector<int> wdeg_;
  std::vector<VertexSet> neighbors_;
};

/// Max-flow between two disjoint nonempty vertex sets, each contracted to a
/// terminal; capacities are the edge multiplicities. `cut_side`, if given,
/// receives the source-side vertex set of a minimum cut; on a connected host
/// both that side and its complement induce connected subgraphs.
int max_flow(const Multigraph& g, VertexSet source, VertexSet sink,
             VertexSet* cut_side = nullptr);

/// Minimum number of edges whose deletion disconnects g. 0 when already
/// disconnected; kInfinity for a single vertex (no cut exists).
int edge_connectivity(const Multigraph& g);

/// Minimum number of edges whose deletion splits g into exactly two
/// connected components of at least two vertices each; kInfinity when no
/// such split exists.
int lambda2(const Multigraph& g);

/// Exact independence number.
int independence_number(const Multigraph& g);

/// All bridges: multiplicity-1 bundles whose deletion disconnects g.
/// A parallel bundle is never a bridge.
std::vector<std::pair<int, int>> bridges(const Multigraph& g);

/// All nonempty vertex subsets inducing a connected subgraph, ordered by
/// size then by bit pattern. This is the egg universe of the host.
std::vector<VertexSet> connected_subsets(const Multigraph& g);

}  // namespace scramble
