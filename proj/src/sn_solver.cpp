#include "scramble/sn_solver.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

#include "scramble/canonical.hpp"
#include "scramble/families.hpp"
#include "scramble/parallel.hpp"

namespace scramble {

namespace {

// ---- exhaustive scramble search --------------------------------------------
//
// sn(G) is the max order over antichain scrambles of connected subsets:
// dropping an egg that strictly contains another egg never lowers the order
// (a hit on the subset hits the superset; fewer pairs can only raise the
// egg cut), so antichains suffice. The search asks "is there a scramble of
// order >= t": it grows an antichain whose disjoint pairs all have flow
// >= t (so the egg cut stays >= t by construction) and succeeds once the
// hitting number reaches t. A branch dies when even the chosen eggs plus
// every still-compatible pool egg cannot be hit by fewer than t vertices.
class ScrambleSearch {
 public:
  ScrambleSearch(const Multigraph& g, Deadline deadline)
      : g_(g), eggs_(connected_subsets(g)), deadline_(deadline) {
    const int m = static_cast<int>(eggs_.size());
    flow_.assign(m, std::vector<int>(m, -1));
  }

  int egg_count() const { return static_cast<int>(eggs_.size()); }

  bool exists_order_ge(int t, std::vector<VertexSet>* witness) {
    return start(t, witness, /*disjoint=*/false);
  }

  bool exists_disjoint_order_ge(int t, std::vector<VertexSet>* witness) {
    return start(t, witness, /*disjoint=*/true);
  }

 private:
  bool start(int t, std::vector<VertexSet>* witness, bool disjoint) {
    t_ = t;
    witness_ = witness;
    disjoint_only_ = disjoint;
    chosen_.clear();
    chosen_eggs_.clear();
    std::vector<int> pool(eggs_.size());
    std::iota(pool.begin(), pool.end(), 0);
    return dfs(pool);
  }

  int flow(int i, int j) {
    if (flow_[i][j] < 0)
      flow_[i][j] = flow_[j][i] = max_flow(g_, eggs_[i], eggs_[j]);
    return flow_[i][j];
  }

  bool compatible(int cand, int with) {
    const VertexSet a = eggs_[with], b = eggs_[cand];
    if (disjoint_only_) return !a.intersects(b) && flow(with, cand) >= t_;
    if (a.intersects(b)) return !a.subset_of(b) && !b.subset_of(a);
    return flow(with, cand) >= t_;
  }

  bool dfs(const std::vector<int>& pool) {
    if ((++ticks_ & 255) == 0 && deadline_.expired())
      throw timeout_error("scramble search deadline", -1, -1);
    if (disjoint_only_) {
      if (static_cast<int>(chosen_.size()) >= t_) return succeed();
      if (static_cast<int>(chosen_.size() + pool.size()) < t_) return false;
      for (size_t pos = 0; pos < pool.size(); ++pos) {
        const int idx = pool[pos];
        std::vector<int> next_pool;
        next_pool.reserve(pool.size() - pos);
        for (size_t q = pos + 1; q < pool.size(); ++q)
          if (compatible(pool[q], idx)) next_pool.push_back(pool[q]);
        chosen_.push_back(idx);
        chosen_eggs_.push_back(eggs_[idx]);
        if (dfs(next_pool)) return true;
        chosen_.pop_back();
        chosen_eggs_.pop_back();
      }
      return false;
    }
    // Every disjoint pair in `chosen` has flow >= t by pool construction,
    // so the egg cut is already >= t; only the hitting number can be short.
    VertexSet w;
    if (hitting_number_raw(chosen_eggs_, t_ - 1, &w) > t_ - 1) return succeed();
    // Optimistic bound over chosen plus everything still addable.
    {
      std::vector<VertexSet> all = chosen_eggs_;
      for (int i : pool) all.push_back(eggs_[i]);
      if (hitting_number_raw(all, t_ - 1) <= t_ - 1) return false;
    }
    // Any extension of order >= t must add an egg missed by the minimum
    // hitting set w. Branch on those; branch k excludes candidates 1..k-1.
    std::vector<int> candidates;
    for (int i : pool)
      if (!eggs_[i].intersects(w)) candidates.push_back(i);
    for (size_t pos = 0; pos < candidates.size(); ++pos) {
      const int idx = candidates[pos];
      std::vector<int> next_pool;
      next_pool.reserve(pool.size());
      for (int q : pool) {
        bool excluded = false;
        for (size_t r = 0; r <= pos; ++r)
          if (candidates[r] == q) {
            excluded = true;
            break;
          }
        if (!excluded && compatible(q, idx)) next_pool.push_back(q);
      }
      chosen_.push_back(idx);
      chosen_eggs_.push_back(eggs_[idx]);
      if (dfs(next_pool)) return true;
      chosen_.pop_back();
      chosen_eggs_.pop_back();
    }
    return false;
  }

  bool succeed() {
    if (witness_) *witness_ = chosen_eggs_;
    return true;
  }

  const Multigraph& g_;
  std::vector<VertexSet> eggs_;
  std::vector<std::vector<int>> flow_;
  Deadline deadline_;
  int t_ = 0;
  bool disjoint_only_ = false;
  std::vector<int> chosen_;
  std::vector<VertexSet> chosen_eggs_;
  std::vector<VertexSet>* witness_ = nullptr;
  unsigned ticks_ = 0;
};

const char* kPatternNames[4] = {"K4", "P33", "C3221", "LL6"};

Multigraph pattern_graph(int i) {
  switch (i) {
    case 0: return make_k4();
    case 1: return make_p33();
    case 2: return make_c3221();
    default: return make_ll6();
  }
}

bool is_tree(const Multigraph& g) {
  return g.connected() && g.edge_count() == g.vertex_count() - 1;
}

TreeCutDecomposition tree_decomposition_of_tree(const Multigraph& g) {
  TreeCutDecomposition d;
  d.node_count = g.vertex_count();
  for (int v = 0; v < g.vertex_count(); ++v) d.bags.push_back(VertexSet::single(v));
  for (const auto& e : g.edges()) d.links.emplace_back(e.u, e.v);
  return d;
}

// Two distinct vertices on some cycle: either a parallel bundle, or a DFS
// back edge on the underlying simple graph.
std::pair<int, int> cycle_pair(const Multigraph& g) {
  for (const auto& e : g.edges())
    if (e.mult >= 2) return {e.u, e.v};
  std::vector<int> parent(g.vertex_count(), -2);
  for (int root = 0; root < g.vertex_count(); ++root) {
    if (parent[root] != -2) continue;
    parent[root] = -1;
    std::vector<int> stack{root};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int u : g.neighbors(v).to_vector()) {
        if (u == parent[v]) continue;
        if (parent[u] != -2) return {std::min(u, v), std::max(u, v)};
        parent[u] = v;
        stack.push_back(u);
      }
    }
  }
  throw std::logic_error("cycle_pair called on a forest");
}

std::string exhausted_text(int eggs, int refuted_t) {
  return "antichain scramble search over " + std::to_string(eggs) +
         " connected subsets refuted every scramble of order >= " +
         std::to_string(refuted_t);
}

SnCertificate certify(const Multigraph& g, int value, std::vector<VertexSet> eggs,
                      std::variant<TreeCutDecomposition, ExhaustedSearch> upper) {
  SnCertificate cert;
  cert.value = value;
  cert.lower_witness = make_scramble(g, std::move(eggs));
  cert.lower_order = order(cert.lower_witness);
  if (cert.lower_order.order != value)
    throw std::logic_error("certificate lower witness has wrong order");
  if (const auto* d = std::get_if<TreeCutDecomposition>(&upper)) {
    if (width(g, *d) != value)
      throw std::logic_error("certificate upper witness has wrong width");
  }
  cert.upper_witness = std::move(upper);
  return cert;
}

}  // namespace

ClassificationResult classify_sn_le_2(const Multigraph& g) {
  if (!g.connected()) throw std::invalid_argument("classification needs a connected graph");
  ClassificationResult r;
  if (is_tree(g)) {
    r.verdict = SnVerdict::kSn1;
    return r;
  }
  for (int i = 0; i < 4; ++i) {
    if (auto m = is_topological_minor(pattern_graph(i), g)) {
      r.verdict = SnVerdict::kSnAtLeast3;
      r.pattern = kPatternNames[i];
      r.embedding = std::move(m);
      return r;
    }
    r.negative_checks.push_back(kPatternNames[i]);
  }
  r.verdict = SnVerdict::kSn2;
  return r;
}

SnCertificate sn_exact(const Multigraph& g, const SnOptions& opts) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("empty graph");
  if (n > 8) throw size_bound_error("sn_exact: 8-vertex cap");
  if (!g.connected()) throw std::invalid_argument("sn_exact needs a connected graph");

  if (opts.use_tree_shortcut && is_tree(g)) {
    std::vector<VertexSet> eggs;
    for (int v = 0; v < n; ++v) eggs.push_back(VertexSet::single(v));
    return certify(g, 1, std::move(eggs), tree_decomposition_of_tree(g));
  }

  if (opts.use_bridge_split) {
    auto bs = bridges(g);
    if (!bs.empty()) {
      auto [bu, bv] = bs.front();
      Multigraph cut = g.without_edge(bu, bv);
      auto comps = cut.components();
      // Exactly two components; solve each side and lift the better one.
      SnCertificate best_cert;
      int best_value = -1;
      std::vector<VertexSet> best_eggs;
      std::vector<std::pair<TreeCutDecomposition, std::vector<int>>> decomps;
      bool all_decomposed = true;
      for (const auto& comp : comps) {
        std::vector<int> old_of_new;
        Multigraph sub = g.induced(comp, &old_of_new);
        SnCertificate c = sn_exact(sub, opts);
        if (c.value > best_value) {
          best_value = c.value;
          best_eggs.clear();
          for (VertexSet egg : c.lower_witness.eggs) {
            VertexSet lifted;
            egg.for_each([&](int v) { lifted.add(old_of_new[v]); });
            best_eggs.push_back(lifted);
          }
        }
        if (const auto* d = std::get_if<TreeCutDecomposition>(&c.upper_witness))
          decomps.emplace_back(*d, old_of_new);
        else
          all_decomposed = false;
      }
      if (all_decomposed) {
        // Join the side decompositions by a link between the nodes holding
        // the bridge endpoints; that link's adhesion is the bridge alone
        // and no other term changes.
        TreeCutDecomposition joined;
        std::vector<int> node_of_vertex(n, -1);
        for (auto& [d, old_of_new] : decomps) {
          int base = joined.node_count;
          for (int b = 0; b < d.node_count; ++b) {
            VertexSet bag;
            d.bags[b].for_each([&](int v) { bag.add(old_of_new[v]); });
            joined.bags.push_back(bag);
            bag.for_each([&](int v) { node_of_vertex[v] = base + b; });
          }
          for (auto [a, b] : d.links) joined.links.emplace_back(base + a, base + b);
          joined.node_count += d.node_count;
        }
        joined.links.emplace_back(node_of_vertex[bu], node_of_vertex[bv]);
        return certify(g, best_value, std::move(best_eggs), std::move(joined));
      }
      return certify(g, best_value, std::move(best_eggs),
                     ExhaustedSearch{"bridge split; a side finished by exhausted search"});
    }
  }

  if (opts.use_classifier) {
    ClassificationResult cls = classify_sn_le_2(g);
    if (cls.verdict == SnVerdict::kSn1) {
      std::vector<VertexSet> eggs;
      for (int v = 0; v < n; ++v) eggs.push_back(VertexSet::single(v));
      return certify(g, 1, std::move(eggs), tree_decomposition_of_tree(g));
    }
    if (cls.verdict == SnVerdict::kSn2) {
      auto [cu, cv] = cycle_pair(g);
      std::vector<VertexSet> eggs{VertexSet::single(cu), VertexSet::single(cv)};
      auto [scw, d] = screewidth_exact(g);
      if (scw == 2) return certify(g, 2, std::move(eggs), std::move(d));
      ScrambleSearch search(g, opts.deadline);
      if (search.exists_order_ge(3, nullptr))
        throw std::logic_error("classifier said sn=2 but an order-3 scramble exists");
      return certify(g, 2, std::move(eggs),
                     ExhaustedSearch{exhausted_text(search.egg_count(), 3)});
    }
    // Verdict >= 3: fall through to the bound pipeline.
  }

  // Incumbent: the vertex scramble, evaluated honestly (order min(|V|, lambda)).
  Scramble vs = vertex_scramble(g);
  ScrambleOrder vo = order(vs);
  int incumbent = vo.order;
  std::vector<VertexSet> incumbent_eggs = vs.eggs;

  int upper = kInfinity;
  std::optional<TreeCutDecomposition> upper_decomp;
  if (opts.use_scw_bound) {
    auto [scw, d] = screewidth_exact(g);
    if (opts.deadline.expired())
      throw timeout_error("sn_exact deadline", incumbent, scw);
    upper = scw;
    upper_decomp = std::move(d);
  }

  ScrambleSearch search(g, opts.deadline);
  while (incumbent < upper) {
    std::vector<VertexSet> found;
    bool ok;
    try {
      ok = search.exists_order_ge(incumbent + 1, &found);
    } catch (const timeout_error&) {
      throw timeout_error("sn_exact deadline", incumbent,
                          upper == kInfinity ? -1 : upper);
    }
    if (!ok) {
      return certify(g, incumbent, std::move(incumbent_eggs),
                     ExhaustedSearch{exhausted_text(search.egg_count(), incumbent + 1)});
    }
    ScrambleOrder found_order = order(make_scramble(g, found));
    if (found_order.order <= incumbent)
      throw std::logic_error("scramble search returned a non-improving family");
    incumbent = found_order.order;
    incumbent_eggs = std::move(found);
  }
  return certify(g, incumbent, std::move(incumbent_eggs), std::move(*upper_decomp));
}

int sn_max_over_components(const Multigraph& g, const SnOptions& opts) {
  int best = 0;
  for (const auto& comp : g.components())
    best = std::max(best, sn_exact(g.induced(comp), opts).value);
  return best;
}

int dsn_exact(const Multigraph& g, const SnOptions& opts, Scramble* witness) {
  const int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("empty graph");
  if (n > 8) throw size_bound_error("dsn_exact: 8-vertex cap");
  if (!g.connected()) throw std::invalid_argument("dsn_exact needs a connected graph");
  Scramble vs = vertex_scramble(g);
  int incumbent = order(vs).order;
  std::vector<VertexSet> incumbent_eggs = vs.eggs;
  ScrambleSearch search(g, opts.deadline);
  for (;;) {
    std::vector<VertexSet> found;
    bool ok;
    try {
      ok = search.exists_disjoint_order_ge(incumbent + 1, &found);
    } catch (const timeout_error&) {
      throw timeout_error("dsn_exact deadline", incumbent, -1);
    }
    if (!ok) break;
    int found_order = order(make_scramble(g, found)).order;
    if (found_order <= incumbent)
      throw std::logic_error("disjoint scramble search returned a non-improving family");
    incumbent = found_order;
    incumbent_eggs = std::move(found);
  }
  if (witness) *witness = make_scramble(g, incumbent_eggs);
  return incumbent;
}

MinimalityResult is_k_scramble_minimal(const Multigraph& g, int k, const SnOptions& opts) {
  if (!g.connected()) throw std::invalid_argument("minimality needs a connected graph");
  if (k < 1) throw std::invalid_argument("k must be positive");
  MinimalityResult r;
  r.sn = sn_exact(g, opts).value;
  if (r.sn < k) {
    r.failure = "sn(g) = " + std::to_string(r.sn) + " is below k";
    return r;
  }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) == 2 && g.neighbors(v).size() == 2) {
      r.failure = "vertex " + std::to_string(v) +
                  " can be smoothed, which preserves the scramble number";
      return r;
    }
  }
  for (const auto& e : g.edges()) {
    int after = sn_max_over_components(g.without_edge(e.u, e.v), opts);
    r.deletions.emplace_back(e.u, e.v, after);
    if (after >= k) {
      r.failure = "deleting an edge from bundle {" + std::to_string(e.u) + "," +
                  std::to_string(e.v) + "} keeps sn >= k";
      return r;
    }
  }
  r.minimal = true;
  return r;
}

SweepReport verify_corollary_3ec(int max_n, int max_mult, int threads) {
  if (max_n > 6 || max_mult > 4)
    throw size_bound_error("verify_corollary_3ec caps: max_n <= 6, max_mult <= 4");
  SweepReport report;
  report.name = "corollary-3ec";
  std::vector<Multigraph> targets;
  enumerate_connected_multigraphs(max_n, max_mult, [&](const Multigraph& g) {
    if (g.vertex_count() < 3) return;
    if (edge_connectivity(g) < 3) return;
    targets.push_back(g);
  });
  report.checked = static_cast<int>(targets.size());
  std::vector<char> ok(targets.size(), 0);
  parallel_for(targets.size(), threads, [&](size_t i) {
    const Multigraph& g = targets[i];
    ok[i] = is_topological_minor(make_k4(), g).has_value() ||
            is_topological_minor(make_p33(), g).has_value() ||
            is_topological_minor(make_c3221(), g).has_value();
  });
  for (size_t i = 0; i < targets.size(); ++i)
    if (!ok[i])
      report.violations.push_back("3-edge-connected graph without any of the three patterns: " +
                                  std::to_string(i));
  return report;
}

namespace {

std::string describe(const Multigraph& g) {
  std::string s = "n=" + std::to_string(g.vertex_count()) + " edges=[";
  for (const auto& e : g.edges())
    s += "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")x" +
         std::to_string(e.mult) + " ";
  s += "]";
  return s;
}

SweepReport sweep(const std::string& name, const std::vector<Multigraph>& graphs,
                  int threads,
                  const std::function<void(const Multigraph&, std::vector<std::string>&)>& check) {
  SweepReport report;
  report.name = name;
  report.checked = static_cast<int>(graphs.size());
  std::vector<std::vector<std::string>> issues(graphs.size());
  parallel_for(graphs.size(), threads,
               [&](size_t i) { check(graphs[i], issues[i]); });
  for (size_t i = 0; i < graphs.size(); ++i)
    for (const auto& v : issues[i])
      report.violations.push_back(v + " on " + describe(graphs[i]));
  return report;
}

void check_edgeconnect(const Multigraph& g, std::vector<std::string>& out) {
  int sn = sn_exact(g).value;
  int bound = std::min(edge_connectivity(g), g.vertex_count());
  if (sn < bound)
    out.push_back("sn=" + std::to_string(sn) + " below min(lambda,|V|)=" +
                  std::to_string(bound));
}

void check_bridge(const Multigraph& g, std::vector<std::string>& out) {
  auto bs = bridges(g);
  if (bs.empty()) return;
  SnOptions raw;
  raw.use_tree_shortcut = false;
  raw.use_bridge_split = false;
  raw.use_classifier = false;
  int whole = sn_exact(g, raw).value;
  for (auto [u, v] : bs) {
    int side_max = sn_max_over_components(g.without_edge(u, v));
    if (whole != side_max)
      out.push_back("bridge (" + std::to_string(u) + "," + std::to_string(v) +
                    "): sn=" + std::to_string(whole) + " but component max is " +
                    std::to_string(side_max));
  }
}

void check_restrict(const Multigraph& g, std::vector<std::string>& out) {
  SnCertificate cert = sn_exact(g);
  if (cert.value < 2) return;
  auto bridge_list = bridges(g);
  for (const auto& e : g.edges()) {
    if (e.mult == 1 &&
        std::find(bridge_list.begin(), bridge_list.end(), std::make_pair(e.u, e.v)) !=
            bridge_list.end())
      continue;
    Multigraph h = g.without_edge(e.u, e.v);
    ScrambleOrder before = cert.lower_order;
    ScrambleOrder after = order(restrict(cert.lower_witness, h));
    if (after.order < before.order - 1)
      out.push_back("restriction dropped order from " + std::to_string(before.order) +
                    " to " + std::to_string(after.order));
  }
}

void check_scw_bound(const Multigraph& g, std::vector<std::string>& out) {
  int sn = sn_exact(g).value;
  int scw = screewidth_exact(g).first;
  if (sn > scw)
    out.push_back("sn=" + std::to_string(sn) + " exceeds scw=" + std::to_string(scw));
}

void check_monotone(const Multigraph& g, std::vector<std::string>& out) {
  int sn = sn_exact(g).value;
  for (const auto& e : g.edges()) {
    int after = sn_max_over_components(g.without_edge(e.u, e.v));
    if (after > sn)
      out.push_back("edge deletion raised sn " + std::to_string(sn) + "->" +
                    std::to_string(after));
    // Non-bridge deletions drop sn by at most one.
    if (g.without_edge(e.u, e.v).connected() && after < sn - 1)
      out.push_back("non-bridge edge deletion dropped sn " + std::to_string(sn) + "->" +
                    std::to_string(after));
  }
  if (g.vertex_count() > 1)
    for (int v = 0; v < g.vertex_count(); ++v) {
      int after = sn_max_over_components(g.without_vertex(v));
      if (after > sn)
        out.push_back("vertex deletion raised sn " + std::to_string(sn) + "->" +
                      std::to_string(after));
    }
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (g.neighbors(v).size() != 2) continue;
    int after = sn_max_over_components(multi_smooth(g, v));
    if (after > sn)
      out.push_back("multi-smoothing raised sn " + std::to_string(sn) + "->" +
                    std::to_string(after));
    if (g.degree(v) == 2) {
      // Plain smoothing preserves sn exactly.
      int smoothed = sn_max_over_components(smooth(g, v));
      if (smoothed != sn)
        out.push_back("smoothing changed sn " + std::to_string(sn) + "->" +
                      std::to_string(smoothed));
    }
  }
}

}  // namespace

SweepReport run_property_suite(const std::string& name,
                               const std::vector<Multigraph>& graphs, int threads) {
  if (name == "edgeconnect") return sweep(name, graphs, threads, check_edgeconnect);
  if (name == "bridge") return sweep(name, graphs, threads, check_bridge);
  if (name == "restrict") return sweep(name, graphs, threads, check_restrict);
  if (name == "monotone") return sweep(name, graphs, threads, check_monotone);
  if (name == "scw-bound") return sweep(name, graphs, threads, check_scw_bound);
  throw std::invalid_argument("unknown property suite: " + name);
}

namespace {

// Every multi-topological minor of g, up to isomorphism (breadth-first
// closure over deletions and multi-smoothings; states may be disconnected).
std::vector<Multigraph> multi_minor_closure(const Multigraph& g, size_t cap) {
  std::unordered_set<CanonicalForm> seen;
  std::vector<Multigraph> out;
  std::deque<Multigraph> queue;
  auto push = [&](const Multigraph& s) {
    if (s.vertex_count() == 0) return;
    CanonicalForm cf = canonical_form(s);
    if (seen.size() >= cap) throw size_bound_error("multi-minor closure cap");
    if (!seen.insert(cf).second) return;
    Multigraph c = canonical_graph(s);
    out.push_back(c);
    queue.push_back(std::move(c));
  };
  push(g);
  while (!queue.empty()) {
    Multigraph s = std::move(queue.front());
    queue.pop_front();
    for (const auto& e : s.edges()) push(s.without_edge(e.u, e.v));
    for (int v = 0; v < s.vertex_count() && s.vertex_count() > 1; ++v) {
      push(s.without_vertex(v));
      if (s.neighbors(v).size() == 2) push(multi_smooth(s, v));
    }
  }
  return out;
}

}  // namespace

SweepReport property_minor_monotonicity(const std::vector<Multigraph>& graphs,
                                        int threads) {
  SweepReport report;
  report.name = "minor-monotonicity";
  std::vector<int> sn(graphs.size());
  parallel_for(graphs.size(), threads,
               [&](size_t i) { sn[i] = sn_exact(graphs[i]).value; });
  std::vector<std::vector<std::string>> issues(graphs.size());
  parallel_for(graphs.size(), threads, [&](size_t i) {
    // Pairwise over the universe for the topological relation.
    for (size_t j = 0; j < graphs.size(); ++j) {
      const Multigraph& h = graphs[i];
      const Multigraph& g = graphs[j];
      if (h.vertex_count() > g.vertex_count() || h.edge_count() > g.edge_count())
        continue;
      if (sn[i] <= sn[j]) continue;  // nothing to violate
      if (is_topological_minor(h, g))
        issues[i].push_back("topological minor with sn " + std::to_string(sn[i]) +
                            " inside a host of sn " + std::to_string(sn[j]) + ": " +
                            describe(h) + " in " + describe(g));
    }
    // Every multi-topological minor of graphs[i], via the full closure.
    for (const auto& state : multi_minor_closure(graphs[i], 1000000)) {
      int state_sn = sn_max_over_components(state);
      if (state_sn > sn[i])
        issues[i].push_back("multi-topological minor with sn " +
                            std::to_string(state_sn) + " inside a host of sn " +
                            std::to_string(sn[i]) + ": " + describe(state) + " in " +
                            describe(graphs[i]));
    }
  });
  report.checked = static_cast<int>(graphs.size() * graphs.size());
  for (auto& list : issues)
    for (auto& v : list) report.violations.push_back(std::move(v));
  return report;
}

SweepReport property_superset_redundancy(const std::vector<Multigraph>& graphs) {
  SweepReport report;
  report.name = "superset-redundancy";
  for (const auto& g : graphs) {
    if (g.vertex_count() > 4) continue;
    auto eggs = connected_subsets(g);
    const int m = static_cast<int>(eggs.size());
    // Order of every nonempty scramble, indexed by egg subset mask.
    std::vector<int> ord(size_t{1} << m, 0);
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<VertexSet> family;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) family.push_back(eggs[i]);
      ord[mask] = order(make_scramble(g, family)).order;
    }
    ++report.checked;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      for (int a = 0; a < m; ++a) {
        if (!(mask & (1u << a))) continue;
        bool has_proper_subset = false;
        for (int b = 0; b < m && !has_proper_subset; ++b)
          if (b != a && (mask & (1u << b)) && eggs[b].subset_of(eggs[a]) &&
              eggs[b] != eggs[a])
            has_proper_subset = true;
        if (!has_proper_subset) continue;
        std::uint32_t without = mask & ~(1u << a);
        if (ord[without] < ord[mask]) {
          report.violations.push_back("dropping a superset egg lowered order on " +
                                      describe(g));
          break;
        }
      }
    }
  }
  return report;
}

SweepReport property_sn_bruteforce(const std::vector<Multigraph>& graphs) {
  SweepReport report;
  report.name = "sn-bruteforce";
  for (const auto& g : graphs) {
    if (g.vertex_count() > 4) continue;
    ++report.checked;
    auto eggs = connected_subsets(g);
    const int m = static_cast<int>(eggs.size());
    int best = 0;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
      std::vector<VertexSet> family;
      for (int i = 0; i < m; ++i)
        if (mask & (1u << i)) family.push_back(eggs[i]);
      best = std::max(best, order(make_scramble(g, family)).order);
    }
    int solver = sn_exact(g).value;
    if (best != solver)
      report.violations.push_back("all-scrambles max " + std::to_string(best) +
                                  " != sn_exact " + std::to_string(solver) + " on " +
                                  describe(g));
  }
  return report;
}

SweepReport property_pipeline_consistency(const std::vector<Multigraph>& graphs,
                                          int threads) {
  SweepReport report;
  report.name = "pipeline-consistency";
  report.checked = static_cast<int>(graphs.size());
  SnOptions bare;
  bare.use_tree_shortcut = false;
  bare.use_bridge_split = false;
  bare.use_classifier = false;
  bare.use_scw_bound = false;
  std::vector<std::string> issue(graphs.size());
  parallel_for(graphs.size(), threads, [&](size_t i) {
    int full = sn_exact(graphs[i]).value;
    int raw = sn_exact(graphs[i], bare).value;
    if (full != raw)
      issue[i] = "pipeline sn " + std::to_string(full) + " != bare-search sn " +
                 std::to_string(raw) + " on " + describe(graphs[i]);
  });
  for (auto& v : issue)
    if (!v.empty()) report.violations.push_back(std::move(v));
  return report;
}

namespace {

// Definitional egg cut: minimum crossing multiplicity over bipartitions
// into two connected sides each containing an egg.
int definitional_egg_cut(const Multigraph& g, const std::vector<VertexSet>& eggs) {
  const int n = g.vertex_count();
  int best = kInfinity;
  for (std::uint64_t bits = 1; bits + 1 < (std::uint64_t{1} << n); ++bits) {
    if (!(bits & 1)) continue;  // fix vertex 0 on side A
    VertexSet a = VertexSet::from_bits(bits);
    VertexSet b = g.vertices() - a;
    if (!g.connected_within(a) || !g.connected_within(b)) continue;
    bool egg_a = false, egg_b = false;
    for (const auto& e : eggs) {
      egg_a = egg_a || e.subset_of(a);
      egg_b = egg_b || e.subset_of(b);
    }
    if (!egg_a || !egg_b) continue;
    int cut = 0;
    a.for_each([&](int u) {
      (g.neighbors(u) & b).for_each([&](int v) { cut += g.multiplicity(u, v); });
    });
    best = std::min(best, cut);
  }
  return best;
}

}  // namespace

SweepReport property_eggcut_definition(const std::vector<Multigraph>& graphs) {
  SweepReport report;
  report.name = "eggcut-definition";
  for (const auto& g : graphs) {
    ++report.checked;
    if (g.vertex_count() <= 4) {
      auto eggs = connected_subsets(g);
      const int m = static_cast<int>(eggs.size());
      for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        std::vector<VertexSet> family;
        for (int i = 0; i < m; ++i)
          if (mask & (1u << i)) family.push_back(eggs[i]);
        int via_flow = egg_cut_number(make_scramble(g, family));
        int via_def = definitional_egg_cut(g, family);
        if (via_flow != via_def) {
          report.violations.push_back("egg cut mismatch flow=" + std::to_string(via_flow) +
                                      " def=" + std::to_string(via_def) + " on " +
                                      describe(g));
          break;
        }
      }
    } else {
      // Larger hosts: spot-check the notable scrambles.
      std::vector<Scramble> picks{vertex_scramble(g)};
      if (g.edge_count() > 0) picks.push_back(uniform_scramble_2(g));
      picks.push_back(sn_exact(g).lower_witness);
      for (const auto& s : picks) {
        int via_flow = egg_cut_number(s);
        int via_def = definitional_egg_cut(g, s.eggs);
        if (via_flow != via_def)
          report.violations.push_back("egg cut mismatch flow=" + std::to_string(via_flow) +
                                      " def=" + std::to_string(via_def) + " on " +
                                      describe(g));
      }
    }
  }
  return report;
}

SweepReport property_e2_formula(const std::vector<Multigraph>& graphs) {
  SweepReport report;
  report.name = "e2-formula";
  for (const auto& g : graphs) {
    if (g.vertex_count() < 4 || g.edge_count() == 0) continue;
    ++report.checked;
    int got = order(uniform_scramble_2(g)).order;
    int l2 = lambda2(g);
    int expect = std::min(l2, g.vertex_count() - independence_number(g));
    if (got != expect)
      report.violations.push_back("2-uniform order " + std::to_string(got) +
                                  " != min(lambda2, n - alpha) = " + std::to_string(expect) +
                                  " on " + describe(g));
  }
  return report;
}

SweepReport property_dsn_relations(const std::vector<Multigraph>& graphs) {
  SweepReport report;
  report.name = "dsn-relations";
  for (const auto& g : graphs) {
    ++report.checked;
    int sn = sn_exact(g).value;
    int dsn = dsn_exact(g);
    if (dsn > sn)
      report.violations.push_back("dsn " + std::to_string(dsn) + " exceeds sn " +
                                  std::to_string(sn) + " on " + describe(g));
    if (sn <= 3 && dsn != sn)
      report.violations.push_back("sn<=3 but dsn " + std::to_string(dsn) + " != sn " +
                                  std::to_string(sn) + " on " + describe(g));
  }
  return report;
}

std::vector<Multigraph> pseudorandom_connected_multigraphs(int count, int max_n,
                                                           int max_mult) {
  if (max_n < 3 || max_n > 8) throw size_bound_error("pseudorandom stream: max_n in 3..8");
  // Knuth MMIX LCG with a fixed golden-ratio start; fully deterministic.
  std::uint64_t x = 0x9E3779B97F4A7C15ull;
  auto next = [&]() {
    x = x * 6364136223846793005ull + 1442695040888963407ull;
    return x >> 16;
  };
  std::vector<Multigraph> out;
  while (static_cast<int>(out.size()) < count) {
    int n = 3 + static_cast<int>(next() % static_cast<std::uint64_t>(max_n - 2));
    Multigraph g(n);
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        int m = static_cast<int>(next() % static_cast<std::uint64_t>(max_mult + 1));
        if (m > 0) g.add_edge(u, v, m);
      }
    if (g.connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace scramble
