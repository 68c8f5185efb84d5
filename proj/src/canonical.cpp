#include "scramble/canonical.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "scramble/errors.hpp"

namespace scramble {

namespace {

// Color refinement seeded with multiplicity-weighted degrees. Returns a
// stable coloring; color ids are assigned by sorted signature so that
// isomorphic graphs get matching cell structure and cell order.
std::vector<int> refine_colors(const Multigraph& g) {
  const int n = g.vertex_count();
  std::vector<int> color(n);
  for (int v = 0; v < n; ++v) color[v] = 0;
  // signature: (old color, sorted (mult, neighbor color) list)
  using Sig = std::pair<int, std::vector<std::pair<int, int>>>;
  int colors = 1;
  for (int round = 0; round < n; ++round) {
    std::vector<Sig> sig(n);
    for (int v = 0; v < n; ++v) {
      sig[v].first = color[v];
      g.neighbors(v).for_each([&](int u) {
        sig[v].second.emplace_back(g.multiplicity(v, u), color[u]);
      });
      // Weighted degree folds in automatically via the multiset.
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    std::map<Sig, int> ids;
    for (int v = 0; v < n; ++v) ids.emplace(sig[v], 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> fresh(n);
    for (int v = 0; v < n; ++v) fresh[v] = ids.at(sig[v]);
    if (next == colors && fresh == color) break;
    colors = next;
    color = std::move(fresh);
  }
  return color;
}

struct CanonSearch {
  const Multigraph& g;
  int n;
  std::vector<std::vector<int>> cells;  // vertices grouped by color, cell order fixed
  std::vector<int> placed;              // old indices in position order
  std::vector<char> used;
  std::string best;                     // best lower-triangle encoding so far
  std::string cur;
  bool have_best = false;

  explicit CanonSearch(const Multigraph& graph) : g(graph), n(graph.vertex_count()) {
    std::vector<int> color = refine_colors(g);
    int colors = 0;
    for (int c : color) colors = std::max(colors, c + 1);
    cells.assign(colors, {});
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    used.assign(n, 0);
  }

  void run() {
    placed.clear();
    cur.clear();
    descend(0, 0, /*tight=*/true);
  }

  // Place position pos using vertices of cells[cell]. `tight` means the
  // current prefix equals the best prefix so far; only then can a larger
  // entry prune.
  void descend(int cell, int offset, bool tight) {
    if (static_cast<size_t>(cell) == cells.size()) {
      if (!have_best || cur < best) {
        best = cur;
        have_best = true;
      }
      return;
    }
    if (offset == static_cast<int>(cells[cell].size())) {
      descend(cell + 1, 0, tight);
      return;
    }
    const int pos = static_cast<int>(placed.size());
    for (int v : cells[cell]) {
      if (used[v]) continue;
      bool sub_tight = tight;
      bool worse = false;
      const size_t mark = cur.size();
      for (int p = 0; p < pos; ++p) {
        // Compare as unsigned to match std::string's byte order.
        unsigned char m = static_cast<unsigned char>(g.multiplicity(v, placed[p]));
        cur.push_back(static_cast<char>(m));
        if (have_best && sub_tight) {
          unsigned char b = static_cast<unsigned char>(best[cur.size() - 1]);
          if (m > b) {
            worse = true;
            break;
          }
          if (m < b) sub_tight = false;
        }
      }
      if (!worse) {
        used[v] = 1;
        placed.push_back(v);
        descend(cell, offset + 1, sub_tight);
        placed.pop_back();
        used[v] = 0;
      }
      cur.resize(mark);
    }
  }
};

}  // namespace

CanonicalForm canonical_form(const Multigraph& g) {
  const int n = g.vertex_count();
  for (const auto& e : g.edges())
    if (e.mult > 250) throw size_bound_error("multiplicity above canonical-form cap");
  CanonicalForm out;
  out.push_back(static_cast<char>(n));
  if (n <= 1) return out;
  CanonSearch search(g);
  search.run();
  out += search.best;
  return out;
}

std::vector<int> canonical_labeling(const Multigraph& g) {
  const int n = g.vertex_count();
  if (n <= 1) return std::vector<int>(n, 0);
  CanonSearch search(g);
  // Re-run recording the arg-min placement: cheapest is to search again and
  // trace; the search object keeps only the encoding, so rebuild by checking
  // candidate placements against the best encoding.
  search.run();
  // Second pass: greedy reconstruction following the best encoding exactly.
  std::vector<int> placed;
  std::vector<char> used(n, 0);
  std::string cur;
  std::function<bool(int, int)> rebuild = [&](int cell, int offset) -> bool {
    if (static_cast<size_t>(cell) == search.cells.size()) return cur == search.best;
    if (offset == static_cast<int>(search.cells[cell].size()))
      return rebuild(cell + 1, 0);
    const int pos = static_cast<int>(placed.size());
    for (int v : search.cells[cell]) {
      if (used[v]) continue;
      const size_t mark = cur.size();
      bool ok = true;
      for (int p = 0; p < pos && ok; ++p) {
        char m = static_cast<char>(g.multiplicity(v, placed[p]));
        if (m != search.best[cur.size()]) ok = false;
        cur.push_back(m);
      }
      if (ok) {
        used[v] = 1;
        placed.push_back(v);
        if (rebuild(cell, offset + 1)) return true;
        placed.pop_back();
        used[v] = 0;
      }
      cur.resize(mark);
    }
    return false;
  };
  if (!rebuild(0, 0)) throw std::logic_error("canonical labeling reconstruction failed");
  std::vector<int> new_of_old(n);
  for (int pos = 0; pos < n; ++pos) new_of_old[placed[pos]] = pos;
  return new_of_old;
}

Multigraph canonical_graph(const Multigraph& g) {
  return g.permuted(canonical_labeling(g));
}

bool isomorphic(const Multigraph& a, const Multigraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count())
    return false;
  return canonical_form(a) == canonical_form(b);
}

void enumerate_connected_multigraphs(int max_n, int max_mult,
                                     const std::function<void(const Multigraph&)>& emit) {
  if (max_n < 1 || max_n > 7) throw size_bound_error("enumeration cap: max_n in 1..7");
  if (max_mult < 1 || max_mult > 4) throw size_bound_error("enumeration cap: max_mult in 1..4");
  for (int n = 1; n <= max_n; ++n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    const int np = static_cast<int>(pairs.size());
    std::vector<int> assign(np, 0);
    std::unordered_set<CanonicalForm> seen;
    Multigraph g(n);
    for (;;) {
      if (g.connected()) {
        CanonicalForm cf = canonical_form(g);
        if (seen.insert(cf).second) emit(canonical_graph(g));
      }
      // Odometer step over multiplicity assignments.
      int i = 0;
      while (i < np && assign[i] == max_mult) {
        assign[i] = 0;
        g.set_multiplicity(pairs[i].first, pairs[i].second, 0);
        ++i;
      }
      if (i == np) break;
      ++assign[i];
      g.set_multiplicity(pairs[i].first, pairs[i].second, assign[i]);
    }
  }
}

std::vector<Multigraph> enumerate_connected_multigraphs(int max_n, int max_mult) {
  std::vector<Multigraph> out;
  enumerate_connected_multigraphs(max_n, max_mult,
                                  [&](const Multigraph& g) { out.push_back(g); });
  return out;
}

}  // namespace scramble
