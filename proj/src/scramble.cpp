#include "scramble/scramble.hpp"

#include <algorithm>
#include <stdexcept>

namespace scramble {

namespace {

void sort_eggs(std::vector<VertexSet>& eggs) {
  std::sort(eggs.begin(), eggs.end(), [](VertexSet a, VertexSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.bits() < b.bits();
  });
  eggs.erase(std::unique(eggs.begin(), eggs.end()), eggs.end());
}

// Exact min hitting set over raw egg lists; cap bounds the search (returns
// cap+1 when every hitting set is larger). Branches on the smallest unhit
// egg. Shared with the sn search.
int hitting_capped(const std::vector<VertexSet>& eggs, int cap, VertexSet chosen,
                   int chosen_size, VertexSet* witness) {
  const VertexSet* unhit = nullptr;
  for (const auto& e : eggs)
    if (!e.intersects(chosen) && (!unhit || e.size() < unhit->size())) unhit = &e;
  if (!unhit) {
    if (witness) *witness = chosen;
    return chosen_size;
  }
  if (chosen_size >= cap) return cap + 1;
  int best = cap + 1;
  for (int v : unhit->to_vector()) {
    VertexSet next = chosen;
    next.add(v);
    VertexSet sub_witness;
    int r = hitting_capped(eggs, best - 1, next, chosen_size + 1,
                           witness ? &sub_witness : nullptr);
    if (r < best) {
      best = r;
      if (witness) *witness = sub_witness;
    }
  }
  return best;
}

}  // namespace

Scramble make_scramble(const Multigraph& host, std::vector<VertexSet> eggs) {
  if (eggs.empty())
    throw std::invalid_argument("empty scramble: order undefined");
  for (const auto& e : eggs) {
    if (e.empty()) throw std::invalid_argument("empty egg");
    if (!e.subset_of(host.vertices()))
      throw std::invalid_argument("egg outside host vertex set");
    if (!host.connected_within(e))
      throw std::invalid_argument("egg induces a disconnected subgraph");
  }
  sort_eggs(eggs);
  return Scramble{host, std::move(eggs)};
}

int hitting_number_raw(const std::vector<VertexSet>& eggs, int cap, VertexSet* witness) {
  return hitting_capped(eggs, cap, VertexSet{}, 0, witness);
}

int hitting_number(const Scramble& s, VertexSet* witness) {
  return hitting_number_raw(s.eggs, s.host.vertex_count(), witness);
}

int egg_cut_number(const Scramble& s, std::optional<std::pair<int, int>>* pair,
                   std::vector<EdgeBundle>* cut) {
  const int m = static_cast<int>(s.eggs.size());
  int best = kInfinity;
  std::pair<int, int> best_pair{-1, -1};
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (s.eggs[i].intersects(s.eggs[j])) continue;
      int f = max_flow(s.host, s.eggs[i], s.eggs[j]);
      if (f < best) {
        best = f;
        best_pair = {i, j};
      }
    }
  if (pair) *pair = best == kInfinity ? std::nullopt : std::make_optional(best_pair);
  if (cut) {
    cut->clear();
    if (best != kInfinity) {
      VertexSet side;
      max_flow(s.host, s.eggs[best_pair.first], s.eggs[best_pair.second], &side);
      for (const auto& e : s.host.edges())
        if (side.contains(e.u) != side.contains(e.v)) cut->push_back(e);
    }
  }
  return best;
}

ScrambleOrder order(const Scramble& s) {
  ScrambleOrder out;
  out.hitting = hitting_number(s, &out.hitting_witness);
  out.egg_cut = egg_cut_number(s, &out.cut_pair, &out.cut_edges);
  out.order = std::min(out.hitting, out.egg_cut);
  return out;
}

Scramble restrict(const Scramble& s, const Multigraph& h,
                  const std::vector<int>& host_of_sub) {
  const int hn = h.vertex_count();
  std::vector<int> map = host_of_sub;
  if (map.empty()) {
    if (hn != s.host.vertex_count())
      throw std::invalid_argument("restrict: vertex map required when |V| differs");
    map.resize(hn);
    for (int i = 0; i < hn; ++i) map[i] = i;
  }
  if (static_cast<int>(map.size()) != hn)
    throw std::invalid_argument("restrict: vertex map size mismatch");
  VertexSet image;
  for (int i = 0; i < hn; ++i) {
    if (map[i] < 0 || map[i] >= s.host.vertex_count() || image.contains(map[i]))
      throw std::invalid_argument("restrict: vertex map is not injective into the host");
    image.add(map[i]);
  }
  for (int i = 0; i < hn; ++i)
    for (int j = i + 1; j < hn; ++j)
      if (h.multiplicity(i, j) > s.host.multiplicity(map[i], map[j]))
        throw std::invalid_argument("restrict: h is not a subgraph of the host");

  std::vector<VertexSet> eggs;
  for (const auto& egg : s.eggs) {
    VertexSet sub;
    for (int i = 0; i < hn; ++i)
      if (egg.contains(map[i])) sub.add(i);
    if (sub.empty() || !h.connected_within(sub)) continue;
    eggs.push_back(sub);
  }
  if (eggs.empty())
    throw std::invalid_argument("restrict: every egg died; restriction is empty");
  sort_eggs(eggs);
  return Scramble{h, std::move(eggs)};
}

bool is_disjoint(const Scramble& s) {
  for (size_t i = 0; i < s.eggs.size(); ++i)
    for (size_t j = i + 1; j < s.eggs.size(); ++j)
      if (s.eggs[i].intersects(s.eggs[j])) return false;
  return true;
}

Scramble uniform_scramble_2(const Multigraph& g) {
  std::vector<VertexSet> eggs;
  for (const auto& e : g.edges()) eggs.push_back(VertexSet::of({e.u, e.v}));
  return make_scramble(g, std::move(eggs));
}

Scramble vertex_scramble(const Multigraph& g) {
  std::vector<VertexSet> eggs;
  for (int v = 0; v < g.vertex_count(); ++v) eggs.push_back(VertexSet::single(v));
  return make_scramble(g, std::move(eggs));
}

}  // namespace scramble
