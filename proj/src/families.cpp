#include "scramble/families.hpp"

#include <stdexcept>

namespace scramble {

namespace {
[[noreturn]] void reject(const std::string& id, const std::string& constraint) {
  throw std::invalid_argument("family " + id + ": " + constraint);
}
int need(const std::string& id, const char* name, std::optional<int> v) {
  if (!v) reject(id, std::string("parameter ") + name + " is required");
  return *v;
}
}  // namespace

Multigraph make_k4() {
  Multigraph g(4);
  for (int u = 0; u < 4; ++u)
    for (int v = u + 1; v < 4; ++v) g.add_edge(u, v);
  return g;
}

Multigraph make_p33() {
  Multigraph g(3);
  g.add_edge(0, 1, 3);
  g.add_edge(1, 2, 3);
  return g;
}

Multigraph make_c3221() {
  Multigraph g(3);
  g.add_edge(0, 1, 2);
  g.add_edge(1, 2, 2);
  g.add_edge(0, 2, 1);
  return g;
}

Multigraph make_ll6() {
  Multigraph g(6);
  for (int i = 0; i < 6; ++i) g.add_edge(i, (i + 1) % 6, i % 2 == 0 ? 2 : 1);
  return g;
}

Multigraph make_w5() {
  Multigraph g(6);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, 5);
  }
  return g;
}

Multigraph make_banana(int n) {
  if (n < 1) reject("P2", "n >= 1 required");
  Multigraph g(2);
  g.add_edge(0, 1, n);
  return g;
}

Multigraph make_cycle(int n, int k) {
  if (n < 3) reject("C", "n >= 3 required");
  if (k < 1) reject("C", "k >= 1 required");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, k);
  return g;
}

Multigraph make_ctilde(int n, int k) {
  if (k < 2) reject("Ctilde", "k >= 2 required");
  if (n < 3 * k) reject("Ctilde", "n >= 3k required");
  Multigraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n, i < 2 * k ? k + 1 : k);
  return g;
}

Multigraph make_k_minus_cycle(int n) {
  if (n < 4) reject("KminusC", "n >= 4 required");
  Multigraph g(n);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
  for (int i = 0; i < n; ++i) {
    int a = i, b = (i + 1) % n;
    g.set_multiplicity(std::min(a, b), std::max(a, b), 0);
  }
  return g;
}

Multigraph family(const std::string& id, std::optional<int> n, std::optional<int> k) {
  if (id == "K4") return make_k4();
  if (id == "P33") return make_p33();
  if (id == "C3221") return make_c3221();
  if (id == "LL6") return make_ll6();
  if (id == "W5") return make_w5();
  if (id == "P2") return make_banana(need(id, "n", n));
  if (id == "C") return make_cycle(need(id, "n", n), need(id, "k", k));
  if (id == "Ctilde") return make_ctilde(need(id, "n", n), need(id, "k", k));
  if (id == "KminusC") return make_k_minus_cycle(need(id, "n", n));
  throw std::invalid_argument("unknown family id: " + id);
}

}  // namespace scramble
