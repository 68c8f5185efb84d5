#include "scramble/reproduce.hpp"

#include <stdexcept>

#include "scramble/families.hpp"
#include "scramble/canonical.hpp"
#include "scramble/sn_solver.hpp"

namespace scramble {

namespace {

void check_eq(ReproReport& r, const std::string& what, int got, int expected) {
  r.checks.push_back({what, std::to_string(got), std::to_string(expected), got == expected});
}

void check_true(ReproReport& r, const std::string& what, bool got) {
  r.checks.push_back({what, got ? "true" : "false", "true", got});
}

const std::vector<std::pair<std::string, Multigraph>>& four_graphs() {
  static const std::vector<std::pair<std::string, Multigraph>> v{
      {"K4", make_k4()}, {"P33", make_p33()}, {"C3221", make_c3221()}, {"LL6", make_ll6()}};
  return v;
}

ReproReport do_fig1(int) {
  ReproReport r{"fig1-sn3", {}};
  for (const auto& [name, g] : four_graphs()) {
    SnCertificate cert = sn_exact(g);
    check_eq(r, "sn(" + name + ")", cert.value, 3);
    check_eq(r, "scw(" + name + ")", screewidth_exact(g).first, 3);
    check_eq(r, "order of lower witness for " + name, cert.lower_order.order, 3);
    if (const auto* d = std::get_if<TreeCutDecomposition>(&cert.upper_witness))
      check_eq(r, "width of upper witness for " + name, width(g, *d), 3);
    else
      check_true(r, "upper witness for " + name + " is a decomposition", false);
  }
  return r;
}

ReproReport do_fig6(int) {
  ReproReport r{"fig6-width2", {}};
  for (const auto& [name, g] : four_graphs()) {
    for (const auto& e : g.edges()) {
      Multigraph h = g.without_edge(e.u, e.v);
      std::string tag = name + " minus one copy of {" + std::to_string(e.u) + "," +
                        std::to_string(e.v) + "}";
      int scw = screewidth_exact(h).first;
      int sn = sn_exact(h).value;
      check_true(r, "sn <= scw <= 2 for " + tag, sn <= scw && scw <= 2);
    }
  }
  return r;
}

ReproReport do_w5(int) {
  ReproReport r{"w5", {}};
  Multigraph w5 = make_w5();
  check_eq(r, "sn(W5)", sn_exact(w5).value, 4);
  check_eq(r, "dsn(W5)", dsn_exact(w5), 3);
  check_eq(r, "lambda2(W5)", lambda2(w5), 4);
  check_eq(r, "alpha(W5)", independence_number(w5), 2);
  check_eq(r, "order of the 2-uniform scramble on W5", order(uniform_scramble_2(w5)).order, 4);
  return r;
}

ReproReport do_k7c7(int) {
  ReproReport r{"k7c7", {}};
  Multigraph g = make_k_minus_cycle(7);
  check_eq(r, "alpha(K7 - C7)", independence_number(g), 2);
  check_eq(r, "sn(K7 - C7)", sn_exact(g).value, 5);
  check_eq(r, "dsn(K7 - C7)", dsn_exact(g), 4);
  return r;
}

ReproReport do_lemma41(int) {
  ReproReport r{"lemma41", {}};
  for (auto [n, k] : std::vector<std::pair<int, int>>{{4, 2}, {5, 2}, {6, 2}, {6, 3}}) {
    auto res = is_k_scramble_minimal(make_cycle(n, k), 2 * k);
    check_true(r, "C(" + std::to_string(n) + ";" + std::to_string(k) + ") is " +
                      std::to_string(2 * k) + "-scramble-minimal",
               res.minimal);
    check_eq(r, "sn(C(" + std::to_string(n) + ";" + std::to_string(k) + "))", res.sn, 2 * k);
  }
  return r;
}

ReproReport do_lemma42(int) {
  ReproReport r{"lemma42", {}};
  for (auto [n, k] : std::vector<std::pair<int, int>>{{6, 2}, {7, 2}, {8, 2}}) {
    auto res = is_k_scramble_minimal(make_ctilde(n, k), 2 * k + 1);
    check_true(r, "Ctilde(" + std::to_string(n) + ";" + std::to_string(k) + ") is " +
                      std::to_string(2 * k + 1) + "-scramble-minimal",
               res.minimal);
    check_eq(r, "sn(Ctilde(" + std::to_string(n) + ";" + std::to_string(k) + "))", res.sn,
             2 * k + 1);
  }
  return r;
}

ReproReport do_corollary23(int threads) {
  ReproReport r{"corollary23", {}};
  SweepReport sweep = verify_corollary_3ec(5, 4, threads);
  check_true(r, "every 3-edge-connected graph (n<=5, mult<=4) has one of the three patterns",
             sweep.passed());
  check_true(r, "sweep covered at least the two 3-vertex base graphs", sweep.checked >= 2);
  return r;
}

}  // namespace

std::vector<std::string> reproduce_targets() {
  return {"fig1-sn3", "fig6-width2", "w5", "k7c7", "lemma41", "lemma42", "corollary23"};
}

ReproReport reproduce(const std::string& target, int threads) {
  if (target == "fig1-sn3") return do_fig1(threads);
  if (target == "fig6-width2") return do_fig6(threads);
  if (target == "w5") return do_w5(threads);
  if (target == "k7c7") return do_k7c7(threads);
  if (target == "lemma41") return do_lemma41(threads);
  if (target == "lemma42") return do_lemma42(threads);
  if (target == "corollary23") return do_corollary23(threads);
  throw std::invalid_argument("unknown reproduce target: " + target);
}

}  // namespace scramble
