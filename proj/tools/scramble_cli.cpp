// Command-line front end: exact scramble number, disjoint scramble number
// and screewidth for small multigraphs, plus the forbidden-minor classifier,
// family constructors, decomposition evaluation and the verification sweeps.
//
// Exit codes: 0 success / verified / found; 1 topological minor not found;
// 2 property violation; 64 parse or usage error; 65 desk-scale bound
// exceeded; 66 deadline hit (bounds reported as an interval).

#include <chrono>
#include <cstdint>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "scramble/canonical.hpp"
#include "scramble/errors.hpp"
#include "scramble/families.hpp"
#include "scramble/json_io.hpp"
#include "scramble/parallel.hpp"
#include "scramble/reproduce.hpp"
#include "scramble/sn_solver.hpp"

namespace {

using nlohmann::json;
using namespace scramble;

constexpr const char* kVersion = "0.1.0";

enum ExitCode {
  kOk = 0,
  kNotFound = 1,
  kViolation = 2,
  kUsage = 64,
  kSizeBound = 65,
  kTimeout = 66,
};

std::string fnv1a_hex(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

struct Report {
  json inputs = json::object();
  json result = json::object();
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  void note_input(const std::string& path) {
    inputs[path] = fnv1a_hex(read_text_file(path));
  }
  void emit(const std::string& command) const {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - start)
                  .count();
    json envelope{{"command", command},
                  {"inputs", inputs},
                  {"result", result},
                  {"elapsed_ms", ms},
                  {"version", kVersion}};
    std::cout << canonical_dump(envelope) << "\n";
  }
};

struct GlobalOpts {
  int threads = 0;  // 0 = hardware default
  double timeout_secs = 0.0;

  SnOptions sn_options() const {
    SnOptions o;
    if (timeout_secs > 0) o.deadline = Deadline::after_seconds(timeout_secs);
    return o;
  }
  int thread_count() const { return threads > 0 ? threads : default_thread_count(); }
};

json sweep_to_json(const SweepReport& r) {
  return json{{"suite", r.name},
              {"checked", r.checked},
              {"violations", r.violations},
              {"pass", r.passed()}};
}

json repro_to_json(const ReproReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks)
    checks.push_back(json{
        {"what", c.what}, {"got", c.got}, {"expected", c.expected}, {"pass", c.pass}});
  return json{{"target", r.target}, {"checks", checks}, {"pass", r.passed()}};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact scramble number, disjoint scramble number and screewidth "
               "for small multigraphs"};
  app.set_version_flag("--version", kVersion);
  GlobalOpts global;
  app.add_option("--threads", global.threads, "worker threads for the sweeps (0 = all cores)");
  app.add_option("--timeout-secs", global.timeout_secs,
                 "deadline; on expiry bounds are reported as an interval, exit 66");
  app.require_subcommand(1);

  std::string graph_path, pattern_path, scramble_path, decomp_path, out_path;
  bool certify = false, multi = false;
  std::string witness_prefix = "witness";

  auto* sn_cmd = app.add_subcommand("sn", "exact scramble number with certificate");
  sn_cmd->add_option("--graph", graph_path, "graph file")->required();
  sn_cmd->add_flag("--certify", certify, "write witness files next to the output");
  sn_cmd->add_option("--witness-prefix", witness_prefix, "path prefix for witness files");

  auto* dsn_cmd = app.add_subcommand("dsn", "exact disjoint scramble number");
  dsn_cmd->add_option("--graph", graph_path, "graph file")->required();

  auto* classify_cmd =
      app.add_subcommand("classify", "sn = 1, sn = 2, or sn >= 3 via forbidden minors");
  classify_cmd->add_option("--graph", graph_path, "graph file")->required();

  int k_param = 0;
  auto* minimal_cmd = app.add_subcommand("minimal", "k-scramble-minimality check");
  minimal_cmd->add_option("--graph", graph_path, "graph file")->required();
  minimal_cmd->add_option("--k", k_param, "the k to test")->required();

  auto* order_cmd = app.add_subcommand("order", "hitting number, egg-cut number and order");
  order_cmd->add_option("--scramble", scramble_path, "scramble file")->required();

  auto* scw_cmd = app.add_subcommand("scw", "exact screewidth");
  scw_cmd->add_option("--graph", graph_path, "graph file")->required();
  scw_cmd->add_flag("--certify", certify, "write the optimal decomposition");
  scw_cmd->add_option("--witness-prefix", witness_prefix, "path prefix for witness files");

  auto* width_cmd = app.add_subcommand("width", "validate and evaluate a decomposition");
  width_cmd->add_option("--graph", graph_path, "graph file")->required();
  width_cmd->add_option("--decomp", decomp_path, "decomposition file")->required();

  auto* topo_cmd = app.add_subcommand("topominor", "pattern containment test");
  topo_cmd->add_option("--pattern", pattern_path, "pattern graph file")->required();
  topo_cmd->add_option("--host", graph_path, "host graph file")->required();
  topo_cmd->add_flag("--multi", multi, "use the multi-topological-minor relation");

  std::string family_id;
  std::optional<int> family_n, family_k;
  auto* family_cmd = app.add_subcommand("family", "construct a named graph family");
  family_cmd->add_option("id", family_id,
                         "one of K4, P33, C3221, LL6, W5, P2, C, Ctilde, KminusC")
      ->required();
  family_cmd->add_option("--n", family_n, "vertex count / size parameter");
  family_cmd->add_option("--k", family_k, "parallel-copy parameter");
  family_cmd->add_option("--out", out_path, "output file (stdout when omitted)");

  std::string decomp_family;
  int decomp_n = 0, decomp_k = 0, deleted_bundle = 0;
  std::string decomp_out_prefix = "deleted";
  auto* cdecomp_cmd = app.add_subcommand(
      "canonical-decomp", "deleted-edge cycle-family graph plus its optimal-width "
                          "tree-cut decomposition, written as a file pair");
  cdecomp_cmd->add_option("family", decomp_family, "C or Ctilde")->required();
  cdecomp_cmd->add_option("--n", decomp_n, "cycle length")->required();
  cdecomp_cmd->add_option("--k", decomp_k, "parallel-copy parameter")->required();
  cdecomp_cmd->add_option("--deleted-bundle", deleted_bundle,
                          "bundle position losing one copy (0-based)");
  cdecomp_cmd->add_option("--out-prefix", decomp_out_prefix, "output path prefix");

  int max_n = 4, max_mult = 2;
  auto* verify_cmd = app.add_subcommand("verify", "verification sweeps");
  verify_cmd->require_subcommand(1);
  auto* cor_cmd = verify_cmd->add_subcommand("corollary-3ec",
                                             "patterns inside 3-edge-connected graphs");
  cor_cmd->add_option("--max-n", max_n, "vertex cap (<= 6)");
  cor_cmd->add_option("--max-mult", max_mult, "multiplicity cap (<= 4)");
  std::string lemma_name;
  auto* lemma_cmd = verify_cmd->add_subcommand("lemma", "property suite over enumerated graphs");
  lemma_cmd
      ->add_option("--name", lemma_name,
                   "edgeconnect | bridge | restrict | monotone | scw-bound")
      ->required();
  lemma_cmd->add_option("--max-n", max_n, "vertex cap for the enumeration");
  lemma_cmd->add_option("--max-mult", max_mult, "multiplicity cap for the enumeration");

  std::string repro_target;
  auto* repro_cmd = app.add_subcommand("reproduce", "run a named verification bundle");
  repro_cmd->add_option("target", repro_target, "target id, or 'all'")->required();

  CLI11_PARSE(app, argc, argv);

  Report report;
  std::string command;
  for (int i = 1; i < argc; ++i) command += std::string(i > 1 ? " " : "") + argv[i];

  try {
    if (sn_cmd->parsed()) {
      report.note_input(graph_path);
      Multigraph g = load_graph(graph_path);
      SnCertificate cert = sn_exact(g, global.sn_options());
      report.result = json{{"sn", cert.value}};
      if (certify) {
        json full = certificate_to_json(cert);
        std::string path = witness_prefix + ".sn.json";
        write_text_file(path, canonical_dump(full));
        report.result["witness_file"] = path;
      } else {
        report.result["upper_witness_type"] =
            std::holds_alternative<TreeCutDecomposition>(cert.upper_witness)
                ? "tree_cut_decomposition"
                : "exhausted_search";
      }
      report.emit(command);
      return kOk;
    }
    if (dsn_cmd->parsed()) {
      report.note_input(graph_path);
      Multigraph g = load_graph(graph_path);
      Scramble witness{Multigraph(1), {VertexSet::single(0)}};
      int value = dsn_exact(g, global.sn_options(), &witness);
      report.result = json{{"dsn", value}, {"witness", scramble_to_json(witness)}};
      report.emit(command);
      return kOk;
    }
    if (classify_cmd->parsed()) {
      report.note_input(graph_path);
      Multigraph g = load_graph(graph_path);
      ClassificationResult r = classify_sn_le_2(g);
      switch (r.verdict) {
        case SnVerdict::kSn1: report.result["verdict"] = "sn=1"; break;
        case SnVerdict::kSn2: report.result["verdict"] = "sn=2"; break;
        case SnVerdict::kSnAtLeast3: report.result["verdict"] = "sn>=3"; break;
      }
      if (r.embedding) {
        report.result["pattern"] = r.pattern;
        report.result["embedding"] = embedding_to_json(*r.embedding);
      }
      if (!r.negative_checks.empty()) report.result["negative_checks"] = r.negative_checks;
      report.emit(command);
      return kOk;
    }
    if (minimal_cmd->parsed()) {
      report.note_input(graph_path);
      Multigraph g = load_graph(graph_path);
      MinimalityResult r = is_k_scramble_minimal(g, k_param, global.sn_options());
      report.result = json{{"minimal", r.minimal}, {"sn", r.sn}};
      if (!r.failure.empty()) report.result["failure"] = r.failure;
      json dels = json::array();
      for (auto [u, v, s] : r.deletions) dels.push_back({u, v, s});
      report.result["deletion_sn"] = dels;
      report.emit(command);
      return kOk;
    }
    if (order_cmd->parsed()) {
      report.note_input(scramble_path);
      Scramble s = load_scramble(scramble_path);
      report.result = order_to_json(order(s));
      report.emit(command);
      return kOk;
    }
    if (scw_cmd->parsed()) {
      report.note_input(graph_path);
      Multigraph g = load_graph(graph_path);
      auto [value, d] = screewidth_exact(g);
      report.result = json{{"scw", value}};
      if (certify) {
        std::string path = witness_prefix + ".scw.json";
        write_text_file(path, canonical_dump(decomposition_to_json(d)));
        report.result["witness_file"] = path;
      }
      report.emit(command);
      return kOk;
    }
    if (width_cmd->parsed()) {
      report.note_input(graph_path);
      report.note_input(decomp_path);
      Multigraph g = load_graph(graph_path);
      TreeCutDecomposition d = load_decomposition(decomp_path);
      report.result = json{{"width", width(g, d)}};
      report.emit(command);
      return kOk;
    }
    if (topo_cmd->parsed()) {
      report.note_input(pattern_path);
      report.note_input(graph_path);
      Multigraph h = load_graph(pattern_path);
      Multigraph g = load_graph(graph_path);
      if (multi) {
        bool found = is_multi_topological_minor(h, g);
        report.result = json{{"found", found}};
        report.emit(command);
        return found ? kOk : kNotFound;
      }
      auto m = is_topological_minor(h, g);
      report.result = json{{"found", m.has_value()}};
      if (m) report.result["embedding"] = embedding_to_json(*m);
      report.emit(command);
      return m ? kOk : kNotFound;
    }
    if (family_cmd->parsed()) {
      Multigraph g = family(family_id, family_n, family_k);
      std::string text = canonical_dump(graph_to_json(g));
      if (out_path.empty()) {
        std::cout << text << "\n";
      } else {
        write_text_file(out_path, text);
        report.result = json{{"written", out_path}, {"n", g.vertex_count()},
                             {"edge_count", g.edge_count()}};
        report.emit(command);
      }
      return kOk;
    }
    if (cdecomp_cmd->parsed()) {
      CycleFamily fam;
      if (decomp_family == "C")
        fam = CycleFamily::C;
      else if (decomp_family == "Ctilde")
        fam = CycleFamily::Ctilde;
      else
        throw std::invalid_argument("family must be C or Ctilde");
      auto [h, d] = canonical_decomposition(fam, decomp_n, decomp_k, deleted_bundle);
      std::string graph_path_out = decomp_out_prefix + ".graph.json";
      std::string decomp_path_out = decomp_out_prefix + ".decomp.json";
      write_text_file(graph_path_out, canonical_dump(graph_to_json(h)));
      write_text_file(decomp_path_out, canonical_dump(decomposition_to_json(d)));
      report.result = json{{"graph_file", graph_path_out},
                           {"decomp_file", decomp_path_out},
                           {"width", width(h, d)}};
      report.emit(command);
      return kOk;
    }
    if (cor_cmd->parsed()) {
      SweepReport r = verify_corollary_3ec(max_n, max_mult, global.thread_count());
      report.result = sweep_to_json(r);
      report.emit(command);
      return r.passed() ? kOk : kViolation;
    }
    if (lemma_cmd->parsed()) {
      auto graphs = enumerate_connected_multigraphs(max_n, max_mult);
      SweepReport r = run_property_suite(lemma_name, graphs, global.thread_count());
      report.result = sweep_to_json(r);
      report.emit(command);
      return r.passed() ? kOk : kViolation;
    }
    if (repro_cmd->parsed()) {
      bool all_pass = true;
      json list = json::array();
      auto targets = repro_target == "all" ? reproduce_targets()
                                           : std::vector<std::string>{repro_target};
      for (const auto& t : targets) {
        ReproReport r = reproduce(t, global.thread_count());
        all_pass = all_pass && r.passed();
        list.push_back(repro_to_json(r));
      }
      report.result = json{{"reports", list}, {"pass", all_pass}};
      report.emit(command);
      return all_pass ? kOk : kViolation;
    }
  } catch (const timeout_error& e) {
    json bounds{{"timed_out", true}, {"error", e.what()}};
    bounds["lower"] = e.lower_bound >= 0 ? json(e.lower_bound) : json(nullptr);
    bounds["upper"] = e.upper_bound >= 0 ? json(e.upper_bound) : json(nullptr);
    report.result = bounds;
    report.emit(command);
    return kTimeout;
  } catch (const size_bound_error& e) {
    std::cerr << "size bound: " << e.what() << "\n";
    return kSizeBound;
  } catch (const json::exception& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return kUsage;
  }
  std::cerr << "no subcommand handled\n";
  return kUsage;
}
