#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scramble/canonical.hpp"
#include "scramble/families.hpp"
#include "scramble/reproduce.hpp"
#include "scramble/sn_solver.hpp"

namespace py = pybind11;
using namespace scramble;

namespace {

Multigraph graph_from_py(int n, const std::vector<std::tuple<int, int, int>>& edges) {
  Multigraph g(n);
  for (auto [u, v, m] : edges) g.add_edge(u, v, m);
  return g;
}

std::vector<std::tuple<int, int, int>> edges_to_py(const Multigraph& g) {
  std::vector<std::tuple<int, int, int>> out;
  for (const auto& e : g.edges()) out.emplace_back(e.u, e.v, e.mult);
  return out;
}

VertexSet set_from_py(const std::vector<int>& vs) {
  VertexSet s;
  for (int v : vs) s.add(v);
  return s;
}

Scramble scramble_from_py(const Multigraph& g, const std::vector<std::vector<int>>& eggs) {
  std::vector<VertexSet> sets;
  for (const auto& e : eggs) sets.push_back(set_from_py(e));
  return make_scramble(g, std::move(sets));
}

}  // namespace

PYBIND11_MODULE(scramblenum, m) {
  m.doc() = "exact scramble number, disjoint scramble number and screewidth "
            "of small multigraphs";

  py::class_<Multigraph>(m, "Multigraph")
      .def(py::init(&graph_from_py), py::arg("n"), py::arg("edges"))
      .def_property_readonly("n", &Multigraph::vertex_count)
      .def("edges", &edges_to_py)
      .def("edge_count", &Multigraph::edge_count)
      .def("degree", &Multigraph::degree)
      .def("multiplicity", &Multigraph::multiplicity)
      .def("connected", &Multigraph::connected)
      .def("__repr__", [](const Multigraph& g) {
        return "Multigraph(n=" + std::to_string(g.vertex_count()) +
               ", edges=" + std::to_string(g.edge_count()) + ")";
      });

  m.def("family", &family, py::arg("id"), py::arg("n") = py::none(),
        py::arg("k") = py::none());

  m.def("edge_connectivity", &edge_connectivity);
  m.def("lambda2", &lambda2);
  m.def("independence_number", &independence_number);
  m.def("bridges", &bridges);
  m.def("connected_subsets", [](const Multigraph& g) {
    std::vector<std::vector<int>> out;
    for (VertexSet s : connected_subsets(g)) out.push_back(s.to_vector());
    return out;
  });
  m.def("isomorphic", &isomorphic);
  m.def("enumerate_connected_multigraphs",
        py::overload_cast<int, int>(&enumerate_connected_multigraphs),
        py::arg("max_n"), py::arg("max_mult"));

  m.def("smooth", &smooth);
  m.def("multi_smooth", &multi_smooth);
  m.def("is_topological_minor", [](const Multigraph& h, const Multigraph& g) -> py::object {
    auto e = is_topological_minor(h, g);
    if (!e) return py::none();
    py::dict out;
    out["branch_map"] = e->branch_map;
    py::list paths;
    for (const auto& p : e->paths) {
      py::dict pe;
      pe["edge"] = py::make_tuple(p.hu, p.hv);
      pe["vertices"] = p.vertices;
      paths.append(pe);
    }
    out["path_map"] = paths;
    return out;
  });
  m.def("is_multi_topological_minor", &is_multi_topological_minor);

  m.def("scramble_order", [](const Multigraph& g, const std::vector<std::vector<int>>& eggs) {
    ScrambleOrder o = order(scramble_from_py(g, eggs));
    py::dict out;
    out["hitting"] = o.hitting;
    out["egg_cut"] = o.egg_cut == kInfinity ? py::object(py::none()) : py::cast(o.egg_cut);
    out["order"] = o.order;
    out["hitting_witness"] = o.hitting_witness.to_vector();
    return out;
  });
  m.def("uniform_scramble_2_order",
        [](const Multigraph& g) { return order(uniform_scramble_2(g)).order; });

  m.def("screewidth", [](const Multigraph& g) {
    auto [w, d] = screewidth_exact(g);
    py::dict decomp;
    py::dict bags;
    for (int b = 0; b < d.node_count; ++b)
      bags[py::str(std::to_string(b))] = d.bags[b].to_vector();
    decomp["bags"] = bags;
    decomp["tree_links"] = d.links;
    return py::make_tuple(w, decomp);
  });

  m.def("sn", [](const Multigraph& g) { return sn_exact(g).value; });
  m.def("sn_certificate", [](const Multigraph& g) {
    SnCertificate c = sn_exact(g);
    py::dict out;
    out["sn"] = c.value;
    py::list eggs;
    for (VertexSet e : c.lower_witness.eggs) eggs.append(e.to_vector());
    out["lower_witness_eggs"] = eggs;
    out["upper_witness_type"] =
        std::holds_alternative<TreeCutDecomposition>(c.upper_witness)
            ? "tree_cut_decomposition"
            : "exhausted_search";
    return out;
  });
  m.def("dsn", [](const Multigraph& g) { return dsn_exact(g); });
  m.def("classify", [](const Multigraph& g) {
    ClassificationResult r = classify_sn_le_2(g);
    switch (r.verdict) {
      case SnVerdict::kSn1: return std::string("sn=1");
      case SnVerdict::kSn2: return std::string("sn=2");
      default: return std::string("sn>=3:") + r.pattern;
    }
  });
  m.def("is_k_scramble_minimal", [](const Multigraph& g, int k) {
    return is_k_scramble_minimal(g, k).minimal;
  });
  m.def("verify_corollary_3ec", [](int max_n, int max_mult, int threads) {
    SweepReport r = verify_corollary_3ec(max_n, max_mult, threads);
    return py::make_tuple(r.passed(), r.checked);
  }, py::arg("max_n"), py::arg("max_mult"), py::arg("threads") = 1);
  m.def("reproduce", [](const std::string& target) {
    ReproReport r = reproduce(target);
    py::list checks;
    for (const auto& c : r.checks)
      checks.append(py::make_tuple(c.what, c.got, c.expected, c.pass));
    return py::make_tuple(r.passed(), checks);
  });

  m.attr("__version__") = "0.1.0";
}
