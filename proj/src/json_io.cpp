#include "scramble/json_io.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

namespace scramble {

using nlohmann::json;

nlohmann::json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, e.mult});
  return json{{"edges", edges}, {"n", g.vertex_count()}};
}

Multigraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph json needs {\"n\": int, \"edges\": [[u,v,mult],...]}");
  int n = j.at("n").get<int>();
  Multigraph g(n);
  std::pair<int, int> prev{-1, -1};
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 3)
      throw std::invalid_argument("edge entries must be [u, v, mult]");
    int u = e[0].get<int>(), v = e[1].get<int>(), m = e[2].get<int>();
    if (u >= v) throw std::invalid_argument("edges must have u < v");
    if (m < 1) throw std::invalid_argument("multiplicities must be positive");
    if (std::pair{u, v} <= prev)
      throw std::invalid_argument("edges must be sorted with no duplicate pairs");
    prev = {u, v};
    g.add_edge(u, v, m);
  }
  return g;
}

Multigraph parse_graph_text(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<EdgeBundle> edges;
  int max_v = -1;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream ls(line);
    int u, v, m = 1;
    if (!(ls >> u >> v)) {
      std::istringstream probe(line);
      std::string word;
      if (probe >> word) throw std::invalid_argument("bad edge list line: " + line);
      continue;  // blank or comment-only
    }
    ls >> m;
    if (u == v) throw std::invalid_argument("loops are not allowed");
    if (u > v) std::swap(u, v);
    if (u < 0 || m < 1) throw std::invalid_argument("bad edge list line: " + line);
    edges.push_back({u, v, m});
    max_v = std::max(max_v, v);
  }
  Multigraph g(max_v + 1);
  for (const auto& e : edges) g.add_edge(e.u, e.v, e.mult);
  return g;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << content;
}

Multigraph load_graph(const std::string& path) {
  std::string text = read_text_file(path);
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{')
    return graph_from_json(json::parse(text));
  return parse_graph_text(text);
}

std::string canonical_dump(const json& j) { return j.dump(2); }

nlohmann::json scramble_to_json(const Scramble& s) {
  json eggs = json::array();
  for (const auto& e : s.eggs) eggs.push_back(e.to_vector());
  return json{{"eggs", eggs}, {"graph", graph_to_json(s.host)}};
}

Scramble scramble_from_json(const json& j, const std::string& base_dir) {
  if (!j.is_object() || !j.contains("graph") || !j.contains("eggs"))
    throw std::invalid_argument("scramble json needs {\"graph\": ..., \"eggs\": [[v,...],...]}");
  Multigraph host = [&] {
    const auto& gj = j.at("graph");
    if (gj.is_string())
      return load_graph((std::filesystem::path(base_dir) / gj.get<std::string>()).string());
    return graph_from_json(gj);
  }();
  std::vector<VertexSet> eggs;
  for (const auto& ej : j.at("eggs")) {
    VertexSet egg;
    for (const auto& vj : ej) {
      int v = vj.get<int>();
      if (v < 0 || v >= host.vertex_count())
        throw std::invalid_argument("egg vertex out of range");
      egg.add(v);
    }
    eggs.push_back(egg);
  }
  return make_scramble(host, std::move(eggs));
}

Scramble load_scramble(const std::string& path) {
  return scramble_from_json(json::parse(read_text_file(path)),
                            std::filesystem::path(path).parent_path().string());
}

nlohmann::json decomposition_to_json(const TreeCutDecomposition& d) {
  json bags = json::object();
  for (int b = 0; b < d.node_count; ++b)
    bags[std::to_string(b)] = d.bags[b].to_vector();
  json links = json::array();
  for (auto [a, b] : d.links) links.push_back({std::min(a, b), std::max(a, b)});
  std::sort(links.begin(), links.end());
  return json{{"bags", bags}, {"tree_links", links}};
}

TreeCutDecomposition decomposition_from_json(const json& j) {
  if (!j.is_object() || !j.contains("bags") || !j.contains("tree_links"))
    throw std::invalid_argument(
        "decomposition json needs {\"bags\": {...}, \"tree_links\": [[a,b],...]}");
  std::map<int, VertexSet> bags;
  for (const auto& [key, val] : j.at("bags").items()) {
    int node = std::stoi(key);
    VertexSet bag;
    for (const auto& vj : val) bag.add(vj.get<int>());
    if (!bags.emplace(node, bag).second)
      throw std::invalid_argument("duplicate node id in bags");
  }
  TreeCutDecomposition d;
  d.node_count = static_cast<int>(bags.size());
  std::map<int, int> index_of;
  for (const auto& [node, bag] : bags) {
    index_of[node] = static_cast<int>(d.bags.size());
    d.bags.push_back(bag);
  }
  for (const auto& lj : j.at("tree_links")) {
    if (!lj.is_array() || lj.size() != 2)
      throw std::invalid_argument("links must be [a, b] pairs");
    int a = lj[0].get<int>(), b = lj[1].get<int>();
    if (!index_of.count(a) || !index_of.count(b))
      throw std::invalid_argument("link references an unknown node");
    d.links.emplace_back(index_of.at(a), index_of.at(b));
  }
  return d;
}

TreeCutDecomposition load_decomposition(const std::string& path) {
  return decomposition_from_json(json::parse(read_text_file(path)));
}

nlohmann::json embedding_to_json(const EmbeddingModel& m) {
  json branch = json::object();
  for (size_t i = 0; i < m.branch_map.size(); ++i)
    branch[std::to_string(i)] = m.branch_map[i];
  json paths = json::array();
  for (const auto& p : m.paths)
    paths.push_back(json{{"edge", {p.hu, p.hv}}, {"vertices", p.vertices}});
  return json{{"branch_map", branch}, {"path_map", paths}};
}

nlohmann::json order_to_json(const ScrambleOrder& o) {
  json out{{"hitting", o.hitting},
           {"order", o.order},
           {"hitting_witness", o.hitting_witness.to_vector()}};
  out["egg_cut"] = o.egg_cut == kInfinity ? json(nullptr) : json(o.egg_cut);
  if (o.cut_pair) {
    json cut = json::array();
    for (const auto& e : o.cut_edges) cut.push_back({e.u, e.v, e.mult});
    out["cut_witness"] = json{{"pair", {o.cut_pair->first, o.cut_pair->second}},
                              {"edges", cut}};
  } else {
    out["cut_witness"] = nullptr;
  }
  return out;
}

nlohmann::json certificate_to_json(const SnCertificate& c) {
  json out{{"sn", c.value},
           {"lower_witness", scramble_to_json(c.lower_witness)},
           {"lower_order", order_to_json(c.lower_order)}};
  if (const auto* d = std::get_if<TreeCutDecomposition>(&c.upper_witness))
    out["upper_witness"] = json{{"type", "tree_cut_decomposition"},
                                {"decomposition", decomposition_to_json(*d)}};
  else
    out["upper_witness"] =
        json{{"type", "exhausted_search"},
             {"description", std::get<ExhaustedSearch>(c.upper_witness).description}};
  return out;
}

}  // namespace scramble
