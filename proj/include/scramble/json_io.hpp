#pragma once

#include <string>

#include <json.hpp>

#include "scramble/multigraph.hpp"
#include "scramble/scramble.hpp"
#include "scramble/screewidth.hpp"
#include "scramble/sn_solver.hpp"
#include "scramble/topo_minor.hpp"

namespace scramble {

// Canonical JSON forms (keys sorted, edge triples sorted, u < v):
//   graph:        {"edges": [[u, v, mult], ...], "n": int}
//   scramble:     {"eggs": [[v, ...], ...], "graph": <graph or path string>}
//   decomposition:{"bags": {"<node>": [v, ...]}, "tree_links": [[a, b], ...]}
// Parsing also accepts a plain text edge list for graphs: one "u v mult"
// triple per line (mult defaults to 1), '#' starts a comment, vertex count
// is one past the largest index.

nlohmann::json graph_to_json(const Multigraph& g);
Multigraph graph_from_json(const nlohmann::json& j);
Multigraph parse_graph_text(const std::string& text);
/// Sniffs JSON vs text by the first non-space byte.
Multigraph load_graph(const std::string& path);
std::string canonical_dump(const nlohmann::json& j);

nlohmann::json scramble_to_json(const Scramble& s);
/// `base_dir` resolves a relative "graph" path inside the file.
Scramble scramble_from_json(const nlohmann::json& j, const std::string& base_dir = ".");
Scramble load_scramble(const std::string& path);

nlohmann::json decomposition_to_json(const TreeCutDecomposition& d);
TreeCutDecomposition decomposition_from_json(const nlohmann::json& j);
TreeCutDecomposition load_decomposition(const std::string& path);

nlohmann::json embedding_to_json(const EmbeddingModel& m);
nlohmann::json order_to_json(const ScrambleOrder& o);
nlohmann::json certificate_to_json(const SnCertificate& c);

void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace scramble
