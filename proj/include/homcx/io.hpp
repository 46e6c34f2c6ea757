#ifndef HOMCX_IO_HPP
#define HOMCX_IO_HPP

#include <fstream>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "homcx/cell.hpp"
#include "homcx/connectivity.hpp"
#include "homcx/cycle_reduction.hpp"
#include "homcx/graph.hpp"
#include "homcx/homology.hpp"
#include "homcx/loop_contraction.hpp"

// JSON forms. Vertices, positions within a path, and colors are 1-based;
// cell coordinates follow the graph order (vertex_at(1), vertex_at(2), ...).
namespace homcx::io {

using json = nlohmann::json;

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::runtime_error(path + ": " + e.what());
  }
}

// --- graphs ---------------------------------------------------------------

inline json to_json(const Graph& g) {
  json edges = json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  return {{"p", g.vertex_count()}, {"edges", edges}};
}

inline Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("p")) throw std::invalid_argument("graph JSON needs a field \"p\"");
  std::vector<Edge> edges;
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be a pair of vertices");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  return Graph::from_edges(j.at("p").get<int>(), edges);
}

// --- cells and chains -----------------------------------------------------

inline json to_json(const Cell& c) { return cell_to_lists(c); }

inline Cell cell_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("cell must be a list of color lists");
  return cell_from_lists(j.get<std::vector<std::vector<int>>>());
}

inline json to_json(const Chain& ch) {
  json terms = json::array();
  for (const auto& [c, k] : ch) terms.push_back({{"coeff", k}, {"cell", to_json(c)}});
  return terms;
}

/// Accepts a list of {"coeff", "cell"} terms, or {"dim": t, "terms": [...]} to give an empty chain its dimension.
inline Chain chain_from_json(const json& j) {
  const json* terms = &j;
  std::optional<int> dim;
  if (j.is_object()) {
    if (j.contains("dim")) dim = j.at("dim").get<int>();
    terms = &j.at("terms");
  }
  if (!terms->is_array()) throw std::invalid_argument("chain must be a list of terms");
  std::vector<std::pair<Cell, Coeff>> parsed;
  for (const auto& t : *terms) parsed.emplace_back(cell_from_json(t.at("cell")), t.at("coeff").get<Coeff>());
  if (!dim) dim = parsed.empty() ? 0 : parsed.front().first.dim();
  Chain ch(*dim);
  for (const auto& [c, k] : parsed) ch.add(c, k);
  return ch;
}

inline json to_json(const ChainCertificate& cert) {
  json adds = json::array();
  for (const auto& [k, c] : cert.additions) adds.push_back({{"coeff", k}, {"cell", to_json(c)}});
  return {{"t", cert.t}, {"additions", adds}};
}

inline ChainCertificate certificate_from_json(const json& j) {
  ChainCertificate cert;
  cert.t = j.at("t").get<int>();
  for (const auto& a : j.at("additions")) cert.additions.emplace_back(a.at("coeff").get<Coeff>(), cell_from_json(a.at("cell")));
  return cert;
}

// --- paths and moves ------------------------------------------------------

/// A path vertex is written as a vertex cell ([[c1],[c2],...]); a plain coloring [c1,c2,...] is also read.
inline Coloring coloring_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("path vertex must be a list");
  if (!j.empty() && j.front().is_array()) return coloring_of(cell_from_json(j));
  return j.get<Coloring>();
}

inline json to_json(const EdgePath& p) {
  json out = json::array();
  for (const auto& v : p.vertices) out.push_back(to_json(vertex_cell(v)));
  return out;
}

inline EdgePath path_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("path must be a list of vertices");
  EdgePath p;
  for (const auto& v : j) p.vertices.push_back(coloring_from_json(v));
  return p;
}

inline json to_json(const HomotopyMove& m) {
  json verts = json::array();
  for (const auto& v : m.vertices) verts.push_back(to_json(vertex_cell(v)));
  return {{"kind", to_string(m.kind)}, {"position", m.position + 1}, {"vertices", verts}, {"support", to_json(m.support)}};
}

inline HomotopyMove move_from_json(const json& j) {
  HomotopyMove m;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "DropRepeat")
    m.kind = MoveKind::DropRepeat;
  else if (kind == "InsertPair")
    m.kind = MoveKind::InsertPair;
  else if (kind == "DeleteVertex")
    m.kind = MoveKind::DeleteVertex;
  else
    throw std::invalid_argument("unknown move kind " + kind);
  const auto pos = j.at("position").get<long long>();
  if (pos < 1) throw std::invalid_argument("move position must be at least 1");
  m.position = static_cast<std::size_t>(pos - 1);
  if (j.contains("vertices"))
    for (const auto& v : j.at("vertices")) m.vertices.push_back(coloring_from_json(v));
  m.support = cell_from_json(j.at("support"));
  return m;
}

inline json to_json(const std::vector<HomotopyMove>& moves) {
  json out = json::array();
  for (const auto& m : moves) out.push_back(to_json(m));
  return out;
}

// --- homology -------------------------------------------------------------

/// Integers that fit in 64 bits are written as numbers, larger ones as decimal strings.
inline json to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

inline json to_json(const std::vector<BigInt>& factors) {
  json out = json::array();
  for (const auto& f : factors) out.push_back(to_json(f));
  return out;
}

inline json to_json(const HomologySummary& h) {
  json torsion = json::array();
  for (const auto& t : h.torsion) torsion.push_back(to_json(t));
  return {{"betti", h.betti}, {"torsion", torsion}};
}

inline json to_json(const ConnectivityReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", to_string(c.status)}, {"detail", c.detail}});
  json out = {{"vgap", r.vgap},
              {"enumerated_dim", r.enumerated_dim},
              {"f_vector", r.f_vector},
              {"checks", checks},
              {"verdict", to_string(r.verdict)},
              {"note", r.note}};
  if (r.homology) out["homology"] = to_json(*r.homology);
  if (r.betti_at_vgap) out["at_vgap"] = {{"betti", *r.betti_at_vgap}, {"torsion", to_json(r.torsion_at_vgap)}};
  return out;
}

}  // namespace homcx::io

#endif  // HOMCX_IO_HPP
