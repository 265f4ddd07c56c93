#ifndef CSKIT_IO_HPP
#define CSKIT_IO_HPP

// Graph documents: one JSON shape for both skeletons (vertices carry their
// tableau rows) and abstract labelled graphs (rows omitted), plus DOT output.

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "skeleton.hpp"

namespace cskit {

inline constexpr int kSchemaVersion = 1;

// A malformed document; `where` is a JSON pointer to the offending value.
class DocumentError : public std::runtime_error {
 public:
  DocumentError(const std::string& where, const std::string& what)
      : std::runtime_error(where + ": " + what), where_(where) {}
  const std::string& where() const { return where_; }

 private:
  std::string where_;
};

struct DocumentVertex {
  int id = 0;
  std::optional<std::vector<std::vector<int>>> rows;
  Composition descent_composition;
  bool operator==(const DocumentVertex&) const = default;
};

struct DocumentEdge {
  int src = 0;
  int dst = 0;
  Interval interval;
  std::optional<Cycle> cycle;
  std::optional<EdgeType> type;
  bool operator==(const DocumentEdge&) const = default;
};

struct GraphDocument {
  int schema_version = kSchemaVersion;
  std::optional<Partition> shape;
  int n = 0;
  std::vector<DocumentVertex> vertices;
  std::vector<DocumentEdge> edges;
  bool operator==(const GraphDocument&) const = default;
};

inline GraphDocument to_document(const SkeletonGraph& g) {
  GraphDocument d;
  d.shape = g.shape;
  d.n = g.n;
  for (std::size_t v = 0; v < g.vertices.size(); ++v)
    d.vertices.push_back({static_cast<int>(v), g.vertices[v].rows, g.descents[v]});
  for (const auto& e : g.edges) d.edges.push_back({e.src, e.dst, e.interval, e.cycle, e.type});
  return d;
}

inline GraphDocument to_document(const LabeledGraph& g, const std::vector<EdgeType>* types = nullptr) {
  GraphDocument d;
  d.n = g.n;
  for (int v = 0; v < g.size(); ++v) d.vertices.push_back({v, std::nullopt, g.labels[v]});
  for (std::size_t k = 0; k < g.edges.size(); ++k) {
    DocumentEdge e{g.edges[k].src, g.edges[k].dst, g.edges[k].interval, std::nullopt, std::nullopt};
    if (types) e.type = (*types)[k];
    d.edges.push_back(e);
  }
  return d;
}

// Keys are emitted in schema order.
inline nlohmann::ordered_json to_json(const GraphDocument& d) {
  using json = nlohmann::ordered_json;
  json j;
  j["schema_version"] = d.schema_version;
  if (d.shape) j["shape"] = d.shape->parts;
  j["n"] = d.n;
  j["vertices"] = json::array();
  for (const auto& v : d.vertices) {
    json jv;
    jv["id"] = v.id;
    if (v.rows) jv["rows"] = *v.rows;
    jv["descent_composition"] = v.descent_composition.parts;
    j["vertices"].push_back(jv);
  }
  j["edges"] = json::array();
  for (const auto& e : d.edges) {
    json je;
    je["src"] = e.src;
    je["dst"] = e.dst;
    je["interval"] = {e.interval.lo, e.interval.hi};
    if (e.cycle) je["cycle"] = e.cycle->values;
    if (e.type) je["type"] = to_string(*e.type);
    j["edges"].push_back(je);
  }
  return j;
}

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& j, const std::string& path, const std::string& key) {
  if (!j.is_object()) throw DocumentError(path, "expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw DocumentError(path, "missing field \"" + key + "\"");
  return *it;
}

inline int as_int(const nlohmann::json& j, const std::string& path) {
  if (!j.is_number_integer()) throw DocumentError(path, "expected an integer");
  return j.get<int>();
}

inline std::vector<int> as_ints(const nlohmann::json& j, const std::string& path) {
  if (!j.is_array()) throw DocumentError(path, "expected an array of integers");
  std::vector<int> out;
  for (std::size_t k = 0; k < j.size(); ++k) out.push_back(as_int(j[k], path + "/" + std::to_string(k)));
  return out;
}

}  // namespace detail

// Parses and validates a document: ids dense and in order, endpoints and
// intervals in range, compositions of n.
inline GraphDocument document_from_json(const nlohmann::json& j) {
  using detail::as_int;
  using detail::as_ints;
  using detail::field;
  GraphDocument d;
  d.schema_version = as_int(field(j, "", "schema_version"), "/schema_version");
  if (d.schema_version != kSchemaVersion)
    throw DocumentError("/schema_version", "unsupported version " + std::to_string(d.schema_version));
  if (j.contains("shape")) {
    try {
      d.shape = Partition(as_ints(j["shape"], "/shape"));
    } catch (const std::invalid_argument& e) {
      throw DocumentError("/shape", e.what());
    }
  }
  d.n = as_int(field(j, "", "n"), "/n");
  if (d.n < 0) throw DocumentError("/n", "must be nonnegative");
  if (d.shape && d.shape->size() != d.n) throw DocumentError("/shape", "size differs from n");
  const auto& vs = field(j, "", "vertices");
  if (!vs.is_array()) throw DocumentError("/vertices", "expected an array");
  for (std::size_t k = 0; k < vs.size(); ++k) {
    std::string p = "/vertices/" + std::to_string(k);
    DocumentVertex v;
    v.id = as_int(field(vs[k], p, "id"), p + "/id");
    if (v.id != static_cast<int>(k)) throw DocumentError(p + "/id", "ids must be 0.." + std::to_string(vs.size() - 1) + " in order");
    if (vs[k].contains("rows")) {
      const auto& rows = vs[k]["rows"];
      if (!rows.is_array()) throw DocumentError(p + "/rows", "expected an array of rows");
      std::vector<std::vector<int>> r;
      for (std::size_t q = 0; q < rows.size(); ++q) r.push_back(as_ints(rows[q], p + "/rows/" + std::to_string(q)));
      v.rows = r;
    }
    try {
      v.descent_composition = Composition(as_ints(field(vs[k], p, "descent_composition"), p + "/descent_composition"));
    } catch (const std::invalid_argument& e) {
      throw DocumentError(p + "/descent_composition", e.what());
    }
    if (v.descent_composition.size() != d.n) throw DocumentError(p + "/descent_composition", "does not sum to n");
    d.vertices.push_back(v);
  }
  const auto& es = field(j, "", "edges");
  if (!es.is_array()) throw DocumentError("/edges", "expected an array");
  int V = static_cast<int>(d.vertices.size());
  for (std::size_t k = 0; k < es.size(); ++k) {
    std::string p = "/edges/" + std::to_string(k);
    DocumentEdge e;
    e.src = as_int(field(es[k], p, "src"), p + "/src");
    e.dst = as_int(field(es[k], p, "dst"), p + "/dst");
    if (e.src < 0 || e.src >= V) throw DocumentError(p + "/src", "no such vertex");
    if (e.dst < 0 || e.dst >= V) throw DocumentError(p + "/dst", "no such vertex");
    auto iv = as_ints(field(es[k], p, "interval"), p + "/interval");
    if (iv.size() != 2) throw DocumentError(p + "/interval", "expected [lo, hi]");
    e.interval = {iv[0], iv[1]};
    if (e.interval.lo < 1 || e.interval.hi > d.n || e.interval.size() < 3 || e.interval.size() % 2 == 0)
      throw DocumentError(p + "/interval", "not an odd interval of length >= 3 inside [1,n]");
    if (es[k].contains("cycle")) e.cycle = Cycle{as_ints(es[k]["cycle"], p + "/cycle")};
    if (es[k].contains("type")) {
      const auto& t = es[k]["type"];
      if (!t.is_string()) throw DocumentError(p + "/type", "expected a string");
      try {
        e.type = edge_type_from_string(t.get<std::string>());
      } catch (const std::invalid_argument& ex) {
        throw DocumentError(p + "/type", ex.what());
      }
    }
    d.edges.push_back(e);
  }
  return d;
}

inline GraphDocument parse_document(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DocumentError("byte " + std::to_string(e.byte), "invalid JSON");
  }
  return document_from_json(j);
}

inline LabeledGraph labeled_from_document(const GraphDocument& d) {
  LabeledGraph g;
  g.n = d.n;
  for (const auto& v : d.vertices) g.labels.push_back(v.descent_composition);
  for (const auto& e : d.edges) g.edges.push_back({e.src, e.dst, e.interval});
  return g;
}

// Requires rows on every vertex; descent compositions are recomputed and
// must match the stored ones.
inline SkeletonGraph skeleton_from_document(const GraphDocument& d) {
  SkeletonGraph g;
  g.n = d.n;
  for (std::size_t k = 0; k < d.vertices.size(); ++k) {
    std::string p = "/vertices/" + std::to_string(k);
    if (!d.vertices[k].rows) throw DocumentError(p, "vertex has no rows");
    Tableau t(*d.vertices[k].rows);
    if (!is_standard(t) || t.num_cells() != d.n) throw DocumentError(p + "/rows", "not a standard tableau of size n");
    if (g.id_of(t) >= 0) throw DocumentError(p + "/rows", "duplicate tableau");
    g.add_vertex(t);
    if (g.descents.back() != d.vertices[k].descent_composition)
      throw DocumentError(p + "/descent_composition", "differs from the tableau's descent composition");
  }
  g.shape = d.shape ? *d.shape : (g.vertices.empty() ? Partition() : g.vertices.front().shape());
  for (const auto& e : d.edges)
    g.edges.push_back({e.src, e.dst, e.interval, e.cycle, e.type.value_or(EdgeType::Preserving)});
  return g;
}

inline std::string rows_text(const std::vector<std::vector<int>>& rows) {
  std::string s;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (r) s += " | ";
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c) s += " ";
      s += std::to_string(rows[r][c]);
    }
  }
  return s;
}

// Directed DOT; edges are annotated "I=[a,b] (cycle) type". Output depends
// only on the document, so it is deterministic.
inline std::string to_dot(const GraphDocument& d, const std::string& name = "skeleton") {
  std::ostringstream out;
  out << "digraph \"" << name << "\" {\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const auto& v : d.vertices) {
    out << "  v" << v.id << " [label=\"";
    if (v.rows) out << rows_text(*v.rows) << "\\n";
    out << to_string(v.descent_composition) << "\"];\n";
  }
  for (const auto& e : d.edges) {
    out << "  v" << e.src << " -> v" << e.dst << " [label=\"I=" << to_string(e.interval);
    if (e.cycle) out << " " << to_string(*e.cycle);
    if (e.type) out << " " << to_string(*e.type);
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cskit

#endif  // CSKIT_IO_HPP
