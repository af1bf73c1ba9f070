#pragma once

#include "graph.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace vdel {

using Json = nlohmann::ordered_json;

namespace detail {

// DOM builder that keeps the source text of non-integer numbers so decimal
// weights such as 0.1 are read exactly instead of through a double.
class ExactSax {
public:
  Json root;

  bool null() { return put(Json(nullptr)); }
  bool boolean(bool b) { return put(Json(b)); }
  bool number_integer(Json::number_integer_t v) { return put(Json(v)); }
  bool number_unsigned(Json::number_unsigned_t v) { return put(Json(v)); }
  bool number_float(Json::number_float_t, const Json::string_t& raw) {
    Json j = Json::object();
    j["$num"] = raw;
    return put(std::move(j));
  }
  bool string(Json::string_t& s) { return put(Json(s)); }
  bool binary(Json::binary_t&) { return false; }
  bool start_object(std::size_t) {
    Json* p = put_ref(Json::object());
    stack_.push_back(p);
    return true;
  }
  bool key(Json::string_t& k) {
    key_ = k;
    return true;
  }
  bool end_object() {
    stack_.pop_back();
    return true;
  }
  bool start_array(std::size_t) {
    Json* p = put_ref(Json::array());
    stack_.push_back(p);
    return true;
  }
  bool end_array() {
    stack_.pop_back();
    return true;
  }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& e) {
    throw InputError("json parse error at byte " + std::to_string(pos) + ": " + e.what());
  }

private:
  std::vector<Json*> stack_;
  std::string key_;

  Json* put_ref(Json v) {
    if (stack_.empty()) {
      root = std::move(v);
      return &root;
    }
    Json* top = stack_.back();
    if (top->is_array()) {
      top->push_back(std::move(v));
      return &top->back();
    }
    (*top)[key_] = std::move(v);
    return &(*top)[key_];
  }
  bool put(Json v) {
    put_ref(std::move(v));
    return true;
  }
};

} // namespace detail

inline Json parse_json_exact(const std::string& text) {
  detail::ExactSax sax;
  Json::sax_parse(text, &sax);
  return sax.root;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

inline Rational json_rational(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_unsigned()) return Rational(std::to_string(j.get<unsigned long long>()));
  if (j.is_number_integer()) return Rational(std::to_string(j.get<long long>()));
  if (j.is_object() && j.contains("$num")) return parse_rational(j["$num"].get<std::string>());
  if (j.is_number_float()) {
    std::ostringstream ss;
    ss.precision(17);
    ss << j.get<double>();
    return parse_rational(ss.str());
  }
  throw InputError("expected a rational");
}

inline int json_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string("expected integer for ") + what);
  long long v = j.get<long long>();
  if (v < INT32_MIN || v > INT32_MAX) throw InputError(std::string("integer out of range for ") + what);
  return int(v);
}

inline Graph graph_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n")) throw InputError("graph json: missing \"n\"");
  int n = json_int(j["n"], "n");
  if (n < 0) throw InputError("graph json: negative n");
  std::vector<Edge> es;
  if (j.contains("edges")) {
    if (!j["edges"].is_array()) throw InputError("graph json: edges must be an array");
    for (auto& e : j["edges"]) {
      if (!e.is_array() || e.size() != 2) throw InputError("graph json: edge must be [u,v]");
      es.emplace_back(json_int(e[0], "edge"), json_int(e[1], "edge"));
    }
  }
  std::vector<Rational> ws;
  if (j.contains("weights")) {
    if (!j["weights"].is_array()) throw InputError("graph json: weights must be an array");
    for (auto& w : j["weights"]) ws.push_back(json_rational(w));
    if (int(ws.size()) != n) throw InputError("graph json: weights length differs from n");
  }
  return Graph(n, es, ws);
}

inline Json graph_to_json(const Graph& g) {
  Json j;
  j["n"] = g.n();
  Json es = Json::array();
  for (auto [u, v] : g.edges()) es.push_back({u, v});
  j["edges"] = es;
  Json ws = Json::array();
  for (auto& w : g.weights()) ws.push_back(to_string(w));
  j["weights"] = ws;
  return j;
}

// One edge per line keeps files diffable; the layout is canonical so that
// write(read(write(g))) is byte-identical.
inline std::string dump_graph(const Json& j) {
  std::ostringstream out;
  out << "{\"n\": " << j["n"].dump() << ",\n \"edges\": [";
  bool first = true;
  for (auto& e : j["edges"]) {
    out << (first ? "" : ",") << "\n  " << e.dump();
    first = false;
  }
  out << (first ? "" : "\n ") << "],\n \"weights\": " << j["weights"].dump() << "}\n";
  return out.str();
}

inline Graph read_graph_json(const std::string& path) { return graph_from_json(parse_json_exact(read_file(path))); }

inline void write_graph_json(const std::string& path, const Graph& g) { write_file(path, dump_graph(graph_to_json(g))); }

// DIMACS-like edge list: "c ..." comments, "p edge n m", "e u v" (1-based).
// Companion weight file: "v w" per line (1-based), missing vertices weigh 1.
inline Graph read_edge_list(const std::string& text, const std::string& weight_text = "") {
  std::istringstream in(text);
  std::string line;
  int n = -1;
  std::vector<Edge> es;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag) || tag == "c") continue;
    if (tag == "p") {
      std::string kind;
      long m = 0;
      if (!(ls >> kind >> n >> m) || n < 0) throw InputError("edge list: bad problem line");
    } else if (tag == "e") {
      int u, v;
      if (n < 0) throw InputError("edge list: edge before problem line");
      if (!(ls >> u >> v) || u < 1 || v < 1 || u > n || v > n) throw InputError("edge list: bad edge line");
      es.emplace_back(u - 1, v - 1);
    } else {
      throw InputError("edge list: unknown line tag " + tag);
    }
  }
  if (n < 0) throw InputError("edge list: missing problem line");
  std::vector<Rational> ws(n, Rational(1));
  std::istringstream win(weight_text);
  while (std::getline(win, line)) {
    std::istringstream ls(line);
    std::string a, b;
    if (!(ls >> a) || a == "c") continue;
    if (!(ls >> b)) throw InputError("weight file: expected \"v w\"");
    int v = std::stoi(a);
    if (v < 1 || v > n) throw InputError("weight file: vertex out of range");
    ws[v - 1] = parse_rational(b);
  }
  return Graph(n, es, ws);
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "p edge " << g.n() << " " << g.m() << "\n";
  for (auto [u, v] : g.edges()) out << "e " << u + 1 << " " << v + 1 << "\n";
  return out.str();
}

inline std::string write_weight_file(const Graph& g) {
  std::ostringstream out;
  for (int v = 0; v < g.n(); ++v) out << v + 1 << " " << to_string(g.weight(v)) << "\n";
  return out.str();
}

// Reads JSON (by content) or a DIMACS edge list; weights for the latter come
// from an optional companion file.
inline Graph read_graph_any(const std::string& path, const std::string& weight_path = "") {
  std::string text = read_file(path);
  size_t k = text.find_first_not_of(" \t\r\n");
  if (k != std::string::npos && text[k] == '{') {
    Json j = parse_json_exact(text);
    if (j.contains("graph")) return graph_from_json(j["graph"]);
    return graph_from_json(j);
  }
  return read_edge_list(text, weight_path.empty() ? "" : read_file(weight_path));
}

} // namespace vdel
