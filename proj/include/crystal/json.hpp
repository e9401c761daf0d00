#pragma once

// JSON encoding of the library's value types. Every encoder has a matching
// decoder so emitted objects parse back into the originating type.

#include <json.hpp>

#include "crystal/oracle.hpp"
#include "crystal/polytopes.hpp"

namespace crystal::json {

using Json = nlohmann::ordered_json;

inline Json encode(const ReducedWord& w) { return w.str(); }
inline ReducedWord decode_word(const Json& j) { return parse_word(j.get<std::string>()); }

inline Json encode(const Inversion& inv) { return Json::array({inv.p, inv.q}); }
inline Inversion decode_inversion(const Json& j) { return {j.at(0).get<int>(), j.at(1).get<int>()}; }

inline Json encode(const Vertex& v) {
  return {{"position", v.position}, {"inversion", encode(v.inversion)}, {"level", v.level}};
}
inline Vertex decode_vertex(const Json& j) {
  return {j.at("position").get<int>(), decode_inversion(j.at("inversion")), j.at("level").get<int>()};
}

inline Json encode(const WiringDiagram& d) {
  Json vs = Json::array();
  for (const auto& v : d.vertices()) vs.push_back(encode(v));
  return {{"word", encode(d.word())}, {"n", d.n()}, {"vertices", vs}};
}

inline Json encode(const CrossingPath& g) {
  IntVec others, turning;
  for (const auto& st : g.steps()) others.push_back(st.other_wire);
  for (int s = 0; s < g.length(); ++s)
    if (g.turning()[s]) turning.push_back(g.steps()[s].position);
  return {{"a", g.color()},           {"kind", to_string(g.kind())}, {"positions", g.positions()},
          {"arrival_wires", g.arrival_wires()}, {"other_wires", others}, {"turning", turning},
          {"r", g.r()},               {"s", g.s()}};
}

inline CrossingPath decode_path(const Json& j) {
  const auto pos = j.at("positions").get<IntVec>();
  const auto arr = j.at("arrival_wires").get<IntVec>();
  const auto oth = j.at("other_wires").get<IntVec>();
  if (pos.size() != arr.size() || pos.size() != oth.size()) throw Error("path JSON: step arrays of different lengths");
  std::vector<PathStep> steps;
  for (std::size_t s = 0; s < pos.size(); ++s) steps.push_back({pos[s], arr[s], oth[s]});
  const int len = static_cast<int>(j.at("r").size());
  int n = 2;
  while (positive_root_count(n) < len) ++n;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind != "crossing" && kind != "rigorous") throw Error("path JSON: unknown kind " + kind);
  return CrossingPath(n, j.at("a").get<int>(), kind == "crossing" ? PathKind::crossing : PathKind::rigorous, std::move(steps));
}

inline Json encode(const LinearForm& f) {
  Json prov = {{"kind", f.provenance}};
  if (f.color) prov["a"] = f.color;
  if (f.path >= 0) prov["path"] = f.path;
  return {{"coeffs", f.coeffs}, {"rel", to_string(f.relation)}, {"rhs", f.rhs}, {"provenance", prov}, {"text", f.str()}};
}

inline LinearForm decode_form(const Json& j) {
  LinearForm f;
  f.coeffs = j.at("coeffs").get<IntVec>();
  const auto rel = j.at("rel").get<std::string>();
  if (rel != ">=" && rel != "<=") throw Error("form JSON: unknown relation " + rel);
  f.relation = rel == ">=" ? Relation::ge : Relation::le;
  f.rhs = j.at("rhs").get<long>();
  const auto& prov = j.at("provenance");
  f.provenance = prov.at("kind").get<std::string>();
  f.color = prov.value("a", 0);
  f.path = prov.value("path", -1);
  return f;
}

inline Json encode(const InequalitySystem& sys) {
  Json forms = Json::array();
  for (const auto& f : sys.forms()) forms.push_back(encode(f));
  Json out = {{"word", encode(sys.word())}, {"kind", to_string(sys.kind())}};
  if (sys.kind() != SystemKind::cone) out["lambda"] = sys.lambda();
  out["forms"] = forms;
  return out;
}

inline InequalitySystem decode_system(const Json& j) {
  const auto kind = j.at("kind").get<std::string>();
  SystemKind k;
  if (kind == "cone") k = SystemKind::cone;
  else if (kind == "bz") k = SystemKind::bz;
  else if (kind == "nz") k = SystemKind::nz;
  else throw Error("system JSON: unknown kind " + kind);
  InequalitySystem sys(decode_word(j.at("word")), k, j.value("lambda", IntVec{}));
  for (const auto& f : j.at("forms")) sys.add(decode_form(f));
  return sys;
}

inline Json encode(const CrystalGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back(Json::array({e.source, e.color, e.target}));
  return {{"structure", g.structure}, {"n", g.n}, {"root", g.root}, {"nodes", g.nodes}, {"edges", edges}};
}

inline CrystalGraph decode_graph(const Json& j) {
  CrystalGraph g;
  g.structure = j.at("structure").get<std::string>();
  g.n = j.at("n").get<int>();
  g.root = j.at("root").get<int>();
  g.nodes = j.at("nodes").get<std::vector<IntVec>>();
  for (const auto& e : j.at("edges")) g.edges.push_back({e.at(0).get<int>(), e.at(1).get<int>(), e.at(2).get<int>()});
  return g;
}

inline std::string to_dot(const CrystalGraph& g) {
  std::string out = "digraph crystal {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out += "  n" + std::to_string(i) + " [label=\"" + join(g.nodes[i]) + "\"];\n";
  for (const auto& e : g.edges)
    out += "  n" + std::to_string(e.source) + " -> n" + std::to_string(e.target) + " [label=" + std::to_string(e.color) + "];\n";
  return out + "}\n";
}

}  // namespace crystal::json
