#include "combrec/json_io.h"

#include <string>

#include "combrec/graph_io.h"

namespace combrec {
namespace {

Json SetJson(const VertexSet& s) { return Json(s.members()); }

const Json& Field(const Json& j, const char* key) {
  if (!j.is_object()) throw ParseError("expected a JSON object");
  const auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing field \"") + key + "\"");
  return *it;
}

int IntField(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

VertexSet ReadSet(const Json& v, const char* key) {
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" entries must be arrays");
  std::vector<Vertex> out;
  for (const Json& x : v) {
    if (!x.is_number_integer()) {
      throw ParseError(std::string("\"") + key + "\" must contain vertex indices");
    }
    out.push_back(x.get<Vertex>());
  }
  return VertexSet(std::move(out));
}

std::vector<VertexSet> ReadSets(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::vector<VertexSet> out;
  for (const Json& s : v) out.push_back(ReadSet(s, key));
  return out;
}

std::vector<int> ReadSizes(const Json& j, const char* key) {
  const Json& v = Field(j, key);
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::vector<int> out;
  for (const Json& x : v) {
    if (!x.is_number_integer()) throw ParseError(std::string("\"") + key + "\" must hold integers");
    out.push_back(x.get<int>());
  }
  return out;
}

std::vector<bool> ReadFlags(const Json& v, const char* key) {
  if (!v.is_array()) throw ParseError(std::string("\"") + key + "\" must be an array");
  std::vector<bool> out;
  for (const Json& x : v) {
    if (!x.is_boolean()) throw ParseError(std::string("\"") + key + "\" must hold booleans");
    out.push_back(x.get<bool>());
  }
  return out;
}

}  // namespace

Json ToJson(const CombDecomposition& d) {
  Json j;
  j["n"] = d.n;
  j["l"] = d.l;
  j["k0"] = d.k0;
  for (const char* key : {"A", "X", "M", "Y", "matchings", "thick"}) j[key] = Json::array();
  for (const auto& s : d.A) j["A"].push_back(SetJson(s));
  for (const auto& s : d.X) j["X"].push_back(SetJson(s));
  for (const auto& s : d.M) j["M"].push_back(SetJson(s));
  for (const auto& s : d.Y) j["Y"].push_back(SetJson(s));
  for (const auto& level : d.matchings) {
    Json pairs = Json::array();
    for (const auto& [y, m] : level) pairs.push_back({y, m});
    j["matchings"].push_back(std::move(pairs));
  }
  for (bool t : d.thick) j["thick"].push_back(t);
  return j;
}

CombDecomposition CombFromJson(const Json& j) {
  CombDecomposition d;
  d.n = IntField(j, "n");
  d.l = IntField(j, "l");
  d.k0 = IntField(j, "k0");
  d.A = ReadSets(j, "A");
  d.X = ReadSets(j, "X");
  d.M = ReadSets(j, "M");
  d.Y = ReadSets(j, "Y");
  const Json& levels = Field(j, "matchings");
  if (!levels.is_array()) throw ParseError("\"matchings\" must be an array");
  for (const Json& level : levels) {
    if (!level.is_array()) throw ParseError("\"matchings\" entries must be arrays");
    std::vector<MatchedPair> pairs;
    for (const Json& p : level) {
      if (!p.is_array() || p.size() != 2 || !p[0].is_number_integer() ||
          !p[1].is_number_integer()) {
        throw ParseError("matching pairs must be [y, m] integer pairs");
      }
      pairs.emplace_back(p[0].get<Vertex>(), p[1].get<Vertex>());
    }
    d.matchings.push_back(std::move(pairs));
  }
  if (const auto it = j.find("thick"); it != j.end()) {
    d.thick = ReadFlags(*it, "thick");
  } else if (d.l >= 0) {
    d.thick.assign(static_cast<std::size_t>(d.l), false);
  }
  d.Normalize();
  return d;
}

Json ToJson(const Witness& w) {
  return Json{{"kind", std::string(PatternName(w.kind))}, {"vertices", w.vertices}};
}

Json ToJson(const std::vector<CombViolation>& violations) {
  Json out = Json::array();
  for (const auto& v : violations) {
    out.push_back(Json{{"code", std::string(RuleName(v.rule))},
                       {"vertices", v.vertices},
                       {"detail", v.detail}});
  }
  return out;
}

CombParams ParamsFromJson(const Json& j) {
  CombParams p;
  p.n = IntField(j, "n");
  p.l = IntField(j, "l");
  p.k0 = IntField(j, "k0");
  p.a = ReadSizes(j, "a");
  p.x = ReadSizes(j, "x");
  p.m = ReadSizes(j, "m");
  p.y = ReadSizes(j, "y");
  if (const auto it = j.find("thick"); it != j.end()) p.thick = ReadFlags(*it, "thick");
  if (const auto it = j.find("seed"); it != j.end()) {
    if (!it->is_number_unsigned() && !it->is_number_integer()) {
      throw ParseError("\"seed\" must be an integer");
    }
    p.seed = it->get<std::uint64_t>();
  }
  return p;
}

}  // namespace combrec
