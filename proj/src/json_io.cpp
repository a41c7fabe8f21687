#include "gcoh/json_io.hpp"

#include <array>
#include <vector>

namespace gcoh {

namespace {

using nlohmann::json;

const json& field(const json& j, const char* name) {
  if (!j.is_object())
    throw ParseError(std::string("expected an object carrying '") + name +
                     "'");
  auto it = j.find(name);
  if (it == j.end())
    throw ParseError(std::string("missing field '") + name + "'");
  return *it;
}

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::string as_string(const json& j, const char* what) {
  if (!j.is_string())
    throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

std::vector<int> int_vector(const json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& v : j) out.push_back(as_int(v, what));
  return out;
}

template <std::size_t N>
std::array<int, N> int_fixed(const json& j, const char* what) {
  if (!j.is_array() || j.size() != N)
    throw ParseError(std::string(what) + " must be an array of " +
                     std::to_string(N) + " integers");
  std::array<int, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = as_int(j[i], what);
  return out;
}

std::vector<std::vector<int>> int_matrix(const json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + " must be an array of rows");
  std::vector<std::vector<int>> out;
  out.reserve(j.size());
  for (const json& row : j) out.push_back(int_vector(row, what));
  return out;
}

template <std::size_t N>
std::vector<std::array<int, N>> fixed_rows(const json& j, const char* what) {
  if (!j.is_array())
    throw ParseError(std::string(what) + " must be an array of rows");
  std::vector<std::array<int, N>> out;
  out.reserve(j.size());
  for (const json& row : j) out.push_back(int_fixed<N>(row, what));
  return out;
}

std::pair<int, int> split_pair_key(const std::string& key) {
  auto comma = key.find(',');
  if (comma == std::string::npos || comma == 0 || comma + 1 == key.size())
    throw ParseError("sigma keys must look like \"v,u\"");
  try {
    std::size_t used = 0;
    int v = std::stoi(key, &used);
    if (used != comma) throw ParseError("bad sigma key '" + key + "'");
    int u = std::stoi(key.substr(comma + 1), &used);
    if (comma + 1 + used != key.size())
      throw ParseError("bad sigma key '" + key + "'");
    return {v, u};
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("bad sigma key '" + key + "'");
  }
}

}  // namespace

std::string write_document(const Document& doc) {
  json j;
  j["kind"] = doc.kind;
  j["version"] = kDocumentVersion;
  j["payload"] = doc.payload;
  return j.dump(2) + "\n";
}

Document read_document(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  Document doc;
  doc.kind = as_string(field(j, "kind"), "kind");
  if (as_string(field(j, "version"), "version") != kDocumentVersion)
    throw ParseError("unsupported document version");
  doc.payload = field(j, "payload");
  return doc;
}

nlohmann::json group_to_json(const FiniteGroup& g) {
  json j;
  j["label"] = g.label;
  j["order"] = g.order;
  j["table"] = g.table;
  return j;
}

FiniteGroup group_from_json(const nlohmann::json& j) {
  FiniteGroup g;
  g.label = as_string(field(j, "label"), "label");
  g.order = as_int(field(j, "order"), "order");
  g.table = int_matrix(field(j, "table"), "table");
  return g;
}

nlohmann::json groupoid_to_json(const FiniteGroupoid& g) {
  json j;
  j["objects"] = g.num_objects();
  json src = json::array(), tgt = json::array();
  for (const auto& a : g.arrows) {
    src.push_back(a.src);
    tgt.push_back(a.tgt);
  }
  j["src"] = std::move(src);
  j["tgt"] = std::move(tgt);
  j["identity"] = g.identity;
  j["compose"] = g.compose_table;
  j["inverse"] = g.inverse;
  return j;
}

FiniteGroupoid groupoid_from_json(const nlohmann::json& j) {
  FiniteGroupoid g;
  int n = as_int(field(j, "objects"), "objects");
  if (n < 0) throw ParseError("objects must be non-negative");
  g.objects.resize(n);
  for (int i = 0; i < n; ++i) g.objects[i] = i;
  std::vector<int> src = int_vector(field(j, "src"), "src");
  std::vector<int> tgt = int_vector(field(j, "tgt"), "tgt");
  if (src.size() != tgt.size())
    throw ParseError("src and tgt must have the same length");
  g.arrows.resize(src.size());
  for (std::size_t i = 0; i < src.size(); ++i)
    g.arrows[i] = {src[i], tgt[i]};
  g.identity = int_vector(field(j, "identity"), "identity");
  g.compose_table = int_matrix(field(j, "compose"), "compose");
  g.inverse = int_vector(field(j, "inverse"), "inverse");
  return g;
}

nlohmann::json family_to_json(const GroupFamily& f) {
  json groups = json::array();
  for (const FiniteGroup& g : f.groups) groups.push_back(group_to_json(g));
  json j;
  j["groups"] = std::move(groups);
  return j;
}

GroupFamily family_from_json(const nlohmann::json& j) {
  const json& groups = field(j, "groups");
  if (!groups.is_array()) throw ParseError("groups must be an array");
  std::vector<FiniteGroup> gs;
  gs.reserve(groups.size());
  for (const json& g : groups) gs.push_back(group_from_json(g));
  return make_family(std::move(gs));
}

nlohmann::json functor_to_json(const GroupoidFunctor& f) {
  json j;
  j["domain"] = groupoid_to_json(f.domain);
  j["codomain"] = groupoid_to_json(f.codomain);
  j["object_map"] = f.object_map;
  j["arrow_map"] = f.arrow_map;
  return j;
}

GroupoidFunctor functor_from_json(const nlohmann::json& j) {
  GroupoidFunctor f;
  f.domain = groupoid_from_json(field(j, "domain"));
  f.codomain = groupoid_from_json(field(j, "codomain"));
  f.object_map = int_vector(field(j, "object_map"), "object_map");
  f.arrow_map = int_vector(field(j, "arrow_map"), "arrow_map");
  return f;
}

nlohmann::json cocycle_to_json(const WeakAction& w) {
  json j;
  j["base"] = groupoid_to_json(w.base);
  j["family"] = family_to_json(w.family);
  json f = json::object();
  for (std::size_t u = 0; u < w.action.size(); ++u)
    f[std::to_string(u)] = w.action[u];
  j["F"] = std::move(f);
  json sigma = json::object();
  for (const auto& [vu, value] : w.factor)
    sigma[std::to_string(vu.first) + "," + std::to_string(vu.second)] = value;
  j["sigma"] = std::move(sigma);
  return j;
}

WeakAction cocycle_from_json(const nlohmann::json& j) {
  WeakAction w;
  w.base = groupoid_from_json(field(j, "base"));
  w.family = family_from_json(field(j, "family"));
  const json& f = field(j, "F");
  if (!f.is_object()) throw ParseError("F must be an object keyed by arrow");
  w.action.resize(f.size());
  for (const auto& [key, value] : f.items()) {
    int u = 0;
    try {
      std::size_t used = 0;
      u = std::stoi(key, &used);
      if (used != key.size()) throw ParseError("bad F key '" + key + "'");
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("bad F key '" + key + "'");
    }
    if (u < 0 || u >= (int)w.action.size())
      throw ParseError("F keys must be exactly 0..arrows-1");
    w.action[u] = int_vector(value, "F entry");
  }
  const json& sigma = field(j, "sigma");
  if (!sigma.is_object()) throw ParseError("sigma must be an object");
  for (const auto& [key, value] : sigma.items())
    w.factor[split_pair_key(key)] = as_int(value, "sigma value");
  return w;
}

nlohmann::json cochain_to_json(const Cochain1& t) {
  json j;
  j["base"] = groupoid_to_json(t.base);
  j["family"] = family_to_json(t.family);
  j["tau"] = t.tau;
  return j;
}

Cochain1 cochain_from_json(const nlohmann::json& j) {
  Cochain1 t;
  t.base = groupoid_from_json(field(j, "base"));
  t.family = family_from_json(field(j, "family"));
  t.tau = int_vector(field(j, "tau"), "tau");
  return t;
}

nlohmann::json morphism_to_json(const ActionMorphism& m) {
  json j;
  j["source"] = cocycle_to_json(m.source);
  j["target"] = cocycle_to_json(m.target);
  j["tau"] = m.tau.tau;
  return j;
}

ActionMorphism morphism_from_json(const nlohmann::json& j) {
  ActionMorphism m;
  m.source = cocycle_from_json(field(j, "source"));
  m.target = cocycle_from_json(field(j, "target"));
  m.tau.base = m.source.base;
  m.tau.family = m.source.family;
  m.tau.tau = int_vector(field(j, "tau"), "tau");
  return m;
}

nlohmann::json extension_to_json(const Extension& e) {
  json j;
  j["projection"] = functor_to_json(e.projection);
  j["kernel"] = family_to_json(e.kernel);
  j["kernel_arrows"] = e.kernel_arrows;
  return j;
}

Extension extension_from_json(const nlohmann::json& j) {
  Extension e;
  e.projection = functor_from_json(field(j, "projection"));
  e.kernel = family_from_json(field(j, "kernel"));
  e.kernel_arrows = int_matrix(field(j, "kernel_arrows"), "kernel_arrows");
  return e;
}

nlohmann::json sset_to_json(const TruncatedSimplicialSet& s) {
  json j;
  j["counts"] = s.counts;
  j["faces1"] = s.faces1;
  j["faces2"] = s.faces2;
  j["faces3"] = s.faces3;
  j["degen0"] = s.degen0;
  j["degen1"] = s.degen1;
  j["degen2"] = s.degen2;
  switch (s.filler) {
    case FillerRule::none: j["filler"] = "none"; break;
    case FillerRule::unique: j["filler"] = "unique"; break;
    case FillerRule::exact: j["filler"] = "exact"; break;
  }
  return j;
}

TruncatedSimplicialSet sset_from_json(const nlohmann::json& j) {
  TruncatedSimplicialSet s;
  s.counts = int_fixed<4>(field(j, "counts"), "counts");
  s.faces1 = fixed_rows<2>(field(j, "faces1"), "faces1");
  s.faces2 = fixed_rows<3>(field(j, "faces2"), "faces2");
  s.faces3 = fixed_rows<4>(field(j, "faces3"), "faces3");
  s.degen0 = fixed_rows<1>(field(j, "degen0"), "degen0");
  s.degen1 = fixed_rows<2>(field(j, "degen1"), "degen1");
  s.degen2 = fixed_rows<3>(field(j, "degen2"), "degen2");
  std::string rule = as_string(field(j, "filler"), "filler");
  if (rule == "none")
    s.filler = FillerRule::none;
  else if (rule == "unique")
    s.filler = FillerRule::unique;
  else if (rule == "exact")
    s.filler = FillerRule::exact;
  else
    throw ParseError("filler must be one of none, unique, exact");
  return s;
}

nlohmann::json simplicial_map_to_json(const SimplicialMap& m) {
  json j;
  j["type"] = "simplicial";
  j["source"] = sset_to_json(m.source);
  j["target"] = sset_to_json(m.target);
  j["levels"] = m.level;
  return j;
}

SimplicialMap simplicial_map_from_json(const nlohmann::json& j) {
  if (as_string(field(j, "type"), "type") != "simplicial")
    throw ParseError("map document is not of type simplicial");
  SimplicialMap m;
  m.source = sset_from_json(field(j, "source"));
  m.target = sset_from_json(field(j, "target"));
  const json& levels = field(j, "levels");
  if (!levels.is_array() || levels.size() != 4)
    throw ParseError("levels must be an array of 4 arrays");
  for (int n = 0; n < 4; ++n) m.level[n] = int_vector(levels[n], "levels");
  return m;
}

nlohmann::json cleavage_to_json(const Cleavage& c) {
  json j;
  j["type"] = "cleavage";
  j["fibration"] = functor_to_json(c.fibration);
  j["lift"] = c.lift;
  return j;
}

Cleavage cleavage_from_json(const nlohmann::json& j) {
  if (as_string(field(j, "type"), "type") != "cleavage")
    throw ParseError("map document is not of type cleavage");
  Cleavage c;
  c.fibration = functor_from_json(field(j, "fibration"));
  c.lift = int_vector(field(j, "lift"), "lift");
  return c;
}

nlohmann::json report_to_json(const Report& r) {
  json violations = json::array();
  for (const Violation& v : r) {
    json item;
    item["category"] = v.category;
    item["message"] = v.message;
    violations.push_back(std::move(item));
  }
  json j;
  j["ok"] = r.empty();
  j["violations"] = std::move(violations);
  return j;
}

}  // namespace gcoh
