#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gcoh/json_io.hpp"

using namespace gcoh;

namespace {

std::string corpus_dir() {
  if (const char* env = std::getenv("GCOH_CORPUS")) return env;
#ifdef GCOH_CORPUS
  return GCOH_CORPUS;
#else
  return "corpus";
#endif
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "cannot open " << path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GroupFamily labeled_family(std::vector<FiniteGroup> ks) {
  for (std::size_t i = 0; i < ks.size(); ++i)
    ks[i].label = "K" + std::to_string(i);
  return make_family(std::move(ks));
}

WeakAction sample_cocycle() {
  FiniteGroupoid base = groupoid_from_group(make_cyclic(2));
  GroupFamily fam = labeled_family({make_cyclic(3)});
  Budget budget;
  std::vector<WeakAction> ws = enumerate_cocycles(base, fam, budget);
  REQUIRE(ws.size() == 4);
  return ws[1];
}

}  // namespace

TEST_CASE("documents round trip through text byte-stably") {
  Document doc{"group", group_to_json(make_symmetric3())};
  std::string text = write_document(doc);
  CHECK(text.back() == '\n');
  Document back = read_document(text);
  CHECK(back.kind == "group");
  CHECK(group_from_json(back.payload) == make_symmetric3());
  CHECK(write_document(back) == text);
}

TEST_CASE("value round trips for every payload kind") {
  SUBCASE("group") {
    for (const FiniteGroup& g :
         {make_cyclic(1), make_cyclic(4), make_klein4(), make_symmetric3(),
          make_dihedral(4), make_quaternion8()})
      CHECK(group_from_json(group_to_json(g)) == g);
  }
  SUBCASE("groupoid") {
    for (const FiniteGroupoid& g :
         {groupoid_from_group(make_symmetric3()), interval_groupoid(),
          discrete_groupoid(3),
          disjoint_union(interval_groupoid(),
                         groupoid_from_group(make_cyclic(3)))})
      CHECK(groupoid_from_json(groupoid_to_json(g)) == g);
  }
  SUBCASE("family") {
    GroupFamily f = labeled_family({make_cyclic(3), make_klein4()});
    CHECK(family_from_json(family_to_json(f)) == f);
  }
  SUBCASE("functor") {
    WeakAction w = sample_cocycle();
    GroupoidFunctor p = twist(w).projection;
    CHECK(functor_from_json(functor_to_json(p)) == p);
  }
  SUBCASE("cocycle") {
    WeakAction w = sample_cocycle();
    CHECK(cocycle_from_json(cocycle_to_json(w)) == w);
  }
  SUBCASE("cochain") {
    WeakAction w = sample_cocycle();
    Budget budget;
    for (const Cochain1& t : enumerate_cochains(w.base, w.family, budget))
      CHECK(cochain_from_json(cochain_to_json(t)) == t);
  }
  SUBCASE("morphism") {
    WeakAction w = sample_cocycle();
    ActionMorphism m = identity_morphism(w);
    CHECK(morphism_from_json(morphism_to_json(m)) == m);
  }
  SUBCASE("extension") {
    WeakAction w = sample_cocycle();
    Extension e = package_extension(twist(w), w.family);
    CHECK(extension_from_json(extension_to_json(e)) == e);
  }
  SUBCASE("simplicial set and map") {
    WeakAction w = sample_cocycle();
    SimplicialMap m = cocycle_to_map(w);
    CHECK(sset_from_json(sset_to_json(m.source)) == m.source);
    CHECK(sset_from_json(sset_to_json(m.target)) == m.target);
    CHECK(simplicial_map_from_json(simplicial_map_to_json(m)) == m);
  }
  SUBCASE("cleavage") {
    WeakAction w = sample_cocycle();
    Cleavage c = canonical_cleavage(twist(w).projection);
    CHECK(cleavage_from_json(cleavage_to_json(c)) == c);
  }
}

TEST_CASE("cocycle payload layout: F keyed by arrow, sigma keyed by pairs") {
  WeakAction w = sample_cocycle();
  nlohmann::json j = cocycle_to_json(w);
  REQUIRE(j.contains("F"));
  REQUIRE(j["F"].is_object());
  CHECK(j["F"].size() == 2);
  CHECK(j["F"].contains("0"));
  CHECK(j["F"].contains("1"));
  REQUIRE(j.contains("sigma"));
  CHECK(j["sigma"].is_object());
  CHECK(j["sigma"].contains("1,1"));
  CHECK(j["sigma"].size() == 4);
}

TEST_CASE("read_document rejects malformed input") {
  CHECK_THROWS_AS(read_document("{ this is not json\n"), ParseError);
  CHECK_THROWS_AS(read_document("[1, 2, 3]\n"), ParseError);
  CHECK_THROWS_AS(read_document(R"({"version": "1", "payload": {}})"),
                  ParseError);
  CHECK_THROWS_AS(
      read_document(R"({"kind": "group", "payload": {}})"), ParseError);
  CHECK_THROWS_AS(
      read_document(R"({"kind": "group", "version": "7", "payload": {}})"),
      ParseError);
  CHECK_THROWS_AS(
      read_document(R"({"kind": 3, "version": "1", "payload": {}})"),
      ParseError);
}

TEST_CASE("payload parsers reject missing and ill-typed fields") {
  nlohmann::json good = group_to_json(make_cyclic(3));
  {
    nlohmann::json j = good;
    j.erase("table");
    CHECK_THROWS_AS(group_from_json(j), ParseError);
  }
  {
    nlohmann::json j = good;
    j["order"] = "three";
    CHECK_THROWS_AS(group_from_json(j), ParseError);
  }
  {
    nlohmann::json j = good;
    j["table"] = 5;
    CHECK_THROWS_AS(group_from_json(j), ParseError);
  }
  WeakAction w = sample_cocycle();
  {
    nlohmann::json j = cocycle_to_json(w);
    j["sigma"].erase("1,1");
    j["sigma"]["not a pair"] = 0;
    CHECK_THROWS_AS(cocycle_from_json(j), ParseError);
  }
  {
    nlohmann::json j = cocycle_to_json(w);
    j["F"].erase("1");
    j["F"]["7"] = j["F"]["0"];
    CHECK_THROWS_AS(cocycle_from_json(j), ParseError);
  }
  {
    nlohmann::json j = cocycle_to_json(w);
    j["sigma"]["0,0"] = "zero";
    CHECK_THROWS_AS(cocycle_from_json(j), ParseError);
  }
}

TEST_CASE("corpus documents byte round trip") {
  const std::string dir = corpus_dir();
  const std::vector<std::string> files = {
      "group_z2.json",          "group_z3.json",
      "group_s3.json",          "groupoid_z2.json",
      "groupoid_z3.json",       "groupoid_interval.json",
      "groupoid_disconnected.json",
      "family_z2.json",         "family_z3.json",
      "family_interval_z2_z2.json", "family_interval_z2_z3.json",
      "family_mixed.json",      "cocycle_z2_z2_split.json",
      "cocycle_z2_z2_nonsplit.json", "extension_k4_to_z2.json",
      "extension_z4_to_z2.json", "extension_s3_to_z2.json",
      "cleavage_z4_canonical.json", "invalid_cocycle.json",
  };
  for (const std::string& name : files) {
    std::string text = slurp(dir + "/" + name);
    Document doc = read_document(text);
    CHECK(write_document(doc) == text);
  }
}

TEST_CASE("corpus semantic spot checks") {
  const std::string dir = corpus_dir();
  {
    Document doc = read_document(slurp(dir + "/group_s3.json"));
    REQUIRE(doc.kind == "group");
    FiniteGroup g = group_from_json(doc.payload);
    CHECK(validate_group(g).empty());
    CHECK(same_group(g, make_symmetric3()));
  }
  {
    Document doc = read_document(slurp(dir + "/extension_s3_to_z2.json"));
    REQUIRE(doc.kind == "extension");
    Extension e = extension_from_json(doc.payload);
    CHECK(validate_extension(e).empty());
    CHECK(canonical_table(vertex_group(e.projection.domain, 0).group) ==
          canonical_table(make_symmetric3()));
  }
  {
    Document doc = read_document(slurp(dir + "/invalid_cocycle.json"));
    REQUIRE(doc.kind == "cocycle");
    WeakAction w = cocycle_from_json(doc.payload);
    CHECK(!validate_cocycle(w).empty());
  }
  CHECK_THROWS_AS(read_document(slurp(dir + "/malformed.json")), ParseError);
}
