#ifndef GCOH_JSON_IO_HPP
#define GCOH_JSON_IO_HPP

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gcoh/cocycle.hpp"
#include "gcoh/common.hpp"
#include "gcoh/extension.hpp"
#include "gcoh/family.hpp"
#include "gcoh/functor.hpp"
#include "gcoh/grothendieck.hpp"
#include "gcoh/group.hpp"
#include "gcoh/groupoid.hpp"
#include "gcoh/nerve.hpp"

namespace gcoh {

// Malformed input documents (bad JSON, missing fields, wrong types or
// versions).  Distinct from StructuralError: a document can parse cleanly
// and still describe an object that fails validation.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Every on-disk document is {"kind": ..., "version": "1", "payload": ...}.
inline constexpr const char* kDocumentVersion = "1";

struct Document {
  std::string kind;
  nlohmann::json payload;
};

// Serialize with sorted keys and a trailing newline; byte-stable across runs.
std::string write_document(const Document& doc);
Document read_document(const std::string& text);

nlohmann::json group_to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const nlohmann::json& j);

nlohmann::json groupoid_to_json(const FiniteGroupoid& g);
FiniteGroupoid groupoid_from_json(const nlohmann::json& j);

nlohmann::json family_to_json(const GroupFamily& f);
GroupFamily family_from_json(const nlohmann::json& j);

nlohmann::json functor_to_json(const GroupoidFunctor& f);
GroupoidFunctor functor_from_json(const nlohmann::json& j);

nlohmann::json cocycle_to_json(const WeakAction& w);
WeakAction cocycle_from_json(const nlohmann::json& j);

nlohmann::json cochain_to_json(const Cochain1& t);
Cochain1 cochain_from_json(const nlohmann::json& j);

nlohmann::json morphism_to_json(const ActionMorphism& m);
ActionMorphism morphism_from_json(const nlohmann::json& j);

nlohmann::json extension_to_json(const Extension& e);
Extension extension_from_json(const nlohmann::json& j);

nlohmann::json sset_to_json(const TruncatedSimplicialSet& s);
TruncatedSimplicialSet sset_from_json(const nlohmann::json& j);

nlohmann::json simplicial_map_to_json(const SimplicialMap& m);
SimplicialMap simplicial_map_from_json(const nlohmann::json& j);

nlohmann::json cleavage_to_json(const Cleavage& c);
Cleavage cleavage_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const Report& r);

}  // namespace gcoh

#endif
