#ifndef GCOH_COCYCLE_HPP
#define GCOH_COCYCLE_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gcoh/common.hpp"
#include "gcoh/family.hpp"
#include "gcoh/group.hpp"
#include "gcoh/groupoid.hpp"

namespace gcoh {

// Weak action (non-abelian 2-cocycle) of a groupoid on a family of groups:
// per-arrow isomorphisms F(u): K_src(u) -> K_tgt(u) plus factor elements
// sigma(v,u) in K_tgt(v), one per composable pair ("u first, then v").
//
// Validity (validate_cocycle):
//   1. F(identity) = identity iso.
//   2. sigma(v,u) = identity whenever u or v is an identity arrow.
//   3. sigma(v,u) * F(vu)(x) = F(v)(F(u)(x)) * sigma(v,u)   for all x.
//   4. sigma(w,v) * sigma(wv,u) = F(w)(sigma(v,u)) * sigma(w,vu)
//      for all composable triples.
struct WeakAction {
  FiniteGroupoid base;
  GroupFamily family;
  std::vector<std::vector<int>> action;       // arrow -> element map
  std::map<std::pair<int, int>, int> factor;  // (v,u) -> element of K_tgt(v)

  int act(int arrow, int x) const { return action[arrow][x]; }
  int sigma(int v, int u) const;
  GroupIso iso_of(int arrow) const;

  bool operator==(const WeakAction&) const = default;
};

// Normalized 1-cochain: tau(u) in K_tgt(u), tau(identity) = identity.
struct Cochain1 {
  FiniteGroupoid base;
  GroupFamily family;
  std::vector<int> tau;  // arrow -> element of K_tgt(arrow)

  bool operator==(const Cochain1&) const = default;
};

// Morphism of weak actions (coboundary witness): a normalized 1-cochain
// tau with
//   naturality: tau(u) * F1(u)(k) = F2(u)(k) * tau(u),
//   coherence:  F2(v)(tau(u)) * tau(v) * sigma1(v,u) = sigma2(v,u) * tau(vu).
struct ActionMorphism {
  WeakAction source;
  WeakAction target;
  Cochain1 tau;

  bool operator==(const ActionMorphism&) const = default;
};

Report validate_cocycle(const WeakAction& w);
Report validate_cochain(const Cochain1& t);
Report validate_morphism(const ActionMorphism& m);

// F = identity everywhere, sigma = identity elements.  Requires every arrow
// to connect objects carrying literally equal multiplication tables.
WeakAction make_trivial_action(const FiniteGroupoid& base,
                               const GroupFamily& family);

// Checkable theorem: a candidate satisfying conditions 1, 3, 4 with only
// sigma(1,1) = identity pinned at every object is forced to satisfy the full
// normalization sigma(v,1) = sigma(1,u) = identity.  Returns the action
// unchanged on success.  Throws StructuralError when the precondition fails
// and TheoremError when the forcing itself fails.
WeakAction weak_identity_upgrade(const WeakAction& w);

// All (F, sigma) satisfying conditions 1, 3, 4 and sigma(1,1) = identity,
// with sigma left free on the other identity pairs.  Input space for
// exercising weak_identity_upgrade.
std::vector<WeakAction> enumerate_weakly_normalized_candidates(
    const FiniteGroupoid& base, const GroupFamily& family, Budget& budget);

// Coboundary action of a 1-cochain:
//   F2(u) = conj_{tau(u)} . F1(u)
//   sigma2(v,u) = tau(v) * F1(v)(tau(u)) * sigma1(v,u) * tau(vu)^-1
WeakAction nabla(const Cochain1& t, const WeakAction& w);

ActionMorphism identity_morphism(const WeakAction& w);
// Composite tau(u) = tau_second(u) * tau_first(u).
ActionMorphism compose_morphisms(const ActionMorphism& second,
                                 const ActionMorphism& first);
// tau^-1(u) = tau(u)^-1; a valid morphism target -> source.
ActionMorphism invert_morphism(const ActionMorphism& m);

// All normalized 1-cochains, lexicographic in (arrow, value) order.
std::vector<Cochain1> enumerate_cochains(const FiniteGroupoid& base,
                                         const GroupFamily& family,
                                         Budget& budget);

// All valid weak actions in canonical order: lexicographic on the flattened
// F maps (arrows ascending, iso maps in lex order) then flattened sigma.
std::vector<WeakAction> enumerate_cocycles(const FiniteGroupoid& base,
                                           const GroupFamily& family,
                                           Budget& budget);

// Lexicographically least tau with nabla(tau, w1) == w2, if any.
std::optional<Cochain1> cohomologous(const WeakAction& w1,
                                     const WeakAction& w2, Budget& budget);

struct H2Result {
  std::vector<WeakAction> cocycles;      // enumerate_cocycles order
  std::vector<int> class_of;             // cocycle index -> class index
  std::vector<std::vector<int>> classes; // members ascending; classes ordered by least member
  std::vector<int> representatives;      // least member of each class
  std::map<int, Cochain1> witnesses;     // member -> tau with nabla(tau, rep) = member
};

// Connected components of the category of weak actions: the orbit closure of
// the cocycle list under nabla over all normalized 1-cochains.
H2Result h2(const FiniteGroupoid& base, const GroupFamily& family,
            Budget& budget, bool with_witnesses = false);

}  // namespace gcoh

#endif
