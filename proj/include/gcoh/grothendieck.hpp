#ifndef GCOH_GROTHENDIECK_HPP
#define GCOH_GROTHENDIECK_HPP

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gcoh/cocycle.hpp"
#include "gcoh/common.hpp"
#include "gcoh/functor.hpp"
#include "gcoh/groupoid.hpp"

namespace gcoh {

// Twisted-product groupoid of a weak action.  Objects are the base objects;
// arrows are pairs (f, lambda) with lambda in K_tgt(f), ordered
// lexicographically by (f, lambda).  Composition:
//   (g,mu)(f,lambda) = (gf, mu * F(g)(lambda) * sigma(g,f))
// identity at X is (1_X, 0), and
//   (f,lambda)^-1 = (f^-1, (F(f^-1)(lambda) * sigma(f^-1,f))^-1).
struct TwistedGroupoid {
  FiniteGroupoid total;
  GroupoidFunctor projection;                    // total -> base
  std::vector<std::pair<int, int>> arrow_pairs;  // arrow id -> (base arrow, element)
  std::map<std::pair<int, int>, int> arrow_index;
  std::vector<std::vector<int>> kernel_arrows;   // object -> element -> arrow id

  bool operator==(const TwistedGroupoid&) const = default;
};

TwistedGroupoid twist(const WeakAction& w);

// The functor twist(m.source).total -> twist(m.target).total induced by a
// morphism of weak actions: identity on objects, (f, lambda) |->
// (f, lambda * tau(f)^-1).  It commutes with the projections and restricts
// to the identity on every kernel group.
GroupoidFunctor twist_morphism(const ActionMorphism& m);

// Lift-existence check: every (object over X, arrow out of X) must admit a
// lift.  Returns a witness of failure, or nullopt when p is an opfibration.
struct LiftFailure {
  int object = -1;      // object of the domain without a lift
  int base_arrow = -1;  // base arrow that cannot be lifted
};
std::optional<LiftFailure> opfibration_failure(const GroupoidFunctor& p);
bool is_opfibration(const GroupoidFunctor& p);

// Full subgroupoid over one base object: objects over b, arrows over 1_b.
struct FiberResult {
  FiniteGroupoid fiber;
  std::vector<int> object_of;  // fiber object -> domain object
  std::vector<int> arrow_of;   // fiber arrow -> domain arrow
};
FiberResult fiber_subgroupoid(const GroupoidFunctor& p, int b);

// Normalized cleavage of a bijective-on-objects fibration: one chosen lift
// per base arrow, identities lifted to identities.
struct Cleavage {
  GroupoidFunctor fibration;
  std::vector<int> lift;  // base arrow -> domain arrow over it

  bool operator==(const Cleavage&) const = default;
};

Report validate_cleavage(const Cleavage& c);

// lift(identity) = identity arrow, lift(f) = least domain arrow over f.
Cleavage canonical_cleavage(const GroupoidFunctor& p);

// All normalized cleavages, lexicographic in the lift vector.
std::vector<Cleavage> enumerate_normalized_cleavages(const GroupoidFunctor& p,
                                                     Budget& budget);

// The weak action of the base on the kernel groups carved out by a cleavage:
//   F(f) = conjugation by lift(f), sigma(g,f) = lift(g) lift(f) lift(gf)^-1.
// Kernel groups are read off with the identity arrow as element 0 and the
// remaining kernel loops in ascending arrow order.
struct FiberedAction {
  WeakAction action;
  std::vector<std::vector<int>> kernel_arrows;  // base object -> element -> domain arrow
};
FiberedAction fiber_action_full(const GroupoidFunctor& p, const Cleavage& c);
WeakAction fiber_action(const GroupoidFunctor& p, const Cleavage& c);

// Reconstruction functor e |-> (P(e), e * lift(P(e))^-1) from the domain of
// p onto the twisted product of its fiber action; an isomorphism of
// groupoids commuting with the projections.
struct GammaResult {
  WeakAction action;
  TwistedGroupoid twisted;
  GroupoidFunctor functor;  // p.domain -> twisted.total
};
GammaResult gamma(const GroupoidFunctor& p, const Cleavage& c);

// Instance check of the classification equivalence on one bijective-on-objects
// fibration: every normalized cleavage yields a reconstruction isomorphism,
// the extracted actions of any two cleavages are cohomologous with an explicit
// witness, and the twist of an extracted action hands the action back exactly
// under the canonical cleavage.
struct EquivalenceReport {
  int cleavages = 0;
  bool reconstruction_ok = true;
  bool round_trip_ok = true;
  bool cleavage_independent = true;
  std::vector<std::string> notes;

  bool ok() const {
    return reconstruction_ok && round_trip_ok && cleavage_independent;
  }
};
EquivalenceReport equivalence_check(const GroupoidFunctor& p, Budget& budget);

}  // namespace gcoh

#endif
