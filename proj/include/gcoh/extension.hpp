#ifndef GCOH_EXTENSION_HPP
#define GCOH_EXTENSION_HPP

#include <optional>
#include <string>
#include <vector>

#include "gcoh/cocycle.hpp"
#include "gcoh/common.hpp"
#include "gcoh/family.hpp"
#include "gcoh/functor.hpp"
#include "gcoh/grothendieck.hpp"
#include "gcoh/groupoid.hpp"

namespace gcoh {

// Extension of a base groupoid by a family of groups: a bijective-on-objects
// opfibration P: total -> base together with an identification of each family
// member with the kernel loops over that object.  kernel_arrows[A][k] is the
// total arrow realizing element k of kernel.at(A); entry 0 is the identity.
struct Extension {
  GroupoidFunctor projection;
  GroupFamily kernel;
  std::vector<std::vector<int>> kernel_arrows;

  bool operator==(const Extension&) const = default;
};

Report validate_extension(const Extension& e);

// The extension carried by a twisted product: projection and kernel arrows
// straight from the construction.
Extension package_extension(const TwistedGroupoid& t, const GroupFamily& kernel);

// Morphism of extensions over a common base and kernel family: a functor of
// the totals commuting with the projections, matching on objects, and equal
// to the identity on every identified kernel element.  Such a functor is
// always invertible; the validator checks that too.
struct ExtensionMorphism {
  Extension source;
  Extension target;
  GroupoidFunctor functor;

  bool operator==(const ExtensionMorphism&) const = default;
};

Report validate_extension_morphism(const ExtensionMorphism& m);

// Exhaustive search in deterministic order: candidates are parameterized by
// the images of the canonical-cleavage lifts of the source, tried in
// ascending order; the first functorial assignment is returned.
std::optional<ExtensionMorphism> find_extension_morphism(const Extension& a,
                                                         const Extension& b,
                                                         Budget& budget);

// Connected components of a pool of extensions under morphism existence
// (an equivalence relation, since extension morphisms are invertible).
struct ExtComponents {
  std::vector<int> class_of;              // pool index -> class
  std::vector<std::vector<int>> classes;  // ordered by least member
};
ExtComponents ext_components(const std::vector<Extension>& pool,
                             Budget& budget);

// Every extension of the base by the family, up to nothing: all composition
// tables on the slot set {(base arrow f, k) : k in K_tgt(f)} that make a
// groupoid fibered over the base, each combined with every identification of
// the family with the kernel vertex groups.  Deterministic order.
std::vector<Extension> enumerate_extensions(const FiniteGroupoid& base,
                                            const GroupFamily& family,
                                            Budget& budget);

// Above this many total arrows interpretation_check stops building its
// default comparison pool by raw table enumeration and uses the twists of
// all cocycles instead.
inline constexpr int kExtensionTableCap = 9;

// The classification statement made executable: twists of cohomology-class
// representatives are pairwise non-connected (injective), every member of a
// class twists into its representative's component (well-defined), and every
// pool extension is connected to exactly one representative (surjective).
struct InterpretationReport {
  int classes = 0;
  int pool_size = 0;
  bool well_defined = true;
  bool injective = true;
  bool surjective = true;
  std::vector<int> pool_class_of;  // pool index -> class, -1 when unmatched
  std::vector<std::string> notes;

  bool ok() const { return well_defined && injective && surjective; }
};

InterpretationReport interpretation_check(const FiniteGroupoid& base,
                                          const GroupFamily& family,
                                          Budget& budget,
                                          const std::vector<Extension>* pool =
                                              nullptr);

}  // namespace gcoh

#endif
