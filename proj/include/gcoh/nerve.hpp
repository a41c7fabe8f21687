#ifndef GCOH_NERVE_HPP
#define GCOH_NERVE_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gcoh/cocycle.hpp"
#include "gcoh/common.hpp"
#include "gcoh/groupoid.hpp"
#include "gcoh/two_groupoid.hpp"

namespace gcoh {

// What a compatible quadruple of 2-simplices (a 3-boundary) must satisfy in
// dimension 3: nothing, at most one filler (boundaries determine 3-simplices),
// or exactly one filler (nerves of 1-categories).
enum class FillerRule { none, unique, exact };

// Simplicial set truncated at dimension 3, faces and degeneracies as tables.
// faces_n[x][i] = d_i(x), degen_n[x][i] = s_i(x).
struct TruncatedSimplicialSet {
  std::array<int, 4> counts{0, 0, 0, 0};
  std::vector<std::array<int, 2>> faces1;
  std::vector<std::array<int, 3>> faces2;
  std::vector<std::array<int, 4>> faces3;
  std::vector<std::array<int, 1>> degen0;
  std::vector<std::array<int, 2>> degen1;
  std::vector<std::array<int, 3>> degen2;
  FillerRule filler = FillerRule::none;

  bool operator==(const TruncatedSimplicialSet&) const = default;
};

// All simplicial identities (face-face, face-degeneracy,
// degeneracy-degeneracy) plus the declared filler rule.
Report validate_simplicial(const TruncatedSimplicialSet& s);

// Nerve of a groupoid: n-simplices are composable n-chains, stored with
// dictionaries back to the chains.  two_chain[x] = (e1, e2) with e1 the
// (0,1)-edge; three_chain likewise.  Exactly-one-filler coskeletality.
struct GroupoidNerve {
  FiniteGroupoid groupoid;
  TruncatedSimplicialSet sset;
  std::vector<std::pair<int, int>> two_chain;
  std::map<std::pair<int, int>, int> two_chain_index;
  std::vector<std::array<int, 3>> three_chain;
  std::map<std::array<int, 3>, int> three_chain_index;
};
GroupoidNerve nerve_of_groupoid(const FiniteGroupoid& g);

// Nerve of the Aut 2-groupoid: 0-simplices are the family objects,
// 1-simplices the 1-cells, 2-simplices the triangles (f, g; w) with
// (0,1)-edge f, (1,2)-edge g and a 2-cell with witness w from the long edge
// h to the composite g*f (h is determined), 3-simplices the commutative
// tetrahedra keyed by spine (f, g, m) and witnesses (beta, rho, lambda) of
// the d3, d0, d2 faces; the d1 witness phi is forced by the commutativity
// equation m(beta) * phi = rho * lambda.  Boundary-determines-filler
// coskeletality.
struct AutNerve {
  AutTwoGroupoid aut;
  TruncatedSimplicialSet sset;

  struct Tri {
    int f = 0, g = 0, h = 0;  // one-cell ids of the three edges
    int w = 0;                // witness in the target group of g
    bool operator==(const Tri&) const = default;
  };
  std::vector<Tri> tris;
  std::map<std::array<int, 3>, int> tri_index;  // (f, g, w)

  struct Tet {
    int f = 0, g = 0, m = 0;                    // spine one-cells
    int beta = 0, rho = 0, lambda = 0, phi = 0; // face witnesses
    int h = 0, l = 0, k = 0;                    // derived diagonal one-cells
    bool operator==(const Tet&) const = default;
  };
  std::vector<Tet> tets;
  std::map<std::array<int, 6>, int> tet_index;  // (f, g, m, beta, rho, lambda)
};
AutNerve nerve_of_aut(const AutTwoGroupoid& a);

// Level-wise map commuting with faces and degeneracies; carries both ends.
struct SimplicialMap {
  TruncatedSimplicialSet source;
  TruncatedSimplicialSet target;
  std::array<std::vector<int>, 4> level;

  bool operator==(const SimplicialMap&) const = default;
};

Report validate_simplicial_map(const SimplicialMap& m);

// The dictionary between weak actions and simplicial maps of nerves:
// level 0 is the object indexing, level 1 sends u to the 1-cell of F(u),
// level 2 sends the chain (e1, e2) to the triangle (F(e1), F(e2); sigma(e2,e1)),
// level 3 is forced.
SimplicialMap cocycle_to_map(const WeakAction& w, const GroupoidNerve& gn,
                             const AutNerve& an);
SimplicialMap cocycle_to_map(const WeakAction& w);
WeakAction map_to_cocycle(const SimplicialMap& m, const GroupoidNerve& gn,
                          const AutNerve& an);

// Homotopy from `from` to `to`: comp[n][i] is the component h_i on
// n-simplices (0 <= i <= n <= 2), with d_0 h_0 = to and d_{n+1} h_n = from.
// Normalized: h_0 sends 0-simplices to degenerate 1-simplices.
struct SimplicialHomotopy {
  SimplicialMap from;
  SimplicialMap to;
  std::array<std::array<std::vector<int>, 3>, 3> comp;

  bool operator==(const SimplicialHomotopy&) const = default;
};

Report validate_homotopy(const SimplicialHomotopy& h);

// The prism decomposition of a morphism of weak actions: a valid normalized
// homotopy cocycle_to_map(source) => cocycle_to_map(target) whose arrow
// components insert the 2-cell with witness tau(u).
SimplicialHomotopy homotopy_from_morphism(const ActionMorphism& m);

// Exhaustive search for a normalized homotopy from m1 to m2 over
// combinatorial data at dimensions <= 2, in deterministic order.
std::optional<SimplicialHomotopy> normalized_homotopic(const SimplicialMap& m1,
                                                       const SimplicialMap& m2,
                                                       Budget& budget);

// Raw enumeration of simplicial maps with the object-indexing level 0,
// independent of the cocycle dictionary.
std::vector<SimplicialMap> enumerate_simplicial_maps(const GroupoidNerve& gn,
                                                     const AutNerve& an,
                                                     Budget& budget);

// The representation statement made executable: maps obtained from cocycles,
// partitioned by normalized homotopy (searched combinatorially), match the
// cohomology classes; raw map enumeration confirms the dictionary is onto.
struct RepresentationReport {
  int h2_classes = 0;
  int map_classes = 0;
  bool raw_enumeration_matches = true;
  bool partitions_agree = true;
  bool symmetric = true;
  std::vector<int> matching;  // h2 class -> homotopy class
  std::vector<std::string> notes;

  bool ok() const {
    return h2_classes == map_classes && raw_enumeration_matches &&
           partitions_agree && symmetric;
  }
};
RepresentationReport representation_check(const FiniteGroupoid& base,
                                          const GroupFamily& family,
                                          Budget& budget);

}  // namespace gcoh

#endif
