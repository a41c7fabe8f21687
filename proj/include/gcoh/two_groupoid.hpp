#ifndef GCOH_TWO_GROUPOID_HPP
#define GCOH_TWO_GROUPOID_HPP

#include <map>
#include <vector>

#include "gcoh/common.hpp"
#include "gcoh/family.hpp"
#include "gcoh/group.hpp"

namespace gcoh {

// 2-cell between group isomorphisms: the pair (f, alpha) with f = domain
// 1-cell and alpha an element of the target group.  Its codomain is the
// conjugate u |-> alpha * f(u) * alpha^-1.
struct TwoCell {
  GroupIso dom;
  int witness = 0;

  bool operator==(const TwoCell&) const = default;
};

Report validate_two_cell(const TwoCell& c);
TwoCell identity_two_cell(const GroupIso& f);
GroupIso two_cell_codomain(const TwoCell& c);

// Vertical composition (same hom-category): requires dom(second) == cod(first);
// witness is second.witness * first.witness.
TwoCell vcompose(const TwoCell& second, const TwoCell& first);

// Horizontal composition: first lives in Gp(G1,G2), second in Gp(G2,G3);
// result (second.dom o first.dom, second.witness * second.dom(first.witness)).
TwoCell hcompose(const TwoCell& second, const TwoCell& first);

// Inverse in the hom-category: (cod(c), witness^-1).
TwoCell two_cell_vinverse(const TwoCell& c);

// Inverse for horizontal composition: runs from dom^-1 to cod^-1.  The
// witness is computed by both available formulas, dom^-1(w^-1) and
// cod^-1(w^-1); they provably coincide and the function insists they do.
TwoCell two_cell_hinverse(const TwoCell& c);

// Whiskering helpers (horizontal composition with identity 2-cells).
TwoCell whisker_left(const GroupIso& g, const TwoCell& c);   // g * c
TwoCell whisker_right(const TwoCell& c, const GroupIso& f);  // c * f

// --- the 2-groupoid of a family ---------------------------------------------

// Aut of a group family: objects = base objects, 1-cells = all isomorphisms
// between members, 2-cells = all (1-cell, witness) pairs.  Cells are stored
// in canonical order (object pairs ascending, maps lexicographic, witnesses
// ascending), so indices are deterministic.
struct AutTwoGroupoid {
  GroupFamily family;

  struct OneCell {
    int src = 0;
    int tgt = 0;
    std::vector<int> map;
    bool operator==(const OneCell&) const = default;
  };
  struct TwoCellRef {
    int one_cell = 0;
    int witness = 0;
    bool operator==(const TwoCellRef&) const = default;
  };

  std::vector<OneCell> one_cells;
  std::vector<TwoCellRef> two_cells;
  std::map<std::pair<int, int>, std::vector<int>> one_cells_by_ends;
  std::vector<int> identity_one_cell;  // object -> index of id iso

  int num_objects() const { return family.size(); }
  int one_cell_index(int src, int tgt, const std::vector<int>& map) const;
  int two_cell_index(int one_cell, int witness) const;
  int compose_one_cells(int second, int first) const;  // first then second
  int invert_one_cell(int c) const;
  // Apply 1-cell c to an element of its source group.
  int apply_one_cell(int c, int x) const {
    return one_cells[c].map[x];
  }
  GroupIso one_cell_iso(int c) const;
  TwoCell two_cell_value(int t) const;

  bool operator==(const AutTwoGroupoid&) const = default;
};

// Guard: members of the family must have order <= 24.
inline constexpr int kMaxAutGroupOrder = 24;

AutTwoGroupoid build_aut(const GroupFamily& family);

// Sanity checks on the materialized structure (closure, inverses, counts).
Report validate_aut(const AutTwoGroupoid& aut);

}  // namespace gcoh

#endif
