#ifndef GCOH_GROUPOID_HPP
#define GCOH_GROUPOID_HPP

#include <utility>
#include <vector>

#include "gcoh/common.hpp"
#include "gcoh/group.hpp"

namespace gcoh {

// Finite groupoid with dense object ids 0..objects-1 and dense arrow ids.
// compose(g, f) means "f first, then g" and is defined iff src(g) == tgt(f).
struct FiniteGroupoid {
  struct Arrow {
    int src = 0;
    int tgt = 0;
    bool operator==(const Arrow&) const = default;
  };

  std::vector<int> objects;                      // always 0..n-1
  std::vector<Arrow> arrows;
  std::vector<int> identity;                     // object -> arrow id
  std::vector<std::vector<int>> compose_table;   // [g][f], -1 when undefined
  std::vector<int> inverse;                      // arrow -> arrow

  int num_objects() const { return (int)objects.size(); }
  int num_arrows() const { return (int)arrows.size(); }
  int src(int f) const { return arrows[f].src; }
  int tgt(int f) const { return arrows[f].tgt; }
  bool composable(int g, int f) const { return src(g) == tgt(f); }
  // Checked composition; throws on undefined pairs.
  int compose(int g, int f) const;
  bool is_identity(int f) const {
    return f == identity[arrows[f].src] && arrows[f].src == arrows[f].tgt;
  }

  bool operator==(const FiniteGroupoid&) const = default;
};

// Desk-scale guard shared by all operations.
inline constexpr int kMaxObjects = 64;
inline constexpr int kMaxArrows = 4096;
void check_size_guard(const FiniteGroupoid& g);

Report validate_groupoid(const FiniteGroupoid& g);

// Composable pairs (v, u) with src(v) == tgt(u) ("u first, then v"),
// sorted lexicographically by (v, u).
std::vector<std::pair<int, int>> composable_pairs(const FiniteGroupoid& g);

// Vertex group at an object: loops based at it, identity arrow as element 0,
// remaining loops in ascending arrow order.
struct VertexGroup {
  FiniteGroup group;
  std::vector<int> arrow_of_element;  // element -> arrow id
};
VertexGroup vertex_group(const FiniteGroupoid& g, int object);

// Connected components: block id per object, blocks numbered by least member.
std::vector<int> connected_components(const FiniteGroupoid& g);

// --- builders ---------------------------------------------------------------

// One-object groupoid whose arrows are the group elements.
FiniteGroupoid groupoid_from_group(const FiniteGroup& g);

// Two objects, one arrow in each direction besides identities
// (arrow 2: 0 -> 1, arrow 3: 1 -> 0).
FiniteGroupoid interval_groupoid();

// n objects, identity arrows only.
FiniteGroupoid discrete_groupoid(int n);

// Disjoint union; objects and arrows of `b` are shifted after those of `a`.
FiniteGroupoid disjoint_union(const FiniteGroupoid& a,
                              const FiniteGroupoid& b);

}  // namespace gcoh

#endif
