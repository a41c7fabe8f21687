#ifndef GCOH_GROUP_HPP
#define GCOH_GROUP_HPP

#include <optional>
#include <string>
#include <vector>

#include "gcoh/common.hpp"

namespace gcoh {

// Finite group as a full multiplication table.  Element 0 is always the
// identity.  table[a][b] is the product a*b; in groupoid terms a*b means
// "b first, then a", matching compose(g, f) = "f then g" everywhere else.
struct FiniteGroup {
  int order = 0;
  std::vector<std::vector<int>> table;
  std::string label;

  int mul(int a, int b) const { return table[a][b]; }
  int inv(int a) const;  // -1 when the table has no two-sided inverse

  bool operator==(const FiniteGroup&) const = default;
};

// Semantic equality: same order and table, label ignored.
bool same_group(const FiniteGroup& a, const FiniteGroup& b);

Report validate_group(const FiniteGroup& g);

// --- constructors for the small census -------------------------------------

FiniteGroup make_cyclic(int n, std::string label = "");
FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                std::string label = "");
FiniteGroup make_symmetric3(std::string label = "S3");
FiniteGroup make_dihedral(int n, std::string label = "");  // order 2n
FiniteGroup make_quaternion8(std::string label = "Q8");
FiniteGroup make_klein4(std::string label = "Z2xZ2");

// --- isomorphisms -----------------------------------------------------------

// Group isomorphism source -> target, map[x] = image of x.
struct GroupIso {
  FiniteGroup source;
  FiniteGroup target;
  std::vector<int> map;

  int apply(int x) const { return map[x]; }
  bool operator==(const GroupIso&) const = default;
};

Report validate_group_iso(const GroupIso& iso);
GroupIso identity_iso(const FiniteGroup& g);
// second o first (first applied first).
GroupIso compose_group_iso(const GroupIso& second, const GroupIso& first);
GroupIso invert_group_iso(const GroupIso& iso);

// Backtracking over generator images with product-closure propagation.
// Returns the lexicographically least witness map, or nullopt.
std::optional<GroupIso> group_iso_search(const FiniteGroup& a,
                                         const FiniteGroup& b);

// All isomorphisms a -> b, sorted lexicographically by map vector.
std::vector<GroupIso> all_group_isos(const FiniteGroup& a,
                                     const FiniteGroup& b);

std::vector<GroupIso> automorphisms(const FiniteGroup& g);

// Lexicographically least table over all element relabelings fixing 0.
// Used to hash groups up to isomorphism in census checks.
std::vector<std::vector<int>> canonical_table(const FiniteGroup& g);

}  // namespace gcoh

#endif
