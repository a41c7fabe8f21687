#include "gcoh/group.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gcoh {

namespace {

std::string cell(int a, int b) {
  std::ostringstream os;
  os << "(" << a << "," << b << ")";
  return os.str();
}

}  // namespace

int FiniteGroup::inv(int a) const {
  for (int b = 0; b < order; ++b)
    if (table[a][b] == 0 && table[b][a] == 0) return b;
  return -1;
}

bool same_group(const FiniteGroup& a, const FiniteGroup& b) {
  return a.order == b.order && a.table == b.table;
}

Report validate_group(const FiniteGroup& g) {
  Report r;
  if (g.order <= 0) {
    r.push_back({"structure", "order must be positive"});
    return r;
  }
  if ((int)g.table.size() != g.order) {
    r.push_back({"structure", "table has " + std::to_string(g.table.size()) +
                                  " rows, expected " +
                                  std::to_string(g.order)});
    return r;
  }
  for (int a = 0; a < g.order; ++a) {
    if ((int)g.table[a].size() != g.order) {
      r.push_back({"structure", "row " + std::to_string(a) + " has " +
                                    std::to_string(g.table[a].size()) +
                                    " entries, expected " +
                                    std::to_string(g.order)});
      return r;
    }
    for (int b = 0; b < g.order; ++b)
      if (g.table[a][b] < 0 || g.table[a][b] >= g.order) {
        r.push_back({"structure",
                     "entry out of range at " + cell(a, b)});
        return r;
      }
  }
  for (int b = 0; b < g.order; ++b)
    if (g.table[0][b] != b)
      r.push_back({"identity", "0 is not a left identity at " + cell(0, b)});
  for (int a = 0; a < g.order; ++a)
    if (g.table[a][0] != a)
      r.push_back({"identity", "0 is not a right identity at " + cell(a, 0)});
  for (int a = 0; a < g.order; ++a) {
    std::vector<bool> seen(g.order, false);
    for (int b = 0; b < g.order; ++b) {
      if (seen[g.table[a][b]])
        r.push_back({"cancellation",
                     "row " + std::to_string(a) + " is not a permutation (" +
                         cell(a, b) + ")"});
      seen[g.table[a][b]] = true;
    }
  }
  for (int b = 0; b < g.order; ++b) {
    std::vector<bool> seen(g.order, false);
    for (int a = 0; a < g.order; ++a) {
      if (seen[g.table[a][b]])
        r.push_back({"cancellation",
                     "column " + std::to_string(b) +
                         " is not a permutation (" + cell(a, b) + ")"});
      seen[g.table[a][b]] = true;
    }
  }
  for (int a = 0; a < g.order; ++a)
    for (int b = 0; b < g.order; ++b)
      for (int c = 0; c < g.order; ++c)
        if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]])
          r.push_back({"associativity",
                       "associativity fails at (" + std::to_string(a) + "," +
                           std::to_string(b) + "," + std::to_string(c) + ")"});
  return r;
}

FiniteGroup make_cyclic(int n, std::string label) {
  if (n <= 0) throw StructuralError("cyclic group order must be positive");
  FiniteGroup g;
  g.order = n;
  g.label = label.empty() ? ("Z" + std::to_string(n)) : label;
  g.table.assign(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
  return g;
}

FiniteGroup make_direct_product(const FiniteGroup& a, const FiniteGroup& b,
                                std::string label) {
  FiniteGroup g;
  g.order = a.order * b.order;
  g.label = label.empty() ? (a.label + "x" + b.label) : label;
  g.table.assign(g.order, std::vector<int>(g.order));
  auto idx = [&](int x, int y) { return x * b.order + y; };
  for (int x1 = 0; x1 < a.order; ++x1)
    for (int y1 = 0; y1 < b.order; ++y1)
      for (int x2 = 0; x2 < a.order; ++x2)
        for (int y2 = 0; y2 < b.order; ++y2)
          g.table[idx(x1, y1)][idx(x2, y2)] =
              idx(a.table[x1][x2], b.table[y1][y2]);
  return g;
}

FiniteGroup make_symmetric3(std::string label) {
  // Permutations of {0,1,2} in lexicographic order; element 0 is the identity.
  const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                           {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
  auto find = [&](const int p[3]) {
    for (int i = 0; i < 6; ++i)
      if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
        return i;
    return -1;
  };
  FiniteGroup g;
  g.order = 6;
  g.label = std::move(label);
  g.table.assign(6, std::vector<int>(6));
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) {
      int p[3];
      for (int x = 0; x < 3; ++x) p[x] = perms[a][perms[b][x]];  // b then a
      g.table[a][b] = find(p);
    }
  return g;
}

FiniteGroup make_dihedral(int n, std::string label) {
  if (n < 1) throw StructuralError("dihedral parameter must be >= 1");
  // Elements (i, e) = r^i s^e, index i + e*n; (i,e)*(j,f) = (i + (-1)^e j, e+f).
  FiniteGroup g;
  g.order = 2 * n;
  g.label = label.empty() ? ("D" + std::to_string(n)) : label;
  g.table.assign(g.order, std::vector<int>(g.order));
  auto idx = [&](int i, int e) { return ((i % n + n) % n) + e * n; };
  for (int i = 0; i < n; ++i)
    for (int e = 0; e < 2; ++e)
      for (int j = 0; j < n; ++j)
        for (int f = 0; f < 2; ++f)
          g.table[idx(i, e)][idx(j, f)] =
              idx(e == 0 ? i + j : i - j, (e + f) % 2);
  return g;
}

FiniteGroup make_quaternion8(std::string label) {
  // Units ordered [1, i, j, k]; element index = 2*unit + (sign < 0).
  // unit_mul[u][v] = (unit, sign) of the product.
  const int unit_mul[4][4][2] = {
      {{0, 1}, {1, 1}, {2, 1}, {3, 1}},
      {{1, 1}, {0, -1}, {3, 1}, {2, -1}},
      {{2, 1}, {3, -1}, {0, -1}, {1, 1}},
      {{3, 1}, {2, 1}, {1, -1}, {0, -1}},
  };
  FiniteGroup g;
  g.order = 8;
  g.label = std::move(label);
  g.table.assign(8, std::vector<int>(8));
  for (int a = 0; a < 8; ++a)
    for (int b = 0; b < 8; ++b) {
      int ua = a / 2, sa = (a % 2) ? -1 : 1;
      int ub = b / 2, sb = (b % 2) ? -1 : 1;
      int u = unit_mul[ua][ub][0];
      int s = unit_mul[ua][ub][1] * sa * sb;
      g.table[a][b] = 2 * u + (s < 0 ? 1 : 0);
    }
  return g;
}

FiniteGroup make_klein4(std::string label) {
  FiniteGroup g = make_direct_product(make_cyclic(2), make_cyclic(2));
  g.label = std::move(label);
  return g;
}

Report validate_group_iso(const GroupIso& iso) {
  Report r;
  if (iso.source.order != iso.target.order) {
    r.push_back({"structure", "source and target orders differ"});
    return r;
  }
  int n = iso.source.order;
  if ((int)iso.map.size() != n) {
    r.push_back({"structure", "map has wrong length"});
    return r;
  }
  std::vector<bool> seen(n, false);
  for (int x = 0; x < n; ++x) {
    if (iso.map[x] < 0 || iso.map[x] >= n) {
      r.push_back({"structure", "map value out of range at " +
                                    std::to_string(x)});
      return r;
    }
    if (seen[iso.map[x]])
      r.push_back({"bijectivity", "map is not injective at " +
                                      std::to_string(x)});
    seen[iso.map[x]] = true;
  }
  if (!iso.map.empty() && iso.map[0] != 0)
    r.push_back({"homomorphism", "identity is not preserved"});
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (iso.map[iso.source.table[a][b]] !=
          iso.target.table[iso.map[a]][iso.map[b]])
        r.push_back({"homomorphism",
                     "multiplicativity fails at " + cell(a, b)});
  return r;
}

GroupIso identity_iso(const FiniteGroup& g) {
  GroupIso iso{g, g, std::vector<int>(g.order)};
  std::iota(iso.map.begin(), iso.map.end(), 0);
  return iso;
}

GroupIso compose_group_iso(const GroupIso& second, const GroupIso& first) {
  if (!same_group(first.target, second.source))
    throw StructuralError("iso composition: middle groups differ");
  GroupIso out{first.source, second.target,
               std::vector<int>(first.source.order)};
  for (int x = 0; x < first.source.order; ++x)
    out.map[x] = second.map[first.map[x]];
  return out;
}

GroupIso invert_group_iso(const GroupIso& iso) {
  GroupIso out{iso.target, iso.source, std::vector<int>(iso.map.size())};
  for (int x = 0; x < (int)iso.map.size(); ++x) out.map[iso.map[x]] = x;
  return out;
}

namespace {

// Shared backtracking core: assigns images in source-element order, trying
// target candidates ascending, propagating product closure.  Visits witnesses
// in lexicographic order of the full map vector.
struct IsoSearch {
  const FiniteGroup& a;
  const FiniteGroup& b;
  std::vector<int> map;        // -1 when unassigned
  std::vector<bool> used;
  std::vector<GroupIso>* sink = nullptr;  // collect all when set
  std::optional<GroupIso> first;
  bool stop_at_first = false;

  IsoSearch(const FiniteGroup& a_, const FiniteGroup& b_) : a(a_), b(b_) {
    map.assign(a.order, -1);
    used.assign(b.order, false);
    map[0] = 0;
    used[0] = true;
  }

  // Force images of all products with both factors assigned; false on clash.
  bool propagate(std::vector<std::pair<int, int>>& trail, int s) {
    std::vector<int> queue = {s};
    while (!queue.empty()) {
      int x = queue.back();
      queue.pop_back();
      for (int y = 0; y < a.order; ++y) {
        if (map[y] < 0) continue;
        for (auto [p, q] : {std::pair{x, y}, std::pair{y, x}}) {
          int sp = a.table[p][q];
          int tp = b.table[map[p]][map[q]];
          if (map[sp] < 0) {
            if (used[tp]) return false;
            map[sp] = tp;
            used[tp] = true;
            trail.push_back({sp, tp});
            queue.push_back(sp);
          } else if (map[sp] != tp) {
            return false;
          }
        }
      }
    }
    return true;
  }

  bool run(int from) {
    int s = -1;
    for (int x = from; x < a.order; ++x)
      if (map[x] < 0) {
        s = x;
        break;
      }
    if (s < 0) {
      GroupIso iso{a, b, map};
      if (sink) sink->push_back(iso);
      if (!first) first = iso;
      return stop_at_first;
    }
    for (int t = 0; t < b.order; ++t) {
      if (used[t]) continue;
      std::vector<std::pair<int, int>> trail;
      map[s] = t;
      used[t] = true;
      trail.push_back({s, t});
      if (propagate(trail, s) && run(s + 1)) return true;
      for (auto [x, y] : trail) {
        map[x] = -1;
        used[y] = false;
      }
    }
    return false;
  }
};

}  // namespace

std::optional<GroupIso> group_iso_search(const FiniteGroup& a,
                                         const FiniteGroup& b) {
  if (a.order != b.order) return std::nullopt;
  IsoSearch search(a, b);
  search.stop_at_first = true;
  search.run(0);
  return search.first;
}

std::vector<GroupIso> all_group_isos(const FiniteGroup& a,
                                     const FiniteGroup& b) {
  std::vector<GroupIso> out;
  if (a.order != b.order) return out;
  IsoSearch search(a, b);
  search.sink = &out;
  search.run(0);
  // Backtracking emits maps in lexicographic order already; keep it explicit.
  std::sort(out.begin(), out.end(),
            [](const GroupIso& x, const GroupIso& y) { return x.map < y.map; });
  return out;
}

std::vector<GroupIso> automorphisms(const FiniteGroup& g) {
  return all_group_isos(g, g);
}

std::vector<std::vector<int>> canonical_table(const FiniteGroup& g) {
  int n = g.order;
  if (n > 9)
    throw StructuralError("canonical_table supports order <= 9 only");
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> best;
  std::vector<std::vector<int>> cand(n, std::vector<int>(n));
  do {
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) cand[perm[x]][perm[y]] = perm[g.table[x][y]];
    if (best.empty() || cand < best) best = cand;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return best;
}

}  // namespace gcoh
