#include "gcoh/groupoid.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace gcoh {

namespace {

std::string arr(int f) { return "arrow " + std::to_string(f); }

}  // namespace

int FiniteGroupoid::compose(int g, int f) const {
  if (g < 0 || g >= num_arrows() || f < 0 || f >= num_arrows())
    throw StructuralError("compose: arrow id out of range");
  int r = compose_table[g][f];
  if (r < 0)
    throw StructuralError("compose undefined for (" + std::to_string(g) +
                          "," + std::to_string(f) + ")");
  return r;
}

void check_size_guard(const FiniteGroupoid& g) {
  if (g.num_objects() > kMaxObjects)
    throw StructuralError("groupoid exceeds the " +
                          std::to_string(kMaxObjects) + "-object guard");
  if (g.num_arrows() > kMaxArrows)
    throw StructuralError("groupoid exceeds the " +
                          std::to_string(kMaxArrows) + "-arrow guard");
}

Report validate_groupoid(const FiniteGroupoid& g) {
  Report r;
  int n_obj = g.num_objects();
  int n_arr = g.num_arrows();
  if (n_obj > kMaxObjects || n_arr > kMaxArrows) {
    r.push_back({"structure", "size guard exceeded (" +
                                  std::to_string(n_obj) + " objects, " +
                                  std::to_string(n_arr) + " arrows)"});
    return r;
  }
  for (int i = 0; i < n_obj; ++i)
    if (g.objects[i] != i) {
      r.push_back({"structure", "objects must be the dense list 0..n-1"});
      return r;
    }
  for (int f = 0; f < n_arr; ++f)
    if (g.src(f) < 0 || g.src(f) >= n_obj || g.tgt(f) < 0 ||
        g.tgt(f) >= n_obj) {
      r.push_back({"structure", arr(f) + " has endpoint out of range"});
      return r;
    }
  if ((int)g.identity.size() != n_obj) {
    r.push_back({"structure", "identity table has wrong length"});
    return r;
  }
  for (int a = 0; a < n_obj; ++a) {
    int e = g.identity[a];
    if (e < 0 || e >= n_arr) {
      r.push_back({"structure", "identity of object " + std::to_string(a) +
                                    " out of range"});
      return r;
    }
    if (g.src(e) != a || g.tgt(e) != a)
      r.push_back({"identity", "identity of object " + std::to_string(a) +
                                   " is not a loop at it"});
  }
  if ((int)g.compose_table.size() != n_arr ||
      std::any_of(g.compose_table.begin(), g.compose_table.end(),
                  [&](const std::vector<int>& row) {
                    return (int)row.size() != n_arr;
                  })) {
    r.push_back({"structure", "compose table has wrong shape"});
    return r;
  }
  if ((int)g.inverse.size() != n_arr) {
    r.push_back({"structure", "inverse table has wrong length"});
    return r;
  }
  for (int f = 0; f < n_arr; ++f)
    if (g.inverse[f] < 0 || g.inverse[f] >= n_arr) {
      r.push_back({"structure", "inverse of " + arr(f) + " out of range"});
      return r;
    }

  for (int v = 0; v < n_arr; ++v)
    for (int u = 0; u < n_arr; ++u) {
      int c = g.compose_table[v][u];
      if (g.composable(v, u)) {
        if (c < 0) {
          r.push_back({"composition", "compose undefined on composable pair (" +
                                          std::to_string(v) + "," +
                                          std::to_string(u) + ")"});
        } else if (c >= n_arr) {
          r.push_back({"structure", "compose out of range at (" +
                                        std::to_string(v) + "," +
                                        std::to_string(u) + ")"});
        } else if (g.src(c) != g.src(u) || g.tgt(c) != g.tgt(v)) {
          r.push_back({"composition",
                       "compose has wrong endpoints at (" + std::to_string(v) +
                           "," + std::to_string(u) + ")"});
        }
      } else if (c != -1) {
        r.push_back({"composition",
                     "compose defined on non-composable pair (" +
                         std::to_string(v) + "," + std::to_string(u) + ")"});
      }
    }
  if (!r.empty()) return r;  // later laws assume a well-shaped table

  for (int f = 0; f < n_arr; ++f) {
    if (g.compose_table[f][g.identity[g.src(f)]] != f)
      r.push_back({"identity", arr(f) + " * id != " + arr(f)});
    if (g.compose_table[g.identity[g.tgt(f)]][f] != f)
      r.push_back({"identity", "id * " + arr(f) + " != " + arr(f)});
  }
  for (int w = 0; w < n_arr; ++w)
    for (int v = 0; v < n_arr; ++v) {
      if (!g.composable(w, v)) continue;
      for (int u = 0; u < n_arr; ++u) {
        if (!g.composable(v, u)) continue;
        if (g.compose_table[g.compose_table[w][v]][u] !=
            g.compose_table[w][g.compose_table[v][u]])
          r.push_back({"associativity",
                       "associativity fails at (" + std::to_string(w) + "," +
                           std::to_string(v) + "," + std::to_string(u) + ")"});
      }
    }
  for (int f = 0; f < n_arr; ++f) {
    int i = g.inverse[f];
    if (g.src(i) != g.tgt(f) || g.tgt(i) != g.src(f)) {
      r.push_back({"inverse", "inverse of " + arr(f) + " has wrong endpoints"});
      continue;
    }
    if (g.compose_table[i][f] != g.identity[g.src(f)] ||
        g.compose_table[f][i] != g.identity[g.tgt(f)])
      r.push_back({"inverse", "inverse law fails for " + arr(f)});
  }
  return r;
}

std::vector<std::pair<int, int>> composable_pairs(const FiniteGroupoid& g) {
  std::vector<std::pair<int, int>> out;
  for (int v = 0; v < g.num_arrows(); ++v)
    for (int u = 0; u < g.num_arrows(); ++u)
      if (g.composable(v, u)) out.push_back({v, u});
  return out;
}

VertexGroup vertex_group(const FiniteGroupoid& g, int object) {
  check_size_guard(g);
  if (object < 0 || object >= g.num_objects())
    throw StructuralError("vertex_group: unknown object " +
                          std::to_string(object));
  VertexGroup vg;
  vg.arrow_of_element.push_back(g.identity[object]);
  for (int f = 0; f < g.num_arrows(); ++f)
    if (g.src(f) == object && g.tgt(f) == object && f != g.identity[object])
      vg.arrow_of_element.push_back(f);
  int n = (int)vg.arrow_of_element.size();
  std::vector<int> element_of(g.num_arrows(), -1);
  for (int i = 0; i < n; ++i) element_of[vg.arrow_of_element[i]] = i;
  vg.group.order = n;
  vg.group.label = "vertex@" + std::to_string(object);
  vg.group.table.assign(n, std::vector<int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int c = g.compose_table[vg.arrow_of_element[i]][vg.arrow_of_element[j]];
      if (c < 0 || element_of[c] < 0)
        throw StructuralError("vertex_group: loops not closed under compose");
      vg.group.table[i][j] = element_of[c];
    }
  return vg;
}

std::vector<int> connected_components(const FiniteGroupoid& g) {
  std::vector<int> parent(g.num_objects());
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<int>* p = &parent;
  std::function<int(int)> find = [&](int x) {
    while ((*p)[x] != x) x = (*p)[x] = (*p)[(*p)[x]];
    return x;
  };
  for (int f = 0; f < g.num_arrows(); ++f) {
    int a = find(g.src(f)), b = find(g.tgt(f));
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<int> block(g.num_objects());
  std::vector<int> rename(g.num_objects(), -1);
  int next = 0;
  for (int a = 0; a < g.num_objects(); ++a) {
    int root = find(a);
    if (rename[root] < 0) rename[root] = next++;
    block[a] = rename[root];
  }
  return block;
}

FiniteGroupoid groupoid_from_group(const FiniteGroup& g) {
  FiniteGroupoid out;
  out.objects = {0};
  out.arrows.assign(g.order, {0, 0});
  out.identity = {0};
  out.compose_table = g.table;
  out.inverse.resize(g.order);
  for (int a = 0; a < g.order; ++a) {
    int i = g.inv(a);
    if (i < 0) throw StructuralError("groupoid_from_group: not a group table");
    out.inverse[a] = i;
  }
  return out;
}

FiniteGroupoid interval_groupoid() {
  FiniteGroupoid g;
  g.objects = {0, 1};
  g.arrows = {{0, 0}, {1, 1}, {0, 1}, {1, 0}};
  g.identity = {0, 1};
  g.compose_table.assign(4, std::vector<int>(4, -1));
  auto set = [&](int v, int u, int r) { g.compose_table[v][u] = r; };
  set(0, 0, 0);
  set(1, 1, 1);
  set(2, 0, 2);  // a * id0 = a
  set(1, 2, 2);  // id1 * a = a
  set(3, 1, 3);
  set(0, 3, 3);
  set(3, 2, 0);  // a^-1 * a = id0
  set(2, 3, 1);  // a * a^-1 = id1
  g.inverse = {0, 1, 3, 2};
  return g;
}

FiniteGroupoid discrete_groupoid(int n) {
  FiniteGroupoid g;
  g.objects.resize(n);
  std::iota(g.objects.begin(), g.objects.end(), 0);
  g.arrows.resize(n);
  g.identity.resize(n);
  for (int a = 0; a < n; ++a) {
    g.arrows[a] = {a, a};
    g.identity[a] = a;
  }
  g.compose_table.assign(n, std::vector<int>(n, -1));
  for (int a = 0; a < n; ++a) g.compose_table[a][a] = a;
  g.inverse.resize(n);
  std::iota(g.inverse.begin(), g.inverse.end(), 0);
  return g;
}

FiniteGroupoid disjoint_union(const FiniteGroupoid& a,
                              const FiniteGroupoid& b) {
  FiniteGroupoid g;
  int no = a.num_objects(), na = a.num_arrows();
  g.objects.resize(no + b.num_objects());
  std::iota(g.objects.begin(), g.objects.end(), 0);
  g.arrows = a.arrows;
  for (const auto& ar : b.arrows) g.arrows.push_back({ar.src + no, ar.tgt + no});
  g.identity = a.identity;
  for (int e : b.identity) g.identity.push_back(e + na);
  int n = na + b.num_arrows();
  g.compose_table.assign(n, std::vector<int>(n, -1));
  for (int v = 0; v < na; ++v)
    for (int u = 0; u < na; ++u) g.compose_table[v][u] = a.compose_table[v][u];
  for (int v = 0; v < b.num_arrows(); ++v)
    for (int u = 0; u < b.num_arrows(); ++u) {
      int c = b.compose_table[v][u];
      g.compose_table[v + na][u + na] = c < 0 ? -1 : c + na;
    }
  g.inverse = a.inverse;
  for (int i : b.inverse) g.inverse.push_back(i + na);
  return g;
}

}  // namespace gcoh
