#include "gcoh/nerve.hpp"

#include <algorithm>
#include <functional>

namespace gcoh {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw StructuralError(msg);
}

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

bool in_range(int x, int n) { return x >= 0 && x < n; }

}  // namespace

Report validate_simplicial(const TruncatedSimplicialSet& s) {
  Report out;
  auto bad = [&](const std::string& msg) {
    out.push_back({"structure", msg});
  };
  for (int n = 0; n < 4; ++n)
    if (s.counts[n] < 0) bad("negative simplex count");
  if ((int)s.faces1.size() != s.counts[1]) bad("faces1 size mismatch");
  if ((int)s.faces2.size() != s.counts[2]) bad("faces2 size mismatch");
  if ((int)s.faces3.size() != s.counts[3]) bad("faces3 size mismatch");
  if ((int)s.degen0.size() != s.counts[0]) bad("degen0 size mismatch");
  if ((int)s.degen1.size() != s.counts[1]) bad("degen1 size mismatch");
  if ((int)s.degen2.size() != s.counts[2]) bad("degen2 size mismatch");
  if (!out.empty()) return out;
  for (const auto& f : s.faces1)
    for (int v : f)
      if (!in_range(v, s.counts[0])) bad("face of a 1-simplex out of range");
  for (const auto& f : s.faces2)
    for (int v : f)
      if (!in_range(v, s.counts[1])) bad("face of a 2-simplex out of range");
  for (const auto& f : s.faces3)
    for (int v : f)
      if (!in_range(v, s.counts[2])) bad("face of a 3-simplex out of range");
  for (const auto& d : s.degen0)
    for (int v : d)
      if (!in_range(v, s.counts[1])) bad("degeneracy of a 0-simplex out of range");
  for (const auto& d : s.degen1)
    for (int v : d)
      if (!in_range(v, s.counts[2])) bad("degeneracy of a 1-simplex out of range");
  for (const auto& d : s.degen2)
    for (int v : d)
      if (!in_range(v, s.counts[3])) bad("degeneracy of a 2-simplex out of range");
  if (!out.empty()) return out;

  auto check = [&](bool cond, const std::string& name, int x) {
    if (!cond)
      out.push_back({"simplicial",
                     name + " fails at simplex " + std::to_string(x)});
  };

  for (int x = 0; x < s.counts[2]; ++x) {
    const auto& f = s.faces2[x];
    check(s.faces1[f[1]][0] == s.faces1[f[0]][0], "d0 d1 = d0 d0 (dim 2)", x);
    check(s.faces1[f[2]][0] == s.faces1[f[0]][1], "d0 d2 = d1 d0 (dim 2)", x);
    check(s.faces1[f[2]][1] == s.faces1[f[1]][1], "d1 d2 = d1 d1 (dim 2)", x);
  }
  for (int x = 0; x < s.counts[3]; ++x) {
    const auto& f = s.faces3[x];
    check(s.faces2[f[1]][0] == s.faces2[f[0]][0], "d0 d1 = d0 d0 (dim 3)", x);
    check(s.faces2[f[2]][0] == s.faces2[f[0]][1], "d0 d2 = d1 d0 (dim 3)", x);
    check(s.faces2[f[3]][0] == s.faces2[f[0]][2], "d0 d3 = d2 d0 (dim 3)", x);
    check(s.faces2[f[2]][1] == s.faces2[f[1]][1], "d1 d2 = d1 d1 (dim 3)", x);
    check(s.faces2[f[3]][1] == s.faces2[f[1]][2], "d1 d3 = d2 d1 (dim 3)", x);
    check(s.faces2[f[3]][2] == s.faces2[f[2]][2], "d2 d3 = d2 d2 (dim 3)", x);
  }

  for (int x = 0; x < s.counts[0]; ++x) {
    int y = s.degen0[x][0];
    check(s.faces1[y][0] == x, "d0 s0 = id (dim 0)", x);
    check(s.faces1[y][1] == x, "d1 s0 = id (dim 0)", x);
  }
  for (int u = 0; u < s.counts[1]; ++u) {
    int y0 = s.degen1[u][0], y1 = s.degen1[u][1];
    check(s.faces2[y0][0] == u, "d0 s0 = id (dim 1)", u);
    check(s.faces2[y0][1] == u, "d1 s0 = id (dim 1)", u);
    check(s.faces2[y0][2] == s.degen0[s.faces1[u][1]][0], "d2 s0 = s0 d1", u);
    check(s.faces2[y1][1] == u, "d1 s1 = id (dim 1)", u);
    check(s.faces2[y1][2] == u, "d2 s1 = id (dim 1)", u);
    check(s.faces2[y1][0] == s.degen0[s.faces1[u][0]][0], "d0 s1 = s0 d0", u);
  }
  for (int x = 0; x < s.counts[2]; ++x) {
    int y0 = s.degen2[x][0], y1 = s.degen2[x][1], y2 = s.degen2[x][2];
    check(s.faces3[y0][0] == x, "d0 s0 = id (dim 2)", x);
    check(s.faces3[y0][1] == x, "d1 s0 = id (dim 2)", x);
    check(s.faces3[y0][2] == s.degen1[s.faces2[x][1]][0], "d2 s0 = s0 d1", x);
    check(s.faces3[y0][3] == s.degen1[s.faces2[x][2]][0], "d3 s0 = s0 d2", x);
    check(s.faces3[y1][1] == x, "d1 s1 = id (dim 2)", x);
    check(s.faces3[y1][2] == x, "d2 s1 = id (dim 2)", x);
    check(s.faces3[y1][0] == s.degen1[s.faces2[x][0]][0], "d0 s1 = s0 d0", x);
    check(s.faces3[y1][3] == s.degen1[s.faces2[x][2]][1], "d3 s1 = s1 d2", x);
    check(s.faces3[y2][2] == x, "d2 s2 = id (dim 2)", x);
    check(s.faces3[y2][3] == x, "d3 s2 = id (dim 2)", x);
    check(s.faces3[y2][0] == s.degen1[s.faces2[x][0]][1], "d0 s2 = s1 d0", x);
    check(s.faces3[y2][1] == s.degen1[s.faces2[x][1]][1], "d1 s2 = s1 d1", x);
  }

  for (int x = 0; x < s.counts[0]; ++x) {
    int y = s.degen0[x][0];
    check(s.degen1[y][0] == s.degen1[y][1], "s0 s0 = s1 s0 (dim 0)", x);
  }
  for (int u = 0; u < s.counts[1]; ++u) {
    int y0 = s.degen1[u][0], y1 = s.degen1[u][1];
    check(s.degen2[y0][0] == s.degen2[y0][1], "s0 s0 = s1 s0 (dim 1)", u);
    check(s.degen2[y1][0] == s.degen2[y0][2], "s0 s1 = s2 s0 (dim 1)", u);
    check(s.degen2[y1][1] == s.degen2[y1][2], "s1 s1 = s2 s1 (dim 1)", u);
  }
  if (!out.empty()) return out;

  if (s.filler != FillerRule::none) {
    std::map<std::array<int, 4>, int> fillers;
    for (int t = 0; t < s.counts[3]; ++t) ++fillers[s.faces3[t]];
    for (const auto& [bd, c] : fillers)
      if (c > 1) {
        out.push_back({"filler", "a 3-boundary has " + std::to_string(c) +
                                     " distinct fillers"});
        break;
      }
  }
  if (s.filler == FillerRule::exact) {
    std::map<std::array<int, 4>, int> fillers;
    for (int t = 0; t < s.counts[3]; ++t) ++fillers[s.faces3[t]];
    std::map<int, std::vector<int>> by_d2;
    std::map<std::array<int, 2>, std::vector<int>> by_d0d2;
    std::map<std::array<int, 3>, std::vector<int>> by_d0d1d2;
    for (int t = 0; t < s.counts[2]; ++t) {
      const auto& f = s.faces2[t];
      by_d2[f[2]].push_back(t);
      by_d0d2[{f[0], f[2]}].push_back(t);
      by_d0d1d2[{f[0], f[1], f[2]}].push_back(t);
    }
    bool missing = false;
    for (int t3 = 0; t3 < s.counts[2] && !missing; ++t3) {
      for (int t0 : by_d2[s.faces2[t3][0]]) {
        auto i1 = by_d0d2.find({s.faces2[t0][0], s.faces2[t3][1]});
        if (i1 == by_d0d2.end()) continue;
        for (int t1 : i1->second) {
          auto i2 = by_d0d1d2.find(
              {s.faces2[t0][1], s.faces2[t1][1], s.faces2[t3][2]});
          if (i2 == by_d0d1d2.end()) continue;
          for (int t2 : i2->second)
            if (!fillers.count({t0, t1, t2, t3})) {
              out.push_back({"filler",
                             "compatible 3-boundary (" + std::to_string(t0) +
                                 "," + std::to_string(t1) + "," +
                                 std::to_string(t2) + "," + std::to_string(t3) +
                                 ") has no filler"});
              missing = true;
              break;
            }
          if (missing) break;
        }
        if (missing) break;
      }
    }
  }
  return out;
}

GroupoidNerve nerve_of_groupoid(const FiniteGroupoid& g) {
  {
    Report r = validate_groupoid(g);
    if (!r.empty())
      throw StructuralError("nerve_of_groupoid: invalid groupoid (" +
                            r.front().message + ")");
  }
  GroupoidNerve out;
  out.groupoid = g;
  TruncatedSimplicialSet& s = out.sset;
  s.filler = FillerRule::exact;
  s.counts[0] = g.num_objects();
  s.counts[1] = g.num_arrows();
  s.faces1.resize(g.num_arrows());
  for (int u = 0; u < g.num_arrows(); ++u) s.faces1[u] = {g.tgt(u), g.src(u)};
  s.degen0.resize(g.num_objects());
  for (int x = 0; x < g.num_objects(); ++x) s.degen0[x] = {g.identity[x]};

  for (int e1 = 0; e1 < g.num_arrows(); ++e1)
    for (int e2 = 0; e2 < g.num_arrows(); ++e2) {
      if (!g.composable(e2, e1)) continue;
      out.two_chain_index[{e1, e2}] = (int)out.two_chain.size();
      out.two_chain.push_back({e1, e2});
    }
  s.counts[2] = (int)out.two_chain.size();
  s.faces2.resize(s.counts[2]);
  for (int x = 0; x < s.counts[2]; ++x) {
    auto [e1, e2] = out.two_chain[x];
    s.faces2[x] = {e2, g.compose(e2, e1), e1};
  }
  s.degen1.resize(g.num_arrows());
  for (int u = 0; u < g.num_arrows(); ++u)
    s.degen1[u] = {out.two_chain_index.at({g.identity[g.src(u)], u}),
                   out.two_chain_index.at({u, g.identity[g.tgt(u)]})};

  for (int e1 = 0; e1 < g.num_arrows(); ++e1)
    for (int e2 = 0; e2 < g.num_arrows(); ++e2) {
      if (!g.composable(e2, e1)) continue;
      for (int e3 = 0; e3 < g.num_arrows(); ++e3) {
        if (!g.composable(e3, e2)) continue;
        out.three_chain_index[{e1, e2, e3}] = (int)out.three_chain.size();
        out.three_chain.push_back({e1, e2, e3});
      }
    }
  s.counts[3] = (int)out.three_chain.size();
  s.faces3.resize(s.counts[3]);
  for (int x = 0; x < s.counts[3]; ++x) {
    auto [e1, e2, e3] = out.three_chain[x];
    s.faces3[x] = {out.two_chain_index.at({e2, e3}),
                   out.two_chain_index.at({g.compose(e2, e1), e3}),
                   out.two_chain_index.at({e1, g.compose(e3, e2)}),
                   out.two_chain_index.at({e1, e2})};
  }
  s.degen2.resize(s.counts[2]);
  for (int x = 0; x < s.counts[2]; ++x) {
    auto [e1, e2] = out.two_chain[x];
    s.degen2[x] = {
        out.three_chain_index.at({g.identity[g.src(e1)], e1, e2}),
        out.three_chain_index.at({e1, g.identity[g.tgt(e1)], e2}),
        out.three_chain_index.at({e1, e2, g.identity[g.tgt(e2)]})};
  }

  Report r = validate_simplicial(s);
  if (!r.empty())
    throw TheoremError("nerve_of_groupoid: constructed nerve is invalid (" +
                       r.front().category + ": " + r.front().message + ")");
  return out;
}

AutNerve nerve_of_aut(const AutTwoGroupoid& a) {
  {
    Report r = validate_aut(a);
    if (!r.empty())
      throw StructuralError("nerve_of_aut: invalid 2-groupoid (" +
                            r.front().message + ")");
  }
  AutNerve out;
  out.aut = a;
  TruncatedSimplicialSet& s = out.sset;
  s.filler = FillerRule::unique;
  int cells = (int)a.one_cells.size();
  s.counts[0] = a.num_objects();
  s.counts[1] = cells;
  s.faces1.resize(cells);
  for (int c = 0; c < cells; ++c)
    s.faces1[c] = {a.one_cells[c].tgt, a.one_cells[c].src};
  s.degen0.resize(a.num_objects());
  for (int x = 0; x < a.num_objects(); ++x)
    s.degen0[x] = {a.identity_one_cell[x]};

  // conj_{w^-1} o c, as a one-cell index; w lives in the target group of c.
  auto conjugate_cell = [&](int c, int w) {
    const AutTwoGroupoid::OneCell& cell = a.one_cells[c];
    const FiniteGroup& k = a.family.at(cell.tgt);
    std::vector<int> map(cell.map.size());
    for (int x = 0; x < (int)map.size(); ++x)
      map[x] = k.mul(k.mul(k.inv(w), cell.map[x]), w);
    return a.one_cell_index(cell.src, cell.tgt, map);
  };

  for (int f = 0; f < cells; ++f)
    for (int g = 0; g < cells; ++g) {
      if (a.one_cells[g].src != a.one_cells[f].tgt) continue;
      int gf = a.compose_one_cells(g, f);
      const FiniteGroup& k = a.family.at(a.one_cells[g].tgt);
      for (int w = 0; w < k.order; ++w) {
        out.tri_index[{f, g, w}] = (int)out.tris.size();
        out.tris.push_back({f, g, conjugate_cell(gf, w), w});
      }
    }
  s.counts[2] = (int)out.tris.size();
  s.faces2.resize(s.counts[2]);
  for (int t = 0; t < s.counts[2]; ++t) {
    const AutNerve::Tri& tri = out.tris[t];
    s.faces2[t] = {tri.g, tri.h, tri.f};
  }
  s.degen1.resize(cells);
  for (int c = 0; c < cells; ++c)
    s.degen1[c] = {
        out.tri_index.at({a.identity_one_cell[a.one_cells[c].src], c, 0}),
        out.tri_index.at({c, a.identity_one_cell[a.one_cells[c].tgt], 0})};

  for (int f = 0; f < cells; ++f)
    for (int g = 0; g < cells; ++g) {
      if (a.one_cells[g].src != a.one_cells[f].tgt) continue;
      for (int mm = 0; mm < cells; ++mm) {
        if (a.one_cells[mm].src != a.one_cells[g].tgt) continue;
        const FiniteGroup& kg = a.family.at(a.one_cells[g].tgt);
        const FiniteGroup& km = a.family.at(a.one_cells[mm].tgt);
        for (int beta = 0; beta < kg.order; ++beta) {
          int h = conjugate_cell(a.compose_one_cells(g, f), beta);
          for (int rho = 0; rho < km.order; ++rho) {
            int l = conjugate_cell(a.compose_one_cells(mm, g), rho);
            for (int lambda = 0; lambda < km.order; ++lambda) {
              int k = conjugate_cell(a.compose_one_cells(l, f), lambda);
              int phi = km.mul(km.inv(a.apply_one_cell(mm, beta)),
                               km.mul(rho, lambda));
              if (conjugate_cell(a.compose_one_cells(mm, h), phi) != k)
                throw TheoremError(
                    "nerve_of_aut: tetrahedron diagonal mismatch");
              out.tet_index[{f, g, mm, beta, rho, lambda}] =
                  (int)out.tets.size();
              out.tets.push_back(
                  {f, g, mm, beta, rho, lambda, phi, h, l, k});
            }
          }
        }
      }
    }
  s.counts[3] = (int)out.tets.size();
  s.faces3.resize(s.counts[3]);
  for (int t = 0; t < s.counts[3]; ++t) {
    const AutNerve::Tet& tet = out.tets[t];
    s.faces3[t] = {out.tri_index.at({tet.g, tet.m, tet.rho}),
                   out.tri_index.at({tet.h, tet.m, tet.phi}),
                   out.tri_index.at({tet.f, tet.l, tet.lambda}),
                   out.tri_index.at({tet.f, tet.g, tet.beta})};
  }
  s.degen2.resize(s.counts[2]);
  for (int t = 0; t < s.counts[2]; ++t) {
    const AutNerve::Tri& tri = out.tris[t];
    int ids = a.identity_one_cell[a.one_cells[tri.f].src];
    int idm = a.identity_one_cell[a.one_cells[tri.f].tgt];
    int idt = a.identity_one_cell[a.one_cells[tri.g].tgt];
    s.degen2[t] = {out.tet_index.at({ids, tri.f, tri.g, 0, tri.w, 0}),
                   out.tet_index.at({tri.f, idm, tri.g, 0, 0, tri.w}),
                   out.tet_index.at({tri.f, tri.g, idt, tri.w, 0, tri.w})};
  }

  Report r = validate_simplicial(s);
  if (!r.empty())
    throw TheoremError("nerve_of_aut: constructed nerve is invalid (" +
                       r.front().category + ": " + r.front().message + ")");
  return out;
}

Report validate_simplicial_map(const SimplicialMap& m) {
  Report out;
  {
    Report rs = validate_simplicial(m.source);
    for (const Violation& v : rs)
      out.push_back({"structure", "source: " + v.message});
    Report rt = validate_simplicial(m.target);
    for (const Violation& v : rt)
      out.push_back({"structure", "target: " + v.message});
  }
  for (int n = 0; n < 4; ++n)
    if ((int)m.level[n].size() != m.source.counts[n])
      out.push_back({"structure",
                     "level " + std::to_string(n) + " has wrong size"});
  if (!out.empty()) return out;
  for (int n = 0; n < 4; ++n)
    for (int x : m.level[n])
      if (!in_range(x, m.target.counts[n])) {
        out.push_back({"structure",
                       "level " + std::to_string(n) + " image out of range"});
        return out;
      }

  auto check = [&](bool cond, const std::string& what, int n, int x) {
    if (!cond)
      out.push_back({"simplicial", what + " not preserved at dimension " +
                                       std::to_string(n) + " simplex " +
                                       std::to_string(x)});
  };
  for (int u = 0; u < m.source.counts[1]; ++u)
    for (int i = 0; i < 2; ++i)
      check(m.target.faces1[m.level[1][u]][i] ==
                m.level[0][m.source.faces1[u][i]],
            "face d" + std::to_string(i), 1, u);
  for (int x = 0; x < m.source.counts[2]; ++x)
    for (int i = 0; i < 3; ++i)
      check(m.target.faces2[m.level[2][x]][i] ==
                m.level[1][m.source.faces2[x][i]],
            "face d" + std::to_string(i), 2, x);
  for (int x = 0; x < m.source.counts[3]; ++x)
    for (int i = 0; i < 4; ++i)
      check(m.target.faces3[m.level[3][x]][i] ==
                m.level[2][m.source.faces3[x][i]],
            "face d" + std::to_string(i), 3, x);
  for (int x = 0; x < m.source.counts[0]; ++x)
    check(m.target.degen0[m.level[0][x]][0] == m.level[1][m.source.degen0[x][0]],
          "degeneracy s0", 0, x);
  for (int u = 0; u < m.source.counts[1]; ++u)
    for (int i = 0; i < 2; ++i)
      check(m.target.degen1[m.level[1][u]][i] ==
                m.level[2][m.source.degen1[u][i]],
            "degeneracy s" + std::to_string(i), 1, u);
  for (int x = 0; x < m.source.counts[2]; ++x)
    for (int i = 0; i < 3; ++i)
      check(m.target.degen2[m.level[2][x]][i] ==
                m.level[3][m.source.degen2[x][i]],
            "degeneracy s" + std::to_string(i), 2, x);
  return out;
}

SimplicialMap cocycle_to_map(const WeakAction& w, const GroupoidNerve& gn,
                             const AutNerve& an) {
  require(gn.groupoid == w.base, "cocycle_to_map: nerve does not match base");
  require(an.aut.family == w.family,
          "cocycle_to_map: nerve does not match family");
  {
    Report r = validate_cocycle(w);
    if (!r.empty())
      throw StructuralError("cocycle_to_map: invalid weak action (" +
                            r.front().category + ": " + r.front().message +
                            ")");
  }
  const FiniteGroupoid& g = w.base;
  SimplicialMap m;
  m.source = gn.sset;
  m.target = an.sset;
  m.level[0].resize(g.num_objects());
  for (int x = 0; x < g.num_objects(); ++x) m.level[0][x] = x;
  m.level[1].resize(g.num_arrows());
  for (int u = 0; u < g.num_arrows(); ++u)
    m.level[1][u] = an.aut.one_cell_index(g.src(u), g.tgt(u), w.action[u]);
  m.level[2].resize(gn.sset.counts[2]);
  for (int x = 0; x < gn.sset.counts[2]; ++x) {
    auto [e1, e2] = gn.two_chain[x];
    m.level[2][x] =
        an.tri_index.at({m.level[1][e1], m.level[1][e2], w.sigma(e2, e1)});
  }
  m.level[3].resize(gn.sset.counts[3]);
  for (int x = 0; x < gn.sset.counts[3]; ++x) {
    auto [e1, e2, e3] = gn.three_chain[x];
    m.level[3][x] = an.tet_index.at(
        {m.level[1][e1], m.level[1][e2], m.level[1][e3], w.sigma(e2, e1),
         w.sigma(e3, e2), w.sigma(g.compose(e3, e2), e1)});
  }

  Report r = validate_simplicial_map(m);
  if (!r.empty())
    throw TheoremError("cocycle_to_map: constructed map is invalid (" +
                       r.front().category + ": " + r.front().message + ")");
  return m;
}

SimplicialMap cocycle_to_map(const WeakAction& w) {
  return cocycle_to_map(w, nerve_of_groupoid(w.base),
                        nerve_of_aut(build_aut(w.family)));
}

WeakAction map_to_cocycle(const SimplicialMap& m, const GroupoidNerve& gn,
                          const AutNerve& an) {
  require(m.source == gn.sset,
          "map_to_cocycle: source is not the given groupoid nerve");
  require(m.target == an.sset,
          "map_to_cocycle: target is not the given 2-groupoid nerve");
  {
    Report r = validate_simplicial_map(m);
    if (!r.empty())
      throw StructuralError("map_to_cocycle: invalid simplicial map (" +
                            r.front().category + ": " + r.front().message +
                            ")");
  }
  for (int x = 0; x < m.source.counts[0]; ++x)
    require(m.level[0][x] == x,
            "map_to_cocycle: level 0 is not the object indexing");

  const FiniteGroupoid& g = gn.groupoid;
  WeakAction w;
  w.base = g;
  w.family = an.aut.family;
  w.action.resize(g.num_arrows());
  for (int u = 0; u < g.num_arrows(); ++u)
    w.action[u] = an.aut.one_cells[m.level[1][u]].map;
  for (int x = 0; x < gn.sset.counts[2]; ++x) {
    auto [e1, e2] = gn.two_chain[x];
    w.factor[{e2, e1}] = an.tris[m.level[2][x]].w;
  }

  Report r = validate_cocycle(w);
  if (!r.empty())
    throw TheoremError("map_to_cocycle: extracted data is not a weak action (" +
                       r.front().category + ": " + r.front().message + ")");
  return w;
}

Report validate_homotopy(const SimplicialHomotopy& h) {
  Report out;
  {
    Report rf = validate_simplicial_map(h.from);
    for (const Violation& v : rf)
      out.push_back({"structure", "from: " + v.message});
    Report rt = validate_simplicial_map(h.to);
    for (const Violation& v : rt)
      out.push_back({"structure", "to: " + v.message});
  }
  if (!(h.from.source == h.to.source) || !(h.from.target == h.to.target))
    out.push_back({"structure", "maps do not share source and target"});
  if (!out.empty()) return out;

  const TruncatedSimplicialSet& S = h.from.source;
  const TruncatedSimplicialSet& T = h.from.target;
  for (int n = 0; n <= 2; ++n)
    for (int i = 0; i <= n; ++i)
      if ((int)h.comp[n][i].size() != S.counts[n]) {
        out.push_back({"structure", "component h" + std::to_string(i) +
                                        " at dimension " + std::to_string(n) +
                                        " has wrong size"});
        return out;
      }
  for (int n = 0; n <= 2; ++n)
    for (int i = 0; i <= n; ++i)
      for (int v : h.comp[n][i])
        if (!in_range(v, T.counts[n + 1])) {
          out.push_back({"structure", "homotopy component out of range"});
          return out;
        }

  auto check = [&](bool cond, const std::string& name, int x) {
    if (!cond)
      out.push_back({"homotopy",
                     name + " fails at simplex " + std::to_string(x)});
  };

  for (int x = 0; x < S.counts[0]; ++x) {
    int y = h.comp[0][0][x];
    check(T.faces1[y][0] == h.to.level[0][x], "d0 h0 = to (dim 0)", x);
    check(T.faces1[y][1] == h.from.level[0][x], "d1 h0 = from (dim 0)", x);
    if (y != T.degen0[h.from.level[0][x]][0])
      out.push_back({"normalization",
                     "h0 is not degenerate at 0-simplex " + std::to_string(x)});
    int sx = S.degen0[x][0];
    check(T.degen1[y][0] == h.comp[1][1][sx], "s0 h0 = h1 s0 (dim 0)", x);
    check(T.degen1[y][1] == h.comp[1][0][sx], "s1 h0 = h0 s0 (dim 0)", x);
  }
  for (int u = 0; u < S.counts[1]; ++u) {
    int y0 = h.comp[1][0][u], y1 = h.comp[1][1][u];
    check(T.faces2[y0][0] == h.to.level[1][u], "d0 h0 = to (dim 1)", u);
    check(T.faces2[y0][1] == T.faces2[y1][1], "d1 h0 = d1 h1 (dim 1)", u);
    check(T.faces2[y1][2] == h.from.level[1][u], "d2 h1 = from (dim 1)", u);
    check(T.faces2[y0][2] == h.comp[0][0][S.faces1[u][1]],
          "d2 h0 = h0 d1 (dim 1)", u);
    check(T.faces2[y1][0] == h.comp[0][0][S.faces1[u][0]],
          "d0 h1 = h0 d0 (dim 1)", u);
    int s0u = S.degen1[u][0], s1u = S.degen1[u][1];
    check(T.degen2[y0][0] == h.comp[2][1][s0u], "s0 h0 = h1 s0 (dim 1)", u);
    check(T.degen2[y1][0] == h.comp[2][2][s0u], "s0 h1 = h2 s0 (dim 1)", u);
    check(T.degen2[y0][1] == h.comp[2][0][s0u], "s1 h0 = h0 s0 (dim 1)", u);
    check(T.degen2[y1][1] == h.comp[2][2][s1u], "s1 h1 = h2 s1 (dim 1)", u);
    check(T.degen2[y0][2] == h.comp[2][0][s1u], "s2 h0 = h0 s1 (dim 1)", u);
    check(T.degen2[y1][2] == h.comp[2][1][s1u], "s2 h1 = h1 s1 (dim 1)", u);
  }
  for (int x = 0; x < S.counts[2]; ++x) {
    int t0 = h.comp[2][0][x], t1 = h.comp[2][1][x], t2 = h.comp[2][2][x];
    check(T.faces3[t0][0] == h.to.level[2][x], "d0 h0 = to (dim 2)", x);
    check(T.faces3[t0][1] == T.faces3[t1][1], "d1 h0 = d1 h1 (dim 2)", x);
    check(T.faces3[t1][2] == T.faces3[t2][2], "d2 h1 = d2 h2 (dim 2)", x);
    check(T.faces3[t2][3] == h.from.level[2][x], "d3 h2 = from (dim 2)", x);
    check(T.faces3[t1][0] == h.comp[1][0][S.faces2[x][0]],
          "d0 h1 = h0 d0 (dim 2)", x);
    check(T.faces3[t2][0] == h.comp[1][1][S.faces2[x][0]],
          "d0 h2 = h1 d0 (dim 2)", x);
    check(T.faces3[t2][1] == h.comp[1][1][S.faces2[x][1]],
          "d1 h2 = h1 d1 (dim 2)", x);
    check(T.faces3[t0][2] == h.comp[1][0][S.faces2[x][1]],
          "d2 h0 = h0 d1 (dim 2)", x);
    check(T.faces3[t0][3] == h.comp[1][0][S.faces2[x][2]],
          "d3 h0 = h0 d2 (dim 2)", x);
    check(T.faces3[t1][3] == h.comp[1][1][S.faces2[x][2]],
          "d3 h1 = h1 d2 (dim 2)", x);
  }
  return out;
}

SimplicialHomotopy homotopy_from_morphism(const ActionMorphism& m) {
  {
    Report r = validate_morphism(m);
    if (!r.empty())
      throw StructuralError("homotopy_from_morphism: invalid morphism (" +
                            r.front().category + ": " + r.front().message +
                            ")");
  }
  GroupoidNerve gn = nerve_of_groupoid(m.source.base);
  AutNerve an = nerve_of_aut(build_aut(m.source.family));
  const FiniteGroupoid& g = m.source.base;

  SimplicialHomotopy h;
  h.from = cocycle_to_map(m.source, gn, an);
  h.to = cocycle_to_map(m.target, gn, an);

  auto idc = [&](int object) { return an.aut.identity_one_cell[object]; };
  const std::vector<int>& tau = m.tau.tau;

  h.comp[0][0].resize(g.num_objects());
  for (int x = 0; x < g.num_objects(); ++x) h.comp[0][0][x] = idc(x);

  h.comp[1][0].resize(g.num_arrows());
  h.comp[1][1].resize(g.num_arrows());
  for (int u = 0; u < g.num_arrows(); ++u) {
    h.comp[1][0][u] =
        an.tri_index.at({idc(g.src(u)), h.to.level[1][u], tau[u]});
    h.comp[1][1][u] = an.tri_index.at({h.from.level[1][u], idc(g.tgt(u)), 0});
  }

  h.comp[2][0].resize(gn.sset.counts[2]);
  h.comp[2][1].resize(gn.sset.counts[2]);
  h.comp[2][2].resize(gn.sset.counts[2]);
  for (int x = 0; x < gn.sset.counts[2]; ++x) {
    auto [e1, e2] = gn.two_chain[x];
    int c = g.compose(e2, e1);
    h.comp[2][0][x] = an.tet_index.at({idc(g.src(e1)), h.to.level[1][e1],
                                       h.to.level[1][e2], tau[e1],
                                       m.target.sigma(e2, e1), tau[c]});
    h.comp[2][1][x] =
        an.tet_index.at({h.from.level[1][e1], idc(g.tgt(e1)),
                         h.to.level[1][e2], 0, tau[e2],
                         m.source.sigma(e2, e1)});
    h.comp[2][2][x] =
        an.tet_index.at({h.from.level[1][e1], h.from.level[1][e2],
                         idc(g.tgt(e2)), m.source.sigma(e2, e1), 0,
                         m.source.sigma(e2, e1)});
  }

  Report r = validate_homotopy(h);
  if (!r.empty())
    throw TheoremError("homotopy_from_morphism: constructed homotopy is "
                       "invalid (" +
                       r.front().category + ": " + r.front().message + ")");
  return h;
}

std::optional<SimplicialHomotopy> normalized_homotopic(const SimplicialMap& m1,
                                                       const SimplicialMap& m2,
                                                       Budget& budget) {
  require(m1.source == m2.source && m1.target == m2.target,
          "normalized_homotopic: maps do not share source and target");
  for (const SimplicialMap* m : {&m1, &m2}) {
    Report r = validate_simplicial_map(*m);
    if (!r.empty())
      throw StructuralError("normalized_homotopic: invalid map (" +
                            r.front().category + ": " + r.front().message +
                            ")");
  }
  const TruncatedSimplicialSet& S = m1.source;
  const TruncatedSimplicialSet& T = m1.target;
  if (m1.level[0] != m2.level[0]) return std::nullopt;

  std::vector<int> h00(S.counts[0]);
  for (int x = 0; x < S.counts[0]; ++x)
    h00[x] = T.degen0[m1.level[0][x]][0];

  std::vector<int> degenerate1(S.counts[1], -1);
  for (int x = 0; x < S.counts[0]; ++x) degenerate1[S.degen0[x][0]] = x;
  std::vector<std::pair<int, int>> degenerate2(S.counts[2], {-1, -1});
  for (int u = 0; u < S.counts[1]; ++u)
    for (int j = 0; j < 2; ++j)
      if (degenerate2[S.degen1[u][j]].first < 0)
        degenerate2[S.degen1[u][j]] = {j, u};

  std::vector<int> y0(S.counts[1], -1), y1(S.counts[1], -1);
  std::vector<int> free1, free_index(S.counts[1], -1);
  for (int u = 0; u < S.counts[1]; ++u) {
    if (degenerate1[u] >= 0) {
      int a = degenerate1[u];
      y0[u] = T.degen1[h00[a]][1];
      y1[u] = T.degen1[h00[a]][0];
    } else {
      free_index[u] = (int)free1.size();
      free1.push_back(u);
    }
  }

  std::map<std::array<int, 2>, std::vector<int>> tri_by_02;
  for (int t = 0; t < T.counts[2]; ++t)
    tri_by_02[{T.faces2[t][0], T.faces2[t][2]}].push_back(t);

  std::vector<std::vector<std::pair<int, int>>> cand(free1.size());
  for (size_t i = 0; i < free1.size(); ++i) {
    int u = free1[i];
    auto ia = tri_by_02.find({m2.level[1][u], h00[S.faces1[u][1]]});
    auto ib = tri_by_02.find({h00[S.faces1[u][0]], m1.level[1][u]});
    if (ia == tri_by_02.end() || ib == tri_by_02.end()) return std::nullopt;
    for (int a : ia->second)
      for (int b : ib->second)
        if (T.faces2[a][1] == T.faces2[b][1]) cand[i].push_back({a, b});
    if (cand[i].empty()) return std::nullopt;
  }

  std::map<std::array<int, 3>, std::vector<int>> tet_023, tet_013;
  std::map<std::array<int, 4>, std::vector<int>> tet_all;
  for (int t = 0; t < T.counts[3]; ++t) {
    const auto& f = T.faces3[t];
    tet_023[{f[0], f[2], f[3]}].push_back(t);
    tet_013[{f[0], f[1], f[3]}].push_back(t);
    tet_all[{f[0], f[1], f[2], f[3]}].push_back(t);
  }

  auto feasible = [&](int x) -> std::optional<std::array<int, 3>> {
    int e0 = S.faces2[x][0], e1 = S.faces2[x][1], e2 = S.faces2[x][2];
    auto i0 = tet_023.find({m2.level[2][x], y0[e1], y0[e2]});
    auto i2 = tet_013.find({y1[e0], y1[e1], m1.level[2][x]});
    if (i0 == tet_023.end() || i2 == tet_013.end()) return std::nullopt;
    for (int t0 : i0->second)
      for (int t2 : i2->second) {
        budget.charge();
        auto i1 = tet_all.find(
            {y0[e0], T.faces3[t0][1], T.faces3[t2][2], y1[e2]});
        if (i1 != tet_all.end())
          return std::array<int, 3>{t0, i1->second.front(), t2};
      }
    return std::nullopt;
  };

  // 2-simplices become checkable once their last free face arrow is chosen.
  std::vector<std::vector<int>> checklist(free1.size());
  std::vector<int> upfront;
  for (int x = 0; x < S.counts[2]; ++x) {
    if (degenerate2[x].first >= 0) continue;
    int last = -1;
    for (int i = 0; i < 3; ++i)
      last = std::max(last, free_index[S.faces2[x][i]]);
    if (last < 0)
      upfront.push_back(x);
    else
      checklist[last].push_back(x);
  }
  for (int x : upfront)
    if (!feasible(x)) return std::nullopt;

  std::function<bool(size_t)> rec = [&](size_t i) -> bool {
    if (i == free1.size()) return true;
    int u = free1[i];
    for (auto [a, b] : cand[i]) {
      budget.charge();
      y0[u] = a;
      y1[u] = b;
      bool ok = true;
      for (int x : checklist[i])
        if (!feasible(x)) {
          ok = false;
          break;
        }
      if (ok && rec(i + 1)) return true;
    }
    y0[u] = -1;
    y1[u] = -1;
    return false;
  };
  if (!rec(0)) return std::nullopt;

  SimplicialHomotopy h;
  h.from = m1;
  h.to = m2;
  h.comp[0][0] = h00;
  h.comp[1][0] = y0;
  h.comp[1][1] = y1;
  for (int i = 0; i <= 2; ++i) h.comp[2][i].resize(S.counts[2]);
  for (int x = 0; x < S.counts[2]; ++x) {
    auto [j, u] = degenerate2[x];
    if (j == 0) {
      h.comp[2][0][x] = T.degen2[y0[u]][1];
      h.comp[2][1][x] = T.degen2[y0[u]][0];
      h.comp[2][2][x] = T.degen2[y1[u]][0];
    } else if (j == 1) {
      h.comp[2][0][x] = T.degen2[y0[u]][2];
      h.comp[2][1][x] = T.degen2[y1[u]][2];
      h.comp[2][2][x] = T.degen2[y1[u]][1];
    } else {
      auto t = feasible(x);
      if (!t)
        throw TheoremError(
            "normalized_homotopic: accepted assignment lost feasibility");
      h.comp[2][0][x] = (*t)[0];
      h.comp[2][1][x] = (*t)[1];
      h.comp[2][2][x] = (*t)[2];
    }
  }

  Report r = validate_homotopy(h);
  if (!r.empty())
    throw TheoremError("normalized_homotopic: assembled homotopy is invalid (" +
                       r.front().category + ": " + r.front().message + ")");
  return h;
}

std::vector<SimplicialMap> enumerate_simplicial_maps(const GroupoidNerve& gn,
                                                     const AutNerve& an,
                                                     Budget& budget) {
  const TruncatedSimplicialSet& S = gn.sset;
  const TruncatedSimplicialSet& T = an.sset;
  if (S.counts[0] != T.counts[0]) return {};

  std::vector<int> level0(S.counts[0]);
  for (int x = 0; x < S.counts[0]; ++x) level0[x] = x;

  std::vector<int> degenerate1(S.counts[1], -1);
  for (int x = 0; x < S.counts[0]; ++x) degenerate1[S.degen0[x][0]] = x;
  std::vector<std::pair<int, int>> degenerate2(S.counts[2], {-1, -1});
  for (int u = 0; u < S.counts[1]; ++u)
    for (int j = 0; j < 2; ++j)
      if (degenerate2[S.degen1[u][j]].first < 0)
        degenerate2[S.degen1[u][j]] = {j, u};
  std::vector<std::pair<int, int>> degenerate3(S.counts[3], {-1, -1});
  for (int x = 0; x < S.counts[2]; ++x)
    for (int j = 0; j < 3; ++j)
      if (degenerate3[S.degen2[x][j]].first < 0)
        degenerate3[S.degen2[x][j]] = {j, x};

  std::map<std::array<int, 2>, std::vector<int>> tcell_by_faces;
  for (int t = 0; t < T.counts[1]; ++t)
    tcell_by_faces[T.faces1[t]].push_back(t);
  std::map<std::array<int, 3>, std::vector<int>> tri_by_faces;
  for (int t = 0; t < T.counts[2]; ++t)
    tri_by_faces[T.faces2[t]].push_back(t);
  std::map<std::array<int, 4>, std::vector<int>> tet_by_faces;
  for (int t = 0; t < T.counts[3]; ++t)
    tet_by_faces[T.faces3[t]].push_back(t);

  std::vector<int> free1;
  std::vector<std::vector<int>> cand1;
  for (int u = 0; u < S.counts[1]; ++u) {
    if (degenerate1[u] >= 0) continue;
    auto it = tcell_by_faces.find(
        {level0[S.faces1[u][0]], level0[S.faces1[u][1]]});
    if (it == tcell_by_faces.end()) return {};
    free1.push_back(u);
    cand1.push_back(it->second);
  }
  std::vector<int> free2;
  for (int x = 0; x < S.counts[2]; ++x)
    if (degenerate2[x].first < 0) free2.push_back(x);
  std::vector<int> free3;
  for (int x = 0; x < S.counts[3]; ++x)
    if (degenerate3[x].first < 0) free3.push_back(x);

  std::vector<SimplicialMap> out;
  std::vector<int> level1(S.counts[1], -1), level2(S.counts[2], -1),
      level3(S.counts[3], -1);

  std::vector<int> pick1(free1.size(), 0);
  for (;;) {
    budget.charge();
    for (size_t i = 0; i < free1.size(); ++i)
      level1[free1[i]] = cand1[i][pick1[i]];
    for (int u = 0; u < S.counts[1]; ++u)
      if (degenerate1[u] >= 0) level1[u] = T.degen0[level0[degenerate1[u]]][0];

    // Candidates for the free 2-simplices under this level-1 choice.
    bool dead = false;
    std::vector<std::vector<int>> cand2(free2.size());
    for (size_t i = 0; i < free2.size() && !dead; ++i) {
      int x = free2[i];
      auto it = tri_by_faces.find({level1[S.faces2[x][0]],
                                   level1[S.faces2[x][1]],
                                   level1[S.faces2[x][2]]});
      if (it == tri_by_faces.end())
        dead = true;
      else
        cand2[i] = it->second;
    }
    if (!dead) {
      for (int x = 0; x < S.counts[2]; ++x)
        if (degenerate2[x].first >= 0)
          level2[x] = -2;  // forced later, marker for safety
      std::vector<int> pick2(free2.size(), 0);
      for (;;) {
        budget.charge();
        for (size_t i = 0; i < free2.size(); ++i)
          level2[free2[i]] = cand2[i][pick2[i]];
        // Forced degenerate 2-levels need the level-1 images.
        for (int x = 0; x < S.counts[2]; ++x)
          if (degenerate2[x].first >= 0) {
            auto [j, u] = degenerate2[x];
            level2[x] = T.degen1[level1[u]][j];
          }
        // Level 3: forced on degenerates, boundary lookup on the rest.
        bool ok = true;
        std::vector<std::vector<int>> cand3(free3.size());
        for (size_t i = 0; i < free3.size() && ok; ++i) {
          int x = free3[i];
          auto it = tet_by_faces.find(
              {level2[S.faces3[x][0]], level2[S.faces3[x][1]],
               level2[S.faces3[x][2]], level2[S.faces3[x][3]]});
          if (it == tet_by_faces.end())
            ok = false;
          else
            cand3[i] = it->second;
        }
        if (ok) {
          for (int x = 0; x < S.counts[3]; ++x)
            if (degenerate3[x].first >= 0) {
              auto [j, y] = degenerate3[x];
              level3[x] = T.degen2[level2[y]][j];
            }
          std::vector<int> pick3(free3.size(), 0);
          for (;;) {
            budget.charge();
            for (size_t i = 0; i < free3.size(); ++i)
              level3[free3[i]] = cand3[i][pick3[i]];
            SimplicialMap m{S, T, {level0, level1, level2, level3}};
            Report r = validate_simplicial_map(m);
            if (!r.empty())
              throw TheoremError("enumerate_simplicial_maps: constructed map "
                                 "is invalid (" +
                                 r.front().category + ": " + r.front().message +
                                 ")");
            out.push_back(std::move(m));
            int i = (int)pick3.size() - 1;
            while (i >= 0 && pick3[i] + 1 == (int)cand3[i].size())
              pick3[i--] = 0;
            if (i < 0) break;
            ++pick3[i];
          }
        }
        int i = (int)pick2.size() - 1;
        while (i >= 0 && pick2[i] + 1 == (int)cand2[i].size()) pick2[i--] = 0;
        if (i < 0) break;
        ++pick2[i];
      }
    }

    int i = (int)pick1.size() - 1;
    while (i >= 0 && pick1[i] + 1 == (int)cand1[i].size()) pick1[i--] = 0;
    if (i < 0) break;
    ++pick1[i];
    if (free1.empty()) break;
  }
  return out;
}

RepresentationReport representation_check(const FiniteGroupoid& base,
                                          const GroupFamily& family,
                                          Budget& budget) {
  RepresentationReport rep;
  H2Result h = h2(base, family, budget);
  rep.h2_classes = (int)h.classes.size();

  GroupoidNerve gn = nerve_of_groupoid(base);
  AutNerve an = nerve_of_aut(build_aut(family));
  std::vector<SimplicialMap> maps;
  for (const WeakAction& w : h.cocycles)
    maps.push_back(cocycle_to_map(w, gn, an));

  std::vector<SimplicialMap> raw = enumerate_simplicial_maps(gn, an, budget);
  {
    std::vector<std::array<std::vector<int>, 4>> a, b;
    for (const SimplicialMap& m : maps) a.push_back(m.level);
    for (const SimplicialMap& m : raw) b.push_back(m.level);
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) {
      rep.raw_enumeration_matches = false;
      rep.notes.push_back(
          "raw simplicial-map enumeration (" + std::to_string(raw.size()) +
          " maps) differs from the cocycle dictionary image (" +
          std::to_string(maps.size()) + " maps)");
    }
  }

  DisjointSets dsu((int)maps.size());
  for (int i = 0; i < (int)maps.size(); ++i)
    for (int j = i + 1; j < (int)maps.size(); ++j) {
      if (dsu.find(i) == dsu.find(j)) continue;
      bool fwd = normalized_homotopic(maps[i], maps[j], budget).has_value();
      bool bwd = normalized_homotopic(maps[j], maps[i], budget).has_value();
      if (fwd != bwd) {
        rep.symmetric = false;
        rep.notes.push_back("homotopy search asymmetric between maps " +
                            std::to_string(i) + " and " + std::to_string(j));
      }
      if (fwd || bwd) dsu.unite(i, j);
    }

  std::vector<int> map_class(maps.size(), -1);
  int next = 0;
  std::map<int, int> root_class;
  for (int i = 0; i < (int)maps.size(); ++i) {
    int root = dsu.find(i);
    auto [it, inserted] = root_class.insert({root, next});
    if (inserted) ++next;
    map_class[i] = it->second;
  }
  rep.map_classes = next;

  if (map_class != h.class_of) {
    rep.partitions_agree = false;
    for (int i = 0; i < (int)maps.size(); ++i)
      if (map_class[i] != h.class_of[i]) {
        rep.notes.push_back("partitions differ first at cocycle " +
                            std::to_string(i));
        break;
      }
  }
  for (int c = 0; c < (int)h.representatives.size(); ++c)
    rep.matching.push_back(map_class[h.representatives[c]]);
  return rep;
}

}  // namespace gcoh
