#include <doctest.h>

#include <algorithm>
#include <array>
#include <set>
#include <vector>

#include "gcoh/nerve.hpp"

using namespace gcoh;

namespace {

GroupFamily labeled_family(std::vector<FiniteGroup> ks) {
  for (std::size_t i = 0; i < ks.size(); ++i)
    ks[i].label = "K" + std::to_string(i);
  return make_family(std::move(ks));
}

std::array<int, 4> counts_of(const TruncatedSimplicialSet& s) {
  return s.counts;
}

}  // namespace

TEST_CASE("groupoid nerve sizes follow the chain counts") {
  struct Case {
    FiniteGroupoid g;
    std::array<int, 4> counts;
  };
  std::vector<Case> cases;
  cases.push_back({groupoid_from_group(make_cyclic(2)), {1, 2, 4, 8}});
  cases.push_back({groupoid_from_group(make_cyclic(3)), {1, 3, 9, 27}});
  cases.push_back({interval_groupoid(), {2, 4, 8, 16}});
  cases.push_back({disjoint_union(groupoid_from_group(make_cyclic(2)),
                                  groupoid_from_group(make_cyclic(3))),
                   {2, 5, 13, 35}});
  for (const Case& c : cases) {
    GroupoidNerve n = nerve_of_groupoid(c.g);
    CHECK(counts_of(n.sset) == c.counts);
    CHECK(n.sset.filler == FillerRule::exact);
    CHECK(validate_simplicial(n.sset).empty());
    // Chain dictionaries and faces agree: d2 = first edge, d0 = second,
    // d1 = composite.
    for (int x = 0; x < n.sset.counts[2]; ++x) {
      auto [e1, e2] = n.two_chain[x];
      CHECK(n.sset.faces2[x][2] == e1);
      CHECK(n.sset.faces2[x][0] == e2);
      CHECK(n.sset.faces2[x][1] == c.g.compose(e2, e1));
      CHECK(n.two_chain_index.at({e1, e2}) == x);
    }
    // Degenerate 1-simplices are the identities.
    for (int a = 0; a < n.sset.counts[0]; ++a)
      CHECK(n.sset.degen0[a][0] == c.g.identity[a]);
  }
}

TEST_CASE("aut nerve sizes on the frozen instances") {
  struct Case {
    GroupFamily fam;
    std::array<int, 4> counts;
  };
  std::vector<Case> cases;
  cases.push_back({labeled_family({make_cyclic(3)}), {1, 2, 12, 216}});
  cases.push_back({labeled_family({make_cyclic(2)}), {1, 1, 2, 8}});
  cases.push_back(
      {labeled_family({make_cyclic(2), make_cyclic(2)}), {2, 4, 16, 128}});
  for (const Case& c : cases) {
    AutNerve n = nerve_of_aut(build_aut(c.fam));
    CHECK(counts_of(n.sset) == c.counts);
    CHECK(n.sset.filler == FillerRule::unique);
    CHECK(validate_simplicial(n.sset).empty());
  }
}

TEST_CASE("aut nerve 3-simplices are exactly the commutative boundaries") {
  AutNerve an = nerve_of_aut(build_aut(labeled_family({make_cyclic(3)})));
  const AutTwoGroupoid& aut = an.aut;
  std::set<std::array<int, 4>> filled(an.sset.faces3.begin(),
                                      an.sset.faces3.end());
  CHECK((int)filled.size() == an.sset.counts[3]);

  auto d = [&](int tri, int i) { return an.sset.faces2[tri][i]; };
  int nt = an.sset.counts[2];
  long long compatible = 0, commutative = 0;
  for (int t0 = 0; t0 < nt; ++t0)
    for (int t1 = 0; t1 < nt; ++t1)
      for (int t2 = 0; t2 < nt; ++t2)
        for (int t3 = 0; t3 < nt; ++t3) {
          // Shared edges of the four faces of a tetrahedron on vertices 0123.
          bool boundary = d(t3, 2) == d(t2, 2) &&  // edge 01
                          d(t3, 1) == d(t1, 2) &&  // edge 02
                          d(t3, 0) == d(t0, 2) &&  // edge 12
                          d(t2, 1) == d(t1, 1) &&  // edge 03
                          d(t2, 0) == d(t0, 1) &&  // edge 13
                          d(t1, 0) == d(t0, 0);    // edge 23
          if (!boundary) continue;
          ++compatible;
          // Independent commutativity: m(beta) * phi = rho * lambda in the
          // group at the last vertex.
          const AutNerve::Tri& T3 = an.tris[t3];  // (f, g; beta)
          const AutNerve::Tri& T0 = an.tris[t0];  // (g, m; rho)
          const AutNerve::Tri& T2 = an.tris[t2];  // (f, l; lambda)
          const AutNerve::Tri& T1 = an.tris[t1];  // (h, m; phi)
          int m = T0.g;
          const FiniteGroup& km = aut.family.at(aut.one_cells[m].tgt);
          bool comm = km.mul(aut.apply_one_cell(m, T3.w), T1.w) ==
                      km.mul(T0.w, T2.w);
          if (comm) ++commutative;
          CHECK(filled.count({t0, t1, t2, t3}) == (comm ? 1u : 0u));
        }
  CHECK(commutative == 216);
  // Non-commutative compatible boundaries exist; the unique-filler rule is
  // genuinely weaker than exact filling here.
  CHECK(compatible == 648);
}

TEST_CASE("tetrahedron faces cohere with the derived diagonals") {
  AutNerve an = nerve_of_aut(
      build_aut(labeled_family({make_cyclic(2), make_cyclic(2)})));
  for (int i = 0; i < (int)an.tets.size(); ++i) {
    const AutNerve::Tet& t = an.tets[i];
    CHECK(an.tri_index.count({t.f, t.g, t.beta}) == 1);
    CHECK(an.tri_index.count({t.g, t.m, t.rho}) == 1);
    CHECK(an.tri_index.count({t.f, t.l, t.lambda}) == 1);
    CHECK(an.tri_index.count({t.h, t.m, t.phi}) == 1);
    CHECK(an.tet_index.at({t.f, t.g, t.m, t.beta, t.rho, t.lambda}) == i);
  }
}

TEST_CASE("cocycle_to_map round trips through map_to_cocycle") {
  FiniteGroupoid base = groupoid_from_group(make_cyclic(2));
  GroupFamily fam = labeled_family({make_cyclic(3)});
  GroupoidNerve gn = nerve_of_groupoid(base);
  AutNerve an = nerve_of_aut(build_aut(fam));
  Budget budget;
  for (const WeakAction& w : enumerate_cocycles(base, fam, budget)) {
    SimplicialMap m = cocycle_to_map(w, gn, an);
    CHECK(validate_simplicial_map(m).empty());
    CHECK(m.source == gn.sset);
    CHECK(m.target == an.sset);
    CHECK(map_to_cocycle(m, gn, an) == w);
    // Convenience overload agrees.
    CHECK(cocycle_to_map(w) == m);
  }
}

TEST_CASE("validate_simplicial_map rejects level corruption") {
  FiniteGroupoid base = groupoid_from_group(make_cyclic(2));
  GroupFamily fam = labeled_family({make_cyclic(3)});
  Budget budget;
  std::vector<WeakAction> ws = enumerate_cocycles(base, fam, budget);
  SimplicialMap good = cocycle_to_map(ws[0]);
  REQUIRE(validate_simplicial_map(good).empty());
  SUBCASE("arrow level") {
    SimplicialMap bad = good;
    bad.level[1][1] = (bad.level[1][1] + 1) % bad.target.counts[1];
    CHECK(!validate_simplicial_map(bad).empty());
  }
  SUBCASE("triangle level") {
    SimplicialMap bad = good;
    bad.level[2][3] = (bad.level[2][3] + 1) % bad.target.counts[2];
    CHECK(!validate_simplicial_map(bad).empty());
  }
  SUBCASE("tetrahedron level") {
    SimplicialMap bad = good;
    bad.level[3][5] = (bad.level[3][5] + 1) % bad.target.counts[3];
    CHECK(!validate_simplicial_map(bad).empty());
  }
}

TEST_CASE("raw simplicial map enumeration matches the cocycle dictionary") {
  struct Case {
    FiniteGroupoid base;
    GroupFamily fam;
  };
  std::vector<Case> cases;
  cases.push_back(
      {groupoid_from_group(make_cyclic(2)), labeled_family({make_cyclic(2)})});
  cases.push_back(
      {groupoid_from_group(make_cyclic(2)), labeled_family({make_cyclic(3)})});
  cases.push_back({interval_groupoid(),
                   labeled_family({make_cyclic(2), make_cyclic(3)})});
  for (const Case& c : cases) {
    GroupoidNerve gn = nerve_of_groupoid(c.base);
    AutNerve an = nerve_of_aut(build_aut(c.fam));
    Budget budget;
    std::vector<SimplicialMap> raw = enumerate_simplicial_maps(gn, an, budget);
    std::vector<WeakAction> ws = enumerate_cocycles(c.base, c.fam, budget);
    CHECK(raw.size() == ws.size());
    std::set<std::array<std::vector<int>, 4>> raw_keys, dict_keys;
    for (const SimplicialMap& m : raw) {
      CHECK(validate_simplicial_map(m).empty());
      raw_keys.insert(m.level);
    }
    for (const WeakAction& w : ws)
      dict_keys.insert(cocycle_to_map(w, gn, an).level);
    CHECK(raw_keys == dict_keys);
  }
}

TEST_CASE("homotopy_from_morphism produces a valid normalized homotopy") {
  FiniteGroupoid base = groupoid_from_group(make_cyclic(2));
  GroupFamily fam = labeled_family({make_cyclic(3)});
  Budget budget;
  H2Result r = h2(base, fam, budget, /*witnesses=*/true);
  for (std::size_t cls = 0; cls < r.classes.size(); ++cls)
    for (int member : r.classes[cls]) {
      const WeakAction& rep = r.cocycles[r.representatives[cls]];
      const WeakAction& w = r.cocycles[member];
      ActionMorphism m{rep, w, r.witnesses.at(member)};
      SimplicialHomotopy h = homotopy_from_morphism(m);
      CHECK(validate_homotopy(h).empty());
      CHECK(h.from == cocycle_to_map(rep));
      CHECK(h.to == cocycle_to_map(w));
    }
}

TEST_CASE("validate_homotopy rejects corrupted components") {
  FiniteGroupoid base = groupoid_from_group(make_cyclic(2));
  GroupFamily fam = labeled_family({make_cyclic(3)});
  WeakAction w = make_trivial_action(base, fam);
  SimplicialHomotopy good = homotopy_from_morphism(identity_morphism(w));
  REQUIRE(validate_homotopy(good).empty());
  SimplicialHomotopy bad = good;
  int n2 = bad.to.target.counts[2];
  bad.comp[1][0][1] = (bad.comp[1][0][1] + 1) % n2;
  CHECK(!validate_homotopy(bad).empty());
}

TEST_CASE("normalized homotopy search separates exactly the classes") {
  struct Case {
    FiniteGroupoid base;
    GroupFamily fam;
  };
  std::vector<Case> cases;
  cases.push_back(
      {groupoid_from_group(make_cyclic(2)), labeled_family({make_cyclic(2)})});
  cases.push_back(
      {groupoid_from_group(make_cyclic(2)), labeled_family({make_cyclic(3)})});
  for (const Case& c : cases) {
    Budget budget;
    H2Result r = h2(c.base, c.fam, budget);
    GroupoidNerve gn = nerve_of_groupoid(c.base);
    AutNerve an = nerve_of_aut(build_aut(c.fam));
    std::vector<SimplicialMap> maps;
    for (const WeakAction& w : r.cocycles)
      maps.push_back(cocycle_to_map(w, gn, an));
    for (std::size_t i = 0; i < maps.size(); ++i)
      for (std::size_t j = 0; j < maps.size(); ++j) {
        std::optional<SimplicialHomotopy> h =
            normalized_homotopic(maps[i], maps[j], budget);
        bool same = r.class_of[(int)i] == r.class_of[(int)j];
        CHECK(h.has_value() == same);
        if (h) {
          CHECK(validate_homotopy(*h).empty());
          CHECK(h->from == maps[i]);
          CHECK(h->to == maps[j]);
        }
      }
  }
}

TEST_CASE("representation_check on the two smallest instances") {
  struct Case {
    FiniteGroupoid base;
    GroupFamily fam;
    int classes;
  };
  std::vector<Case> cases;
  cases.push_back({groupoid_from_group(make_cyclic(2)),
                   labeled_family({make_cyclic(2)}), 2});
  cases.push_back({groupoid_from_group(make_cyclic(2)),
                   labeled_family({make_cyclic(3)}), 2});
  for (const Case& c : cases) {
    Budget budget;
    RepresentationReport rep = representation_check(c.base, c.fam, budget);
    CHECK(rep.ok());
    CHECK(rep.h2_classes == c.classes);
    CHECK(rep.map_classes == c.classes);
    CHECK(rep.raw_enumeration_matches);
    CHECK(rep.partitions_agree);
    CHECK(rep.symmetric);
    CHECK((int)rep.matching.size() == c.classes);
    // The matching is a bijection of class labels.
    std::set<int> image(rep.matching.begin(), rep.matching.end());
    CHECK((int)image.size() == c.classes);
  }
}
