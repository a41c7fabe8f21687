#include <doctest.h>

#include <algorithm>
#include <set>

#include "gcoh/family.hpp"
#include "gcoh/functor.hpp"
#include "gcoh/group.hpp"
#include "gcoh/groupoid.hpp"
#include "oracles.hpp"

using namespace gcoh;

TEST_CASE("order-2 table is a valid group") {
  FiniteGroup g;
  g.order = 2;
  g.table = {{0, 1}, {1, 0}};
  CHECK(validate_group(g).empty());
}

TEST_CASE("builders produce valid groups") {
  for (int n = 1; n <= 8; ++n) CHECK(validate_group(make_cyclic(n)).empty());
  CHECK(validate_group(make_klein4()).empty());
  CHECK(validate_group(make_symmetric3()).empty());
  CHECK(validate_group(make_dihedral(4)).empty());
  CHECK(validate_group(make_quaternion8()).empty());
  CHECK(validate_group(make_direct_product(make_cyclic(2), make_cyclic(3)))
            .empty());
}

TEST_CASE("every single-cell mutation of the Z4 table is rejected") {
  FiniteGroup base = make_cyclic(4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int v = 0; v < 4; ++v) {
        if (v == base.table[a][b]) continue;
        FiniteGroup g = base;
        g.table[a][b] = v;
        CHECK_FALSE(validate_group(g).empty());
      }
}

TEST_CASE("isomorphism search agrees with the brute-force oracle") {
  FiniteGroup z4 = make_cyclic(4);
  FiniteGroup k4 = make_klein4();
  FiniteGroup z6 = make_cyclic(6);
  FiniteGroup z23 = make_direct_product(make_cyclic(2), make_cyclic(3));
  FiniteGroup s3 = make_symmetric3();

  CHECK_FALSE(group_iso_search(z4, k4).has_value());
  CHECK(oracle::tables_isomorphic(z6.table, z23.table));
  auto iso = group_iso_search(z6, z23);
  REQUIRE(iso.has_value());
  CHECK(validate_group_iso(*iso).empty());
  CHECK_FALSE(group_iso_search(z6, s3).has_value());
  CHECK_FALSE(oracle::tables_isomorphic(z6.table, s3.table));

  CHECK(canonical_table(z6) == canonical_table(z23));
  CHECK(canonical_table(z6) != canonical_table(s3));
}

TEST_CASE("automorphism group sizes") {
  CHECK(automorphisms(make_cyclic(2)).size() == 1);
  CHECK(automorphisms(make_cyclic(3)).size() == 2);
  CHECK(automorphisms(make_cyclic(4)).size() == 2);
  CHECK(automorphisms(make_klein4()).size() == 6);
  CHECK(automorphisms(make_symmetric3()).size() == 6);
  CHECK(automorphisms(make_quaternion8()).size() == 24);
}

TEST_CASE("iso composition and inversion") {
  FiniteGroup s3 = make_symmetric3();
  std::vector<GroupIso> autos = automorphisms(s3);
  for (const GroupIso& a : autos) {
    GroupIso inv = invert_group_iso(a);
    CHECK(validate_group_iso(inv).empty());
    GroupIso round = compose_group_iso(inv, a);
    CHECK(round.map == identity_iso(s3).map);
  }
  for (const GroupIso& a : autos)
    for (const GroupIso& b : autos) {
      GroupIso c = compose_group_iso(b, a);
      CHECK(validate_group_iso(c).empty());
    }
}

TEST_CASE("order-4 classification oracle") {
  std::vector<oracle::Table> tables = oracle::all_group_tables(4);
  CHECK(tables.size() == 4);
  std::vector<int> cls = oracle::iso_classes(tables);
  CHECK(*std::max_element(cls.begin(), cls.end()) + 1 == 2);
  for (const oracle::Table& t : tables) {
    FiniteGroup g;
    g.order = 4;
    g.table = t;
    CHECK(validate_group(g).empty());
  }
}

TEST_CASE("order-6 classification oracle") {
  std::vector<oracle::Table> tables = oracle::all_group_tables(6);
  CHECK(tables.size() == 80);
  std::vector<int> cls = oracle::iso_classes(tables);
  int classes = *std::max_element(cls.begin(), cls.end()) + 1;
  CHECK(classes == 2);
  // 60 cyclic tables and 20 symmetric-group tables.
  std::vector<int> sizes(classes, 0);
  for (int c : cls) ++sizes[c];
  std::sort(sizes.begin(), sizes.end());
  CHECK(sizes == std::vector<int>{20, 60});
}

TEST_CASE("groupoid builders validate") {
  CHECK(validate_groupoid(groupoid_from_group(make_cyclic(5))).empty());
  CHECK(validate_groupoid(groupoid_from_group(make_symmetric3())).empty());
  CHECK(validate_groupoid(interval_groupoid()).empty());
  CHECK(validate_groupoid(discrete_groupoid(3)).empty());
  CHECK(validate_groupoid(
            disjoint_union(interval_groupoid(),
                           groupoid_from_group(make_cyclic(3))))
            .empty());
}

TEST_CASE("interval groupoid shape") {
  FiniteGroupoid g = interval_groupoid();
  CHECK(g.num_objects() == 2);
  CHECK(g.num_arrows() == 4);
  CHECK(g.src(2) == 0);
  CHECK(g.tgt(2) == 1);
  CHECK(g.src(3) == 1);
  CHECK(g.tgt(3) == 0);
  CHECK(g.compose(3, 2) == g.identity[0]);
  CHECK(g.compose(2, 3) == g.identity[1]);
  CHECK(connected_components(g) == std::vector<int>{0, 0});
}

TEST_CASE("disjoint union keeps blocks apart") {
  FiniteGroupoid g = disjoint_union(groupoid_from_group(make_cyclic(2)),
                                    groupoid_from_group(make_cyclic(3)));
  CHECK(g.num_objects() == 2);
  CHECK(g.num_arrows() == 5);
  CHECK(connected_components(g) == std::vector<int>{0, 1});
  VertexGroup v0 = vertex_group(g, 0);
  VertexGroup v1 = vertex_group(g, 1);
  CHECK(v0.group.order == 2);
  CHECK(v1.group.order == 3);
  CHECK(canonical_table(v1.group) == canonical_table(make_cyclic(3)));
}

TEST_CASE("vertex group of a one-object groupoid recovers the group") {
  FiniteGroup s3 = make_symmetric3();
  VertexGroup v = vertex_group(groupoid_from_group(s3), 0);
  CHECK(v.group.table == s3.table);
}

TEST_CASE("composable pairs are sorted and complete") {
  FiniteGroupoid g = interval_groupoid();
  auto pairs = composable_pairs(g);
  CHECK(std::is_sorted(pairs.begin(), pairs.end()));
  std::set<std::pair<int, int>> seen(pairs.begin(), pairs.end());
  int count = 0;
  for (int v = 0; v < g.num_arrows(); ++v)
    for (int u = 0; u < g.num_arrows(); ++u)
      if (g.composable(v, u)) {
        ++count;
        CHECK(seen.count({v, u}) == 1);
      }
  CHECK((int)pairs.size() == count);
}

TEST_CASE("identity functor and composition validate") {
  FiniteGroupoid g = interval_groupoid();
  GroupoidFunctor id = identity_functor(g);
  CHECK(validate_functor(id).empty());
  CHECK(validate_functor(compose_functors(id, id)).empty());
  CHECK(is_bijective_on_objects(id));
  CHECK(is_bijective_on_arrows(id));
}

TEST_CASE("functor violations are reported") {
  FiniteGroupoid g = groupoid_from_group(make_cyclic(3));
  GroupoidFunctor f = identity_functor(g);
  f.arrow_map[1] = 2;  // no longer multiplicative
  CHECK_FALSE(validate_functor(f).empty());
}

TEST_CASE("family validation") {
  GroupFamily fam = make_family({make_cyclic(2), make_cyclic(3)});
  CHECK(validate_family(fam).empty());
  CHECK(family_matches_base(fam, interval_groupoid()));
  CHECK_FALSE(family_matches_base(fam, discrete_groupoid(3)));
  GroupFamily broken = fam;
  broken.groups[0].table[0][0] = 1;
  CHECK_FALSE(validate_family(broken).empty());
}
