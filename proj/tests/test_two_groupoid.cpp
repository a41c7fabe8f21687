#include <doctest.h>

#include <vector>

#include "gcoh/two_groupoid.hpp"

using namespace gcoh;

namespace {

// All 2-cells of the one-object Aut 2-groupoid of a group.
std::vector<TwoCell> all_two_cells(const FiniteGroup& g) {
  std::vector<TwoCell> out;
  for (const GroupIso& f : automorphisms(g))
    for (int w = 0; w < g.order; ++w) out.push_back({f, w});
  return out;
}

}  // namespace

TEST_CASE("two-cell basics on Aut(Z3)") {
  FiniteGroup z3 = make_cyclic(3);
  for (const TwoCell& c : all_two_cells(z3)) {
    CHECK(validate_two_cell(c).empty());
    GroupIso cod = two_cell_codomain(c);
    CHECK(validate_group_iso(cod).empty());
    TwoCell inv = two_cell_vinverse(c);
    CHECK(inv.dom.map == cod.map);
    TwoCell round = vcompose(inv, c);
    CHECK(round.dom.map == c.dom.map);
    CHECK(round.witness == 0);
  }
}

TEST_CASE("vertical composition is associative and unital on Aut(S3)") {
  FiniteGroup s3 = make_symmetric3();
  std::vector<TwoCell> cells = all_two_cells(s3);
  CHECK(cells.size() == 36);
  for (const TwoCell& a : cells) {
    TwoCell l = vcompose(identity_two_cell(two_cell_codomain(a)), a);
    TwoCell r = vcompose(a, identity_two_cell(a.dom));
    CHECK(l == a);
    CHECK(r == a);
    for (const TwoCell& b : cells) {
      if (!(b.dom.map == two_cell_codomain(a).map)) continue;
      for (const TwoCell& c : cells) {
        if (!(c.dom.map == two_cell_codomain(b).map)) continue;
        CHECK(vcompose(c, vcompose(b, a)) == vcompose(vcompose(c, b), a));
      }
    }
  }
}

TEST_CASE("horizontal composition matches codomain pasting") {
  FiniteGroup s3 = make_symmetric3();
  std::vector<TwoCell> cells = all_two_cells(s3);
  for (const TwoCell& a : cells)
    for (const TwoCell& b : cells) {
      TwoCell h = hcompose(b, a);
      CHECK(validate_two_cell(h).empty());
      // codomain of the horizontal composite = composite of codomains
      GroupIso expect =
          compose_group_iso(two_cell_codomain(b), two_cell_codomain(a));
      CHECK(two_cell_codomain(h).map == expect.map);
    }
}

TEST_CASE("middle-four interchange on Aut(Z3) exhaustively") {
  FiniteGroup z3 = make_cyclic(3);
  std::vector<TwoCell> cells = all_two_cells(z3);
  for (const TwoCell& a : cells)
    for (const TwoCell& c : cells) {
      if (!(c.dom.map == two_cell_codomain(a).map)) continue;
      for (const TwoCell& b : cells)
        for (const TwoCell& d : cells) {
          if (!(d.dom.map == two_cell_codomain(b).map)) continue;
          TwoCell lhs = hcompose(vcompose(d, b), vcompose(c, a));
          TwoCell rhs = vcompose(hcompose(d, c), hcompose(b, a));
          CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("both horizontal inverse formulas agree on Aut(S3)") {
  FiniteGroup s3 = make_symmetric3();
  for (const TwoCell& c : all_two_cells(s3)) {
    TwoCell inv = two_cell_hinverse(c);  // throws if the formulas disagree
    // Recompute both witness formulas from scratch.
    GroupIso finv = invert_group_iso(c.dom);
    GroupIso ginv = invert_group_iso(two_cell_codomain(c));
    int winv = s3.inv(c.witness);
    CHECK(finv.apply(winv) == ginv.apply(winv));
    CHECK(inv.dom == finv);
    CHECK(inv.witness == finv.apply(winv));
    // It really inverts horizontally, and runs to the inverse codomain.
    CHECK(two_cell_codomain(inv) == ginv);
    TwoCell round = hcompose(inv, c);
    CHECK(round.dom.map == identity_iso(s3).map);
    CHECK(round.witness == 0);
    CHECK(two_cell_codomain(round).map == identity_iso(s3).map);
    TwoCell round2 = hcompose(c, inv);
    CHECK(round2.dom.map == identity_iso(s3).map);
    CHECK(round2.witness == 0);
  }
}

TEST_CASE("whiskering is horizontal composition with identities") {
  FiniteGroup s3 = make_symmetric3();
  std::vector<GroupIso> autos = automorphisms(s3);
  for (const TwoCell& c : all_two_cells(s3))
    for (const GroupIso& g : autos) {
      CHECK(whisker_left(g, c) == hcompose(identity_two_cell(g), c));
      CHECK(whisker_right(c, g) == hcompose(c, identity_two_cell(g)));
    }
}

TEST_CASE("naturality of every 2-cell of Aut(S3)") {
  FiniteGroup s3 = make_symmetric3();
  for (const TwoCell& c : all_two_cells(s3)) {
    GroupIso cod = two_cell_codomain(c);
    for (int k = 0; k < s3.order; ++k) {
      int lhs = s3.mul(c.witness, c.dom.map[k]);
      int rhs = s3.mul(cod.map[k], c.witness);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("build_aut materializes Aut(Z3)") {
  AutTwoGroupoid aut = build_aut(make_family({make_cyclic(3)}));
  CHECK(validate_aut(aut).empty());
  CHECK(aut.one_cells.size() == 2);
  CHECK(aut.two_cells.size() == 6);
  CHECK(aut.identity_one_cell.size() == 1);
  int id = aut.identity_one_cell[0];
  CHECK(aut.one_cells[id].map == std::vector<int>{0, 1, 2});
  for (int c = 0; c < (int)aut.one_cells.size(); ++c) {
    CHECK(aut.compose_one_cells(aut.invert_one_cell(c), c) == id);
    CHECK(aut.compose_one_cells(c, id) == c);
  }
}

TEST_CASE("build_aut on a two-object family with different members") {
  AutTwoGroupoid aut =
      build_aut(make_family({make_cyclic(2), make_cyclic(2)}));
  CHECK(validate_aut(aut).empty());
  // Equal-order members are isomorphic, so there are cross cells too.
  CHECK(aut.num_objects() == 2);
  CHECK(aut.one_cells.size() == 4);
  CHECK(aut.one_cells_by_ends.at({0, 1}).size() == 1);

  AutTwoGroupoid apart = build_aut(make_family({make_cyclic(2), make_cyclic(3)}));
  CHECK(validate_aut(apart).empty());
  CHECK(apart.one_cells.size() == 3);  // id, id, and the Z3 inversion
  CHECK(apart.one_cells_by_ends.count({0, 1}) == 0);
}

TEST_CASE("aut guard rejects oversized members") {
  GroupFamily big = make_family({make_direct_product(
      make_direct_product(make_cyclic(5), make_cyclic(5)), make_cyclic(2))});
  CHECK_THROWS_AS(build_aut(big), StructuralError);
}
