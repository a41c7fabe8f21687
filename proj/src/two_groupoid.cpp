#include "gcoh/two_groupoid.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gcoh {

Report validate_two_cell(const TwoCell& c) {
  Report report = validate_group_iso(c.dom);
  if (!report.empty()) return report;
  if (c.witness < 0 || c.witness >= c.dom.target.order) {
    report.push_back({"witness", "witness " + std::to_string(c.witness) +
                                     " is not an element of the target group"});
  }
  return report;
}

TwoCell identity_two_cell(const GroupIso& f) { return TwoCell{f, 0}; }

GroupIso two_cell_codomain(const TwoCell& c) {
  GroupIso g = c.dom;
  const FiniteGroup& h = c.dom.target;
  for (int u = 0; u < c.dom.source.order; ++u) {
    g.map[u] = h.mul(h.mul(c.witness, c.dom.map[u]), h.inv(c.witness));
  }
  return g;
}

TwoCell vcompose(const TwoCell& second, const TwoCell& first) {
  if (second.dom != two_cell_codomain(first)) {
    throw StructuralError(
        "vcompose: domain of second 2-cell differs from codomain of first");
  }
  return TwoCell{first.dom,
                 first.dom.target.mul(second.witness, first.witness)};
}

TwoCell hcompose(const TwoCell& second, const TwoCell& first) {
  if (!same_group(second.dom.source, first.dom.target)) {
    throw StructuralError(
        "hcompose: middle groups of the two 2-cells differ");
  }
  GroupIso comp = compose_group_iso(second.dom, first.dom);
  int witness = second.dom.target.mul(second.witness,
                                      second.dom.map[first.witness]);
  return TwoCell{comp, witness};
}

TwoCell two_cell_vinverse(const TwoCell& c) {
  return TwoCell{two_cell_codomain(c), c.dom.target.inv(c.witness)};
}

TwoCell two_cell_hinverse(const TwoCell& c) {
  // The result runs from dom^-1 to cod^-1; its witness can be computed by
  // pushing w^-1 through either end, and the two answers coincide because
  // cod^-1 = dom^-1 o conj(w^-1) and conjugation fixes w^-1 itself.
  GroupIso finv = invert_group_iso(c.dom);
  GroupIso ginv = invert_group_iso(two_cell_codomain(c));
  int inv_in_target = c.dom.target.inv(c.witness);
  int via_f = finv.map[inv_in_target];
  int via_g = ginv.map[inv_in_target];
  if (via_f != via_g) {
    throw TheoremError("hinverse: the two witness formulas disagree");
  }
  return TwoCell{finv, via_f};
}

TwoCell whisker_left(const GroupIso& g, const TwoCell& c) {
  return hcompose(TwoCell{g, 0}, c);
}

TwoCell whisker_right(const TwoCell& c, const GroupIso& f) {
  return hcompose(c, TwoCell{f, 0});
}

int AutTwoGroupoid::one_cell_index(int src, int tgt,
                                   const std::vector<int>& map) const {
  auto it = one_cells_by_ends.find({src, tgt});
  if (it == one_cells_by_ends.end()) return -1;
  for (int idx : it->second) {
    if (one_cells[idx].map == map) return idx;
  }
  return -1;
}

int AutTwoGroupoid::two_cell_index(int one_cell, int witness) const {
  const FiniteGroup& tgt = family.groups[one_cells[one_cell].tgt];
  // Two-cells are stored grouped by 1-cell in order, |target group| each.
  int index = 0;
  for (int c = 0; c < one_cell; ++c) {
    index += family.groups[one_cells[c].tgt].order;
  }
  if (witness < 0 || witness >= tgt.order) return -1;
  return index + witness;
}

int AutTwoGroupoid::compose_one_cells(int second, int first) const {
  const OneCell& g = one_cells[second];
  const OneCell& f = one_cells[first];
  if (g.src != f.tgt) {
    throw StructuralError("compose_one_cells: 1-cells are not composable");
  }
  std::vector<int> map(f.map.size());
  for (std::size_t x = 0; x < f.map.size(); ++x) map[x] = g.map[f.map[x]];
  int idx = one_cell_index(f.src, g.tgt, map);
  if (idx < 0) {
    throw StructuralError("compose_one_cells: composite not in the structure");
  }
  return idx;
}

int AutTwoGroupoid::invert_one_cell(int c) const {
  const OneCell& f = one_cells[c];
  std::vector<int> map(f.map.size());
  for (std::size_t x = 0; x < f.map.size(); ++x) map[f.map[x]] = (int)x;
  int idx = one_cell_index(f.tgt, f.src, map);
  if (idx < 0) {
    throw StructuralError("invert_one_cell: inverse not in the structure");
  }
  return idx;
}

GroupIso AutTwoGroupoid::one_cell_iso(int c) const {
  const OneCell& f = one_cells[c];
  return GroupIso{family.groups[f.src], family.groups[f.tgt], f.map};
}

TwoCell AutTwoGroupoid::two_cell_value(int t) const {
  const TwoCellRef& ref = two_cells[t];
  return TwoCell{one_cell_iso(ref.one_cell), ref.witness};
}

AutTwoGroupoid build_aut(const GroupFamily& family) {
  Report fam_report = validate_family(family);
  if (!fam_report.empty()) {
    throw StructuralError("build_aut: invalid family: " +
                          fam_report.front().message);
  }
  for (const FiniteGroup& g : family.groups) {
    if (g.order > kMaxAutGroupOrder) {
      throw StructuralError("build_aut: group of order " +
                            std::to_string(g.order) + " exceeds the cap of " +
                            std::to_string(kMaxAutGroupOrder));
    }
  }

  AutTwoGroupoid aut;
  aut.family = family;
  aut.identity_one_cell.assign(family.size(), -1);

  for (int src = 0; src < family.size(); ++src) {
    for (int tgt = 0; tgt < family.size(); ++tgt) {
      std::vector<GroupIso> isos =
          all_group_isos(family.groups[src], family.groups[tgt]);
      for (const GroupIso& iso : isos) {
        int idx = (int)aut.one_cells.size();
        aut.one_cells.push_back({src, tgt, iso.map});
        aut.one_cells_by_ends[{src, tgt}].push_back(idx);
        if (src == tgt) {
          bool is_id = true;
          for (std::size_t x = 0; x < iso.map.size(); ++x) {
            if (iso.map[x] != (int)x) {
              is_id = false;
              break;
            }
          }
          if (is_id) aut.identity_one_cell[src] = idx;
        }
      }
    }
  }
  for (int v = 0; v < family.size(); ++v) {
    if (aut.identity_one_cell[v] < 0) {
      throw StructuralError("build_aut: identity 1-cell missing (corrupt)");
    }
  }
  for (int c = 0; c < (int)aut.one_cells.size(); ++c) {
    int order = family.groups[aut.one_cells[c].tgt].order;
    for (int w = 0; w < order; ++w) {
      aut.two_cells.push_back({c, w});
    }
  }
  return aut;
}

Report validate_aut(const AutTwoGroupoid& aut) {
  Report report;
  // 1-cells closed under composition and inverse; identities present.
  for (int c = 0; c < (int)aut.one_cells.size(); ++c) {
    GroupIso iso = aut.one_cell_iso(c);
    Report iso_report = validate_group_iso(iso);
    for (const Violation& v : iso_report) {
      report.push_back({"one-cell", "1-cell " + std::to_string(c) + ": " +
                                        v.message});
    }
    if (!iso_report.empty()) continue;
    if (aut.invert_one_cell(c) < 0) {
      report.push_back({"one-cell",
                        "1-cell " + std::to_string(c) + " has no inverse"});
    }
  }
  if (!report.empty()) return report;
  for (int a = 0; a < (int)aut.one_cells.size(); ++a) {
    for (int b = 0; b < (int)aut.one_cells.size(); ++b) {
      if (aut.one_cells[b].src != aut.one_cells[a].tgt) continue;
      int ba = aut.compose_one_cells(b, a);
      if (ba < 0) {
        report.push_back({"one-cell", "composite of 1-cells " +
                                          std::to_string(b) + " and " +
                                          std::to_string(a) + " missing"});
      }
    }
  }
  // 2-cell count: sum over 1-cells of |target group|.
  std::size_t expected = 0;
  for (const AutTwoGroupoid::OneCell& c : aut.one_cells) {
    expected += (std::size_t)aut.family.groups[c.tgt].order;
  }
  if (aut.two_cells.size() != expected) {
    report.push_back({"two-cell",
                      "expected " + std::to_string(expected) + " 2-cells, found " +
                          std::to_string(aut.two_cells.size())});
  }
  // Spot-check indices round-trip.
  for (int t = 0; t < (int)aut.two_cells.size(); ++t) {
    const AutTwoGroupoid::TwoCellRef& ref = aut.two_cells[t];
    if (aut.two_cell_index(ref.one_cell, ref.witness) != t) {
      report.push_back({"two-cell",
                        "2-cell index mismatch at " + std::to_string(t)});
      break;
    }
  }
  return report;
}

}  // namespace gcoh
