#include "gcoh/cocycle.hpp"

#include <algorithm>
#include <array>
#include <string>
#include <tuple>

namespace gcoh {
namespace {

std::string pair_name(int v, int u) {
  return "(" + std::to_string(v) + "," + std::to_string(u) + ")";
}

// Composable triples (w, v, u): "u first, then v, then w".
std::vector<std::array<int, 3>> composable_triples(const FiniteGroupoid& g) {
  std::vector<std::array<int, 3>> out;
  for (int w = 0; w < g.num_arrows(); ++w) {
    for (int v = 0; v < g.num_arrows(); ++v) {
      if (!g.composable(w, v)) continue;
      for (int u = 0; u < g.num_arrows(); ++u) {
        if (g.composable(v, u)) out.push_back({w, v, u});
      }
    }
  }
  return out;
}

// Shape checks shared by every cocycle-shaped candidate: base and family
// valid and aligned, action entries are isos, factor keys are exactly the
// composable pairs with in-range values.  Returns false if the deeper
// axioms should not even be attempted.
bool check_carrier(const WeakAction& w, Report& report) {
  Report base_report = validate_groupoid(w.base);
  for (const Violation& v : base_report)
    report.push_back({"structure", "base: " + v.message});
  Report family_report = validate_family(w.family);
  for (const Violation& v : family_report)
    report.push_back({"structure", "family: " + v.message});
  if (!report.empty()) return false;
  if (!family_matches_base(w.family, w.base)) {
    report.push_back({"structure", "family is not indexed by the base objects"});
    return false;
  }
  if ((int)w.action.size() != w.base.num_arrows()) {
    report.push_back({"structure", "action table has " +
                                       std::to_string(w.action.size()) +
                                       " entries for " +
                                       std::to_string(w.base.num_arrows()) +
                                       " arrows"});
    return false;
  }
  bool isos_ok = true;
  for (int u = 0; u < w.base.num_arrows(); ++u) {
    Report iso_report = validate_group_iso(w.iso_of(u));
    for (const Violation& v : iso_report) {
      report.push_back({"action",
                        "F(" + std::to_string(u) + "): " + v.message});
      isos_ok = false;
    }
  }
  std::vector<std::pair<int, int>> pairs = composable_pairs(w.base);
  bool factor_ok = true;
  if (w.factor.size() != pairs.size()) factor_ok = false;
  for (const std::pair<int, int>& p : pairs) {
    auto it = w.factor.find(p);
    if (it == w.factor.end()) {
      factor_ok = false;
      continue;
    }
    int order = w.family.at(w.base.tgt(p.first)).order;
    if (it->second < 0 || it->second >= order) factor_ok = false;
  }
  if (!factor_ok) {
    report.push_back(
        {"factor", "sigma is not a total in-range map on composable pairs"});
  }
  return isos_ok && factor_ok;
}

// Conditions 3 and 4 only (carrier and normalization handled elsewhere).
void check_composition_conditions(const WeakAction& w, Report& report) {
  for (const std::pair<int, int>& p : composable_pairs(w.base)) {
    int v = p.first, u = p.second;
    const FiniteGroup& k_top = w.family.at(w.base.tgt(v));
    int vu = w.base.compose(v, u);
    int s = w.sigma(v, u);
    const FiniteGroup& k_bot = w.family.at(w.base.src(u));
    for (int x = 0; x < k_bot.order; ++x) {
      int lhs = k_top.mul(s, w.act(vu, x));
      int rhs = k_top.mul(w.act(v, w.act(u, x)), s);
      if (lhs != rhs) {
        report.push_back({"condition-3",
                          "sigma" + pair_name(v, u) +
                              " does not intertwine F(vu) and F(v)F(u) at x=" +
                              std::to_string(x)});
        break;
      }
    }
  }
  for (const std::array<int, 3>& t : composable_triples(w.base)) {
    int wa = t[0], v = t[1], u = t[2];
    const FiniteGroup& k = w.family.at(w.base.tgt(wa));
    int wv = w.base.compose(wa, v);
    int vu = w.base.compose(v, u);
    int lhs = k.mul(w.sigma(wa, v), w.sigma(wv, u));
    int rhs = k.mul(w.act(wa, w.sigma(v, u)), w.sigma(wa, vu));
    if (lhs != rhs) {
      report.push_back({"condition-4",
                        "cocycle equation fails on triple (" +
                            std::to_string(wa) + "," + std::to_string(v) +
                            "," + std::to_string(u) + ")"});
    }
  }
}

bool identity_action_entry(const WeakAction& w, int arrow) {
  const std::vector<int>& map = w.action[arrow];
  for (std::size_t x = 0; x < map.size(); ++x) {
    if (map[x] != (int)x) return false;
  }
  return true;
}

}  // namespace

int WeakAction::sigma(int v, int u) const {
  auto it = factor.find({v, u});
  if (it == factor.end()) {
    throw StructuralError("sigma(" + std::to_string(v) + "," +
                          std::to_string(u) + ") is not defined");
  }
  return it->second;
}

GroupIso WeakAction::iso_of(int arrow) const {
  return GroupIso{family.at(base.src(arrow)), family.at(base.tgt(arrow)),
                  action[arrow]};
}

Report validate_cocycle(const WeakAction& w) {
  Report report;
  if (!check_carrier(w, report)) return report;
  for (int u = 0; u < w.base.num_arrows(); ++u) {
    if (w.base.is_identity(u) && !identity_action_entry(w, u)) {
      report.push_back({"condition-1",
                        "F of identity arrow " + std::to_string(u) +
                            " is not the identity iso"});
    }
  }
  for (const std::pair<int, int>& p : composable_pairs(w.base)) {
    if ((w.base.is_identity(p.first) || w.base.is_identity(p.second)) &&
        w.sigma(p.first, p.second) != 0) {
      report.push_back({"normalization",
                        "sigma" + pair_name(p.first, p.second) +
                            " on an identity pair is not the identity"});
    }
  }
  if (!report.empty()) return report;
  check_composition_conditions(w, report);
  return report;
}

Report validate_cochain(const Cochain1& t) {
  Report report;
  Report base_report = validate_groupoid(t.base);
  for (const Violation& v : base_report)
    report.push_back({"structure", "base: " + v.message});
  Report family_report = validate_family(t.family);
  for (const Violation& v : family_report)
    report.push_back({"structure", "family: " + v.message});
  if (!report.empty()) return report;
  if (!family_matches_base(t.family, t.base)) {
    report.push_back({"structure", "family is not indexed by the base objects"});
    return report;
  }
  if ((int)t.tau.size() != t.base.num_arrows()) {
    report.push_back({"structure", "tau has " + std::to_string(t.tau.size()) +
                                       " entries for " +
                                       std::to_string(t.base.num_arrows()) +
                                       " arrows"});
    return report;
  }
  for (int u = 0; u < t.base.num_arrows(); ++u) {
    int order = t.family.at(t.base.tgt(u)).order;
    if (t.tau[u] < 0 || t.tau[u] >= order) {
      report.push_back({"structure",
                        "tau(" + std::to_string(u) + ") out of range"});
    } else if (t.base.is_identity(u) && t.tau[u] != 0) {
      report.push_back({"normalization",
                        "tau of identity arrow " + std::to_string(u) +
                            " is not the identity element"});
    }
  }
  return report;
}

Report validate_morphism(const ActionMorphism& m) {
  Report report;
  if (m.source.base != m.target.base || m.source.family != m.target.family) {
    report.push_back({"structure", "source and target share no carrier"});
    return report;
  }
  if (m.tau.base != m.source.base || m.tau.family != m.source.family) {
    report.push_back({"structure", "tau lives on a different carrier"});
    return report;
  }
  Report source_report = validate_cocycle(m.source);
  for (const Violation& v : source_report)
    report.push_back({"structure", "source: " + v.message});
  Report target_report = validate_cocycle(m.target);
  for (const Violation& v : target_report)
    report.push_back({"structure", "target: " + v.message});
  Report tau_report = validate_cochain(m.tau);
  for (const Violation& v : tau_report)
    report.push_back({v.category, "tau: " + v.message});
  if (!report.empty()) return report;

  const FiniteGroupoid& base = m.source.base;
  for (int u = 0; u < base.num_arrows(); ++u) {
    const FiniteGroup& k = m.source.family.at(base.tgt(u));
    const FiniteGroup& k_src = m.source.family.at(base.src(u));
    int t = m.tau.tau[u];
    for (int x = 0; x < k_src.order; ++x) {
      if (k.mul(t, m.source.act(u, x)) != k.mul(m.target.act(u, x), t)) {
        report.push_back({"naturality",
                          "tau(" + std::to_string(u) +
                              ") fails naturality at x=" + std::to_string(x)});
        break;
      }
    }
  }
  for (const std::pair<int, int>& p : composable_pairs(base)) {
    int v = p.first, u = p.second;
    const FiniteGroup& k = m.source.family.at(base.tgt(v));
    int vu = base.compose(v, u);
    int lhs = k.mul(k.mul(m.target.act(v, m.tau.tau[u]), m.tau.tau[v]),
                    m.source.sigma(v, u));
    int rhs = k.mul(m.target.sigma(v, u), m.tau.tau[vu]);
    if (lhs != rhs) {
      report.push_back({"coherence",
                        "tau fails coherence on the pair " + pair_name(v, u)});
    }
  }
  return report;
}

WeakAction make_trivial_action(const FiniteGroupoid& base,
                               const GroupFamily& family) {
  if (!family_matches_base(family, base)) {
    throw StructuralError("trivial action: family does not match the base");
  }
  WeakAction w;
  w.base = base;
  w.family = family;
  w.action.resize(base.num_arrows());
  for (int u = 0; u < base.num_arrows(); ++u) {
    const FiniteGroup& a = family.at(base.src(u));
    const FiniteGroup& b = family.at(base.tgt(u));
    if (!same_group(a, b)) {
      throw StructuralError(
          "trivial action: arrow " + std::to_string(u) +
          " connects objects with different multiplication tables");
    }
    w.action[u].resize(a.order);
    for (int x = 0; x < a.order; ++x) w.action[u][x] = x;
  }
  for (const std::pair<int, int>& p : composable_pairs(base)) w.factor[p] = 0;
  return w;
}

WeakAction weak_identity_upgrade(const WeakAction& w) {
  Report report;
  if (!check_carrier(w, report)) {
    throw StructuralError("weak identity upgrade: " + report.front().message);
  }
  for (int u = 0; u < w.base.num_arrows(); ++u) {
    if (w.base.is_identity(u) && !identity_action_entry(w, u)) {
      throw StructuralError(
          "weak identity upgrade: F does not preserve identities");
    }
  }
  for (int a = 0; a < w.base.num_objects(); ++a) {
    int one = w.base.identity[a];
    if (w.sigma(one, one) != 0) {
      throw StructuralError(
          "weak identity upgrade: sigma(1,1) is not the identity at object " +
          std::to_string(a));
    }
  }
  Report conditions;
  check_composition_conditions(w, conditions);
  if (!conditions.empty()) {
    throw StructuralError("weak identity upgrade: " +
                          conditions.front().message);
  }
  for (const std::pair<int, int>& p : composable_pairs(w.base)) {
    bool has_identity =
        w.base.is_identity(p.first) || w.base.is_identity(p.second);
    if (has_identity && w.sigma(p.first, p.second) != 0) {
      throw TheoremError(
          "weak identity upgrade: sigma" + pair_name(p.first, p.second) +
          " on an identity pair is not forced to the identity");
    }
  }
  return w;
}

namespace {

// Candidate scaffolding shared by the cocycle and weakly-normalized
// enumerations: choose an iso per arrow and a sigma per free pair, in
// canonical odometer order, and filter by the requested conditions.
struct CandidateSpace {
  const FiniteGroupoid& base;
  const GroupFamily& family;
  std::vector<std::vector<GroupIso>> iso_choices;  // per arrow
  std::vector<std::pair<int, int>> free_pairs;     // sigma varies here
  std::vector<std::pair<int, int>> pinned_pairs;   // sigma = 0 here

  CandidateSpace(const FiniteGroupoid& b, const GroupFamily& fam,
                 bool pin_all_identity_pairs)
      : base(b), family(fam) {
    iso_choices.resize(base.num_arrows());
    for (int u = 0; u < base.num_arrows(); ++u) {
      if (base.is_identity(u)) {
        iso_choices[u].push_back(identity_iso(family.at(base.src(u))));
      } else {
        iso_choices[u] =
            all_group_isos(family.at(base.src(u)), family.at(base.tgt(u)));
      }
    }
    for (const std::pair<int, int>& p : composable_pairs(base)) {
      bool has_identity =
          base.is_identity(p.first) || base.is_identity(p.second);
      bool pinned = pin_all_identity_pairs
                        ? has_identity
                        : (base.is_identity(p.first) &&
                           base.is_identity(p.second));
      (pinned ? pinned_pairs : free_pairs).push_back(p);
    }
  }

  bool empty() const {
    for (const std::vector<GroupIso>& choices : iso_choices) {
      if (choices.empty()) return true;
    }
    return false;
  }
};

template <typename Accept>
void scan_candidates(const CandidateSpace& space, Budget& budget,
                     Accept&& accept) {
  if (space.empty()) return;
  const FiniteGroupoid& base = space.base;
  int narrows = base.num_arrows();
  int npairs = (int)space.free_pairs.size();

  std::vector<int> iso_pick(narrows, 0);
  for (;;) {
    WeakAction w;
    w.base = base;
    w.family = space.family;
    w.action.resize(narrows);
    for (int u = 0; u < narrows; ++u)
      w.action[u] = space.iso_choices[u][iso_pick[u]].map;
    for (const std::pair<int, int>& p : space.pinned_pairs) w.factor[p] = 0;

    std::vector<int> sigma_pick(npairs, 0);
    for (;;) {
      budget.charge();
      for (int i = 0; i < npairs; ++i)
        w.factor[space.free_pairs[i]] = sigma_pick[i];
      Report conditions;
      check_composition_conditions(w, conditions);
      if (conditions.empty()) accept(w);

      int i = npairs - 1;
      while (i >= 0) {
        int order = space.family.at(base.tgt(space.free_pairs[i].first)).order;
        if (++sigma_pick[i] < order) break;
        sigma_pick[i] = 0;
        --i;
      }
      if (i < 0) break;
    }

    int u = narrows - 1;
    while (u >= 0) {
      if (++iso_pick[u] < (int)space.iso_choices[u].size()) break;
      iso_pick[u] = 0;
      --u;
    }
    if (u < 0) break;
  }
}

}  // namespace

std::vector<WeakAction> enumerate_weakly_normalized_candidates(
    const FiniteGroupoid& base, const GroupFamily& family, Budget& budget) {
  check_size_guard(base);
  CandidateSpace space(base, family, /*pin_all_identity_pairs=*/false);
  std::vector<WeakAction> out;
  scan_candidates(space, budget,
                  [&](const WeakAction& w) { out.push_back(w); });
  return out;
}

std::vector<WeakAction> enumerate_cocycles(const FiniteGroupoid& base,
                                           const GroupFamily& family,
                                           Budget& budget) {
  check_size_guard(base);
  if (!family_matches_base(family, base)) {
    throw StructuralError("enumerate_cocycles: family does not match base");
  }
  CandidateSpace space(base, family, /*pin_all_identity_pairs=*/true);
  std::vector<WeakAction> out;
  scan_candidates(space, budget,
                  [&](const WeakAction& w) { out.push_back(w); });
  return out;
}

WeakAction nabla(const Cochain1& t, const WeakAction& w) {
  if (t.base != w.base || t.family != w.family) {
    throw StructuralError("nabla: cochain and action live on different carriers");
  }
  WeakAction out;
  out.base = w.base;
  out.family = w.family;
  out.action.resize(w.base.num_arrows());
  for (int u = 0; u < w.base.num_arrows(); ++u) {
    const FiniteGroup& k = w.family.at(w.base.tgt(u));
    const FiniteGroup& k_src = w.family.at(w.base.src(u));
    out.action[u].resize(k_src.order);
    for (int x = 0; x < k_src.order; ++x) {
      out.action[u][x] =
          k.mul(k.mul(t.tau[u], w.act(u, x)), k.inv(t.tau[u]));
    }
  }
  for (const std::pair<int, int>& p : composable_pairs(w.base)) {
    int v = p.first, u = p.second;
    const FiniteGroup& k = w.family.at(w.base.tgt(v));
    int vu = w.base.compose(v, u);
    int value = k.mul(t.tau[v], w.act(v, t.tau[u]));
    value = k.mul(value, w.sigma(v, u));
    value = k.mul(value, k.inv(t.tau[vu]));
    out.factor[p] = value;
  }
  return out;
}

ActionMorphism identity_morphism(const WeakAction& w) {
  Cochain1 t;
  t.base = w.base;
  t.family = w.family;
  t.tau.assign(w.base.num_arrows(), 0);
  return ActionMorphism{w, w, t};
}

ActionMorphism compose_morphisms(const ActionMorphism& second,
                                 const ActionMorphism& first) {
  if (first.target != second.source) {
    throw StructuralError(
        "compose_morphisms: target of first differs from source of second");
  }
  Cochain1 t;
  t.base = first.source.base;
  t.family = first.source.family;
  t.tau.resize(t.base.num_arrows());
  for (int u = 0; u < t.base.num_arrows(); ++u) {
    const FiniteGroup& k = t.family.at(t.base.tgt(u));
    t.tau[u] = k.mul(second.tau.tau[u], first.tau.tau[u]);
  }
  return ActionMorphism{first.source, second.target, t};
}

ActionMorphism invert_morphism(const ActionMorphism& m) {
  Cochain1 t;
  t.base = m.source.base;
  t.family = m.source.family;
  t.tau.resize(t.base.num_arrows());
  for (int u = 0; u < t.base.num_arrows(); ++u) {
    const FiniteGroup& k = t.family.at(t.base.tgt(u));
    t.tau[u] = k.inv(m.tau.tau[u]);
  }
  return ActionMorphism{m.target, m.source, t};
}

std::vector<Cochain1> enumerate_cochains(const FiniteGroupoid& base,
                                         const GroupFamily& family,
                                         Budget& budget) {
  check_size_guard(base);
  if (!family_matches_base(family, base)) {
    throw StructuralError("enumerate_cochains: family does not match base");
  }
  std::vector<int> free_arrows;
  for (int u = 0; u < base.num_arrows(); ++u) {
    if (!base.is_identity(u)) free_arrows.push_back(u);
  }
  std::vector<Cochain1> out;
  Cochain1 t;
  t.base = base;
  t.family = family;
  t.tau.assign(base.num_arrows(), 0);
  std::vector<int> pick(free_arrows.size(), 0);
  for (;;) {
    budget.charge();
    for (std::size_t i = 0; i < free_arrows.size(); ++i)
      t.tau[free_arrows[i]] = pick[i];
    out.push_back(t);
    int i = (int)free_arrows.size() - 1;
    while (i >= 0) {
      int order = family.at(base.tgt(free_arrows[i])).order;
      if (++pick[i] < order) break;
      pick[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::optional<Cochain1> cohomologous(const WeakAction& w1,
                                     const WeakAction& w2, Budget& budget) {
  if (w1.base != w2.base || w1.family != w2.family) {
    throw StructuralError("cohomologous: actions live on different carriers");
  }
  for (const Cochain1& t : enumerate_cochains(w1.base, w1.family, budget)) {
    budget.charge();
    if (nabla(t, w1) == w2) return t;
  }
  return std::nullopt;
}

H2Result h2(const FiniteGroupoid& base, const GroupFamily& family,
            Budget& budget, bool with_witnesses) {
  H2Result result;
  result.cocycles = enumerate_cocycles(base, family, budget);
  int n = (int)result.cocycles.size();
  if (n == 0) return result;

  std::map<std::pair<std::vector<std::vector<int>>,
                     std::map<std::pair<int, int>, int>>,
           int>
      index_of;
  for (int i = 0; i < n; ++i) {
    index_of[{result.cocycles[i].action, result.cocycles[i].factor}] = i;
  }

  std::vector<int> parent(n);
  for (int i = 0; i < n; ++i) parent[i] = i;
  auto find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };

  std::vector<Cochain1> cochains = enumerate_cochains(base, family, budget);
  for (int i = 0; i < n; ++i) {
    for (const Cochain1& t : cochains) {
      budget.charge();
      WeakAction image = nabla(t, result.cocycles[i]);
      auto it = index_of.find({image.action, image.factor});
      if (it == index_of.end()) {
        throw TheoremError(
            "h2: coboundary image of a valid cocycle is not in the "
            "enumeration (closure violation)");
      }
      unite(i, it->second);
    }
  }

  std::map<int, std::vector<int>> blocks;
  for (int i = 0; i < n; ++i) blocks[find(i)].push_back(i);
  result.class_of.assign(n, -1);
  std::vector<std::vector<int>> ordered;
  for (auto& [root, members] : blocks) {
    std::sort(members.begin(), members.end());
    ordered.push_back(members);
  }
  std::sort(ordered.begin(), ordered.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.front() < b.front();
            });
  for (int c = 0; c < (int)ordered.size(); ++c) {
    result.classes.push_back(ordered[c]);
    result.representatives.push_back(ordered[c].front());
    for (int member : ordered[c]) result.class_of[member] = c;
  }

  if (with_witnesses) {
    for (int c = 0; c < (int)result.classes.size(); ++c) {
      const WeakAction& rep = result.cocycles[result.representatives[c]];
      for (int member : result.classes[c]) {
        std::optional<Cochain1> t =
            cohomologous(rep, result.cocycles[member], budget);
        if (!t) {
          throw TheoremError(
              "h2: class member has no coboundary witness from its "
              "representative");
        }
        result.witnesses.emplace(member, *t);
      }
    }
  }
  return result;
}

}  // namespace gcoh
