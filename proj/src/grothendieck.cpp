#include "gcoh/grothendieck.hpp"

#include <algorithm>
#include <string>

namespace gcoh {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw StructuralError(msg);
}

void require_valid_cocycle(const WeakAction& w, const char* who) {
  Report r = validate_cocycle(w);
  if (!r.empty())
    throw StructuralError(std::string(who) + ": invalid weak action (" +
                          r.front().category + ": " + r.front().message + ")");
}

void require_valid_functor(const GroupoidFunctor& p, const char* who) {
  Report r = validate_functor(p);
  if (!r.empty())
    throw StructuralError(std::string(who) + ": invalid functor (" +
                          r.front().category + ": " + r.front().message + ")");
}

// Inverse of the object map of a bijective-on-objects functor.
std::vector<int> object_over(const GroupoidFunctor& p, const char* who) {
  require(is_bijective_on_objects(p),
          std::string(who) + ": functor is not bijective on objects");
  std::vector<int> over(p.codomain.num_objects(), -1);
  for (int x = 0; x < p.domain.num_objects(); ++x) over[p.object_map[x]] = x;
  return over;
}

}  // namespace

TwistedGroupoid twist(const WeakAction& w) {
  require_valid_cocycle(w, "twist");
  const FiniteGroupoid& base = w.base;

  long long count = 0;
  for (int f = 0; f < base.num_arrows(); ++f)
    count += w.family.at(base.tgt(f)).order;
  require(count <= kMaxArrows,
          "twist: twisted product would have " + std::to_string(count) +
              " arrows (max " + std::to_string(kMaxArrows) + ")");

  TwistedGroupoid out;
  FiniteGroupoid& t = out.total;
  t.objects = base.objects;
  for (int f = 0; f < base.num_arrows(); ++f) {
    for (int lam = 0; lam < w.family.at(base.tgt(f)).order; ++lam) {
      int id = (int)out.arrow_pairs.size();
      out.arrow_pairs.push_back({f, lam});
      out.arrow_index[{f, lam}] = id;
      t.arrows.push_back({base.src(f), base.tgt(f)});
    }
  }
  int n = (int)t.arrows.size();

  t.identity.assign(base.num_objects(), -1);
  for (int x = 0; x < base.num_objects(); ++x)
    t.identity[x] = out.arrow_index.at({base.identity[x], 0});

  t.compose_table.assign(n, std::vector<int>(n, -1));
  t.inverse.assign(n, -1);
  for (int gid = 0; gid < n; ++gid) {
    auto [g, mu] = out.arrow_pairs[gid];
    const FiniteGroup& kg = w.family.at(base.tgt(g));
    for (int fid = 0; fid < n; ++fid) {
      auto [f, lam] = out.arrow_pairs[fid];
      if (!base.composable(g, f)) continue;
      int gf = base.compose(g, f);
      int value = kg.mul(kg.mul(mu, w.act(g, lam)), w.sigma(g, f));
      t.compose_table[gid][fid] = out.arrow_index.at({gf, value});
    }
    int ginv = base.inverse[g];
    const FiniteGroup& ks = w.family.at(base.src(g));
    int value = ks.inv(ks.mul(w.act(ginv, mu), w.sigma(ginv, g)));
    t.inverse[gid] = out.arrow_index.at({ginv, value});
  }

  // The two-sidedness of that inverse rests on F(f)(sigma(f^-1,f)) =
  // sigma(f,f^-1), which follows from conditions 3 and 4; verify it here so
  // the constructed groupoid is two-sided by checked fact, not by faith.
  for (int f = 0; f < base.num_arrows(); ++f) {
    int finv = base.inverse[f];
    if (w.act(f, w.sigma(finv, f)) != w.sigma(f, finv))
      throw TheoremError(
          "twist: F(f)(sigma(f^-1,f)) != sigma(f,f^-1) at base arrow " +
          std::to_string(f));
  }

  GroupoidFunctor& p = out.projection;
  p.domain = t;
  p.codomain = base;
  p.object_map = base.objects;
  p.arrow_map.resize(n);
  for (int a = 0; a < n; ++a) p.arrow_map[a] = out.arrow_pairs[a].first;

  out.kernel_arrows.assign(base.num_objects(), {});
  for (int x = 0; x < base.num_objects(); ++x) {
    const FiniteGroup& k = w.family.at(x);
    out.kernel_arrows[x].resize(k.order);
    for (int e = 0; e < k.order; ++e)
      out.kernel_arrows[x][e] = out.arrow_index.at({base.identity[x], e});
  }
  return out;
}

GroupoidFunctor twist_morphism(const ActionMorphism& m) {
  Report r = validate_morphism(m);
  if (!r.empty())
    throw StructuralError("twist_morphism: invalid morphism (" +
                          r.front().category + ": " + r.front().message + ")");
  TwistedGroupoid a = twist(m.source);
  TwistedGroupoid b = twist(m.target);

  GroupoidFunctor phi;
  phi.domain = a.total;
  phi.codomain = b.total;
  phi.object_map = a.total.objects;
  phi.arrow_map.resize(a.total.num_arrows());
  for (int id = 0; id < a.total.num_arrows(); ++id) {
    auto [f, lam] = a.arrow_pairs[id];
    const FiniteGroup& k = m.source.family.at(m.source.base.tgt(f));
    phi.arrow_map[id] = b.arrow_index.at({f, k.mul(lam, k.inv(m.tau.tau[f]))});
  }

  Report check = validate_functor(phi);
  if (!check.empty())
    throw TheoremError("twist_morphism: induced map is not a functor (" +
                       check.front().category + ": " + check.front().message +
                       ")");
  if (!is_bijective_on_arrows(phi) || !is_bijective_on_objects(phi))
    throw TheoremError("twist_morphism: induced functor is not bijective");
  return phi;
}

std::optional<LiftFailure> opfibration_failure(const GroupoidFunctor& p) {
  require_valid_functor(p, "opfibration_failure");
  for (int x = 0; x < p.domain.num_objects(); ++x) {
    int a = p.object_map[x];
    for (int f = 0; f < p.codomain.num_arrows(); ++f) {
      if (p.codomain.src(f) != a) continue;
      bool found = false;
      for (int e = 0; e < p.domain.num_arrows() && !found; ++e)
        found = p.domain.src(e) == x && p.arrow_map[e] == f;
      if (!found) return LiftFailure{x, f};
    }
  }
  return std::nullopt;
}

bool is_opfibration(const GroupoidFunctor& p) {
  return !opfibration_failure(p).has_value();
}

FiberResult fiber_subgroupoid(const GroupoidFunctor& p, int b) {
  require_valid_functor(p, "fiber_subgroupoid");
  require(b >= 0 && b < p.codomain.num_objects(),
          "fiber_subgroupoid: base object out of range");

  FiberResult out;
  std::vector<int> new_object(p.domain.num_objects(), -1);
  for (int x = 0; x < p.domain.num_objects(); ++x) {
    if (p.object_map[x] != b) continue;
    new_object[x] = (int)out.object_of.size();
    out.object_of.push_back(x);
  }
  int idb = p.codomain.identity[b];
  std::vector<int> new_arrow(p.domain.num_arrows(), -1);
  for (int e = 0; e < p.domain.num_arrows(); ++e) {
    if (p.arrow_map[e] != idb) continue;
    new_arrow[e] = (int)out.arrow_of.size();
    out.arrow_of.push_back(e);
  }

  FiniteGroupoid& g = out.fiber;
  g.objects.resize(out.object_of.size());
  for (int i = 0; i < (int)g.objects.size(); ++i) g.objects[i] = i;
  for (int e : out.arrow_of)
    g.arrows.push_back(
        {new_object[p.domain.src(e)], new_object[p.domain.tgt(e)]});
  g.identity.resize(g.num_objects());
  for (int i = 0; i < g.num_objects(); ++i)
    g.identity[i] = new_arrow[p.domain.identity[out.object_of[i]]];
  int n = g.num_arrows();
  g.compose_table.assign(n, std::vector<int>(n, -1));
  g.inverse.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int c = p.domain.compose_table[out.arrow_of[i]][out.arrow_of[j]];
      if (c >= 0) g.compose_table[i][j] = new_arrow[c];
    }
    g.inverse[i] = new_arrow[p.domain.inverse[out.arrow_of[i]]];
  }
  return out;
}

Report validate_cleavage(const Cleavage& c) {
  Report out;
  Report fr = validate_functor(c.fibration);
  for (const Violation& v : fr)
    out.push_back({"structure", "fibration: " + v.message});
  if (!out.empty()) return out;

  const GroupoidFunctor& p = c.fibration;
  if (!is_bijective_on_objects(p))
    out.push_back({"structure", "fibration is not bijective on objects"});
  if (auto fail = opfibration_failure(p))
    out.push_back({"fibration",
                   "no lift of base arrow " + std::to_string(fail->base_arrow) +
                       " at object " + std::to_string(fail->object)});
  if ((int)c.lift.size() != p.codomain.num_arrows()) {
    out.push_back({"structure", "lift table has wrong size"});
    return out;
  }
  for (int f = 0; f < p.codomain.num_arrows(); ++f) {
    int e = c.lift[f];
    if (e < 0 || e >= p.domain.num_arrows()) {
      out.push_back(
          {"structure", "lift of arrow " + std::to_string(f) + " out of range"});
      continue;
    }
    if (p.arrow_map[e] != f)
      out.push_back({"cleavage", "lift of arrow " + std::to_string(f) +
                                     " does not project back to it"});
    if (p.codomain.is_identity(f) && !p.domain.is_identity(e))
      out.push_back({"normalization",
                     "identity arrow " + std::to_string(f) +
                         " lifts to a non-identity arrow"});
  }
  return out;
}

Cleavage canonical_cleavage(const GroupoidFunctor& p) {
  require_valid_functor(p, "canonical_cleavage");
  std::vector<int> over = object_over(p, "canonical_cleavage");
  if (auto fail = opfibration_failure(p))
    throw StructuralError("canonical_cleavage: not an opfibration (no lift of "
                          "base arrow " +
                          std::to_string(fail->base_arrow) + " at object " +
                          std::to_string(fail->object) + ")");

  Cleavage c;
  c.fibration = p;
  c.lift.assign(p.codomain.num_arrows(), -1);
  for (int f = 0; f < p.codomain.num_arrows(); ++f) {
    if (p.codomain.is_identity(f)) {
      c.lift[f] = p.domain.identity[over[p.codomain.src(f)]];
      continue;
    }
    for (int e = 0; e < p.domain.num_arrows(); ++e) {
      if (p.arrow_map[e] == f) {
        c.lift[f] = e;
        break;
      }
    }
  }
  return c;
}

std::vector<Cleavage> enumerate_normalized_cleavages(const GroupoidFunctor& p,
                                                     Budget& budget) {
  Cleavage canonical = canonical_cleavage(p);  // also checks preconditions

  std::vector<int> free_arrows;
  std::vector<std::vector<int>> choices;
  for (int f = 0; f < p.codomain.num_arrows(); ++f) {
    if (p.codomain.is_identity(f)) continue;
    free_arrows.push_back(f);
    std::vector<int> lifts;
    for (int e = 0; e < p.domain.num_arrows(); ++e)
      if (p.arrow_map[e] == f) lifts.push_back(e);
    choices.push_back(std::move(lifts));
  }

  std::vector<Cleavage> out;
  std::vector<int> pick(free_arrows.size(), 0);
  for (;;) {
    budget.charge();
    Cleavage c = canonical;
    for (int i = 0; i < (int)free_arrows.size(); ++i)
      c.lift[free_arrows[i]] = choices[i][pick[i]];
    out.push_back(std::move(c));

    int i = (int)pick.size() - 1;
    while (i >= 0 && pick[i] + 1 == (int)choices[i].size()) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return out;
}

FiberedAction fiber_action_full(const GroupoidFunctor& p, const Cleavage& c) {
  require(c.fibration == p,
          "fiber_action: cleavage does not belong to this fibration");
  Report r = validate_cleavage(c);
  if (!r.empty())
    throw StructuralError("fiber_action: invalid cleavage (" +
                          r.front().category + ": " + r.front().message + ")");

  const FiniteGroupoid& base = p.codomain;
  const FiniteGroupoid& d = p.domain;
  std::vector<int> over = object_over(p, "fiber_action");

  FiberedAction out;
  out.kernel_arrows.assign(base.num_objects(), {});
  std::vector<std::vector<int>> element_of(
      base.num_objects(), std::vector<int>(d.num_arrows(), -1));
  std::vector<FiniteGroup> groups(base.num_objects());
  for (int a = 0; a < base.num_objects(); ++a) {
    int x = over[a];
    int ida = base.identity[a];
    std::vector<int>& loops = out.kernel_arrows[a];
    loops.push_back(d.identity[x]);
    for (int e = 0; e < d.num_arrows(); ++e)
      if (p.arrow_map[e] == ida && e != d.identity[x]) loops.push_back(e);
    int m = (int)loops.size();
    for (int k = 0; k < m; ++k) element_of[a][loops[k]] = k;
    FiniteGroup& g = groups[a];
    g.order = m;
    g.label = "K" + std::to_string(a);
    g.table.assign(m, std::vector<int>(m, -1));
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        g.table[i][j] = element_of[a][d.compose(loops[i], loops[j])];
  }

  WeakAction& w = out.action;
  w.base = base;
  w.family = make_family(groups);
  w.action.resize(base.num_arrows());
  for (int f = 0; f < base.num_arrows(); ++f) {
    int a = base.src(f), b = base.tgt(f);
    int lf = c.lift[f];
    w.action[f].resize(groups[a].order);
    for (int k = 0; k < groups[a].order; ++k) {
      int conj = d.compose(lf, d.compose(out.kernel_arrows[a][k], d.inverse[lf]));
      w.action[f][k] = element_of[b][conj];
    }
  }
  for (auto [v, u] : composable_pairs(base)) {
    int cobj = base.tgt(v);
    int vu = base.compose(v, u);
    int loop = d.compose(c.lift[v], d.compose(c.lift[u], d.inverse[c.lift[vu]]));
    w.factor[{v, u}] = element_of[cobj][loop];
  }

  Report check = validate_cocycle(w);
  if (!check.empty())
    throw TheoremError("fiber_action: extracted data is not a weak action (" +
                       check.front().category + ": " + check.front().message +
                       ")");
  return out;
}

WeakAction fiber_action(const GroupoidFunctor& p, const Cleavage& c) {
  return fiber_action_full(p, c).action;
}

GammaResult gamma(const GroupoidFunctor& p, const Cleavage& c) {
  FiberedAction fa = fiber_action_full(p, c);

  GammaResult out;
  out.action = fa.action;
  out.twisted = twist(fa.action);

  const FiniteGroupoid& d = p.domain;
  std::vector<std::vector<int>> element_of(
      p.codomain.num_objects(), std::vector<int>(d.num_arrows(), -1));
  for (int a = 0; a < p.codomain.num_objects(); ++a)
    for (int k = 0; k < (int)fa.kernel_arrows[a].size(); ++k)
      element_of[a][fa.kernel_arrows[a][k]] = k;

  GroupoidFunctor& g = out.functor;
  g.domain = d;
  g.codomain = out.twisted.total;
  g.object_map = p.object_map;
  g.arrow_map.resize(d.num_arrows());
  for (int e = 0; e < d.num_arrows(); ++e) {
    int f = p.arrow_map[e];
    int b = p.codomain.tgt(f);
    int loop = d.compose(e, d.inverse[c.lift[f]]);
    g.arrow_map[e] = out.twisted.arrow_index.at({f, element_of[b][loop]});
  }

  Report check = validate_functor(g);
  if (!check.empty())
    throw TheoremError("gamma: reconstruction is not a functor (" +
                       check.front().category + ": " + check.front().message +
                       ")");
  if (!is_bijective_on_arrows(g) || !is_bijective_on_objects(g))
    throw TheoremError("gamma: reconstruction functor is not bijective");
  for (int e = 0; e < d.num_arrows(); ++e)
    if (out.twisted.projection.arrow_map[g.arrow_map[e]] != p.arrow_map[e])
      throw TheoremError("gamma: reconstruction does not commute with the "
                         "projections at arrow " +
                         std::to_string(e));
  return out;
}

EquivalenceReport equivalence_check(const GroupoidFunctor& p, Budget& budget) {
  EquivalenceReport rep;
  std::vector<Cleavage> cleavages = enumerate_normalized_cleavages(p, budget);
  rep.cleavages = (int)cleavages.size();

  std::vector<WeakAction> actions;
  for (int i = 0; i < (int)cleavages.size(); ++i) {
    try {
      GammaResult g = gamma(p, cleavages[i]);
      actions.push_back(g.action);
    } catch (const TheoremError& err) {
      rep.reconstruction_ok = false;
      rep.notes.push_back("cleavage " + std::to_string(i) + ": " + err.what());
    }
  }
  if (!rep.reconstruction_ok) return rep;

  for (int i = 0; i < (int)actions.size(); ++i) {
    TwistedGroupoid t = twist(actions[i]);
    WeakAction back = fiber_action(t.projection, canonical_cleavage(t.projection));
    if (!(back == actions[i])) {
      rep.round_trip_ok = false;
      rep.notes.push_back("cleavage " + std::to_string(i) +
                          ": twist round-trip did not return the action "
                          "exactly");
    }
  }

  for (int i = 0; i < (int)actions.size(); ++i)
    for (int j = i + 1; j < (int)actions.size(); ++j)
      if (!cohomologous(actions[i], actions[j], budget)) {
        rep.cleavage_independent = false;
        rep.notes.push_back("cleavages " + std::to_string(i) + " and " +
                            std::to_string(j) +
                            " give non-cohomologous actions");
      }
  return rep;
}

}  // namespace gcoh
