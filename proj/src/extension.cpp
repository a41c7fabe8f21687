#include "gcoh/extension.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>

namespace gcoh {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw StructuralError(msg);
}

void require_valid_extension(const Extension& e, const char* who) {
  Report r = validate_extension(e);
  if (!r.empty())
    throw StructuralError(std::string(who) + ": invalid extension (" +
                          r.front().category + ": " + r.front().message + ")");
}

std::vector<int> object_over(const GroupoidFunctor& p) {
  std::vector<int> over(p.codomain.num_objects(), -1);
  for (int x = 0; x < p.domain.num_objects(); ++x) over[p.object_map[x]] = x;
  return over;
}

// arrow -> kernel element at its base object, -1 for non-kernel arrows.
std::vector<int> kernel_element_of(const Extension& e) {
  std::vector<int> elem(e.projection.domain.num_arrows(), -1);
  for (const std::vector<int>& arrows : e.kernel_arrows)
    for (int k = 0; k < (int)arrows.size(); ++k) elem[arrows[k]] = k;
  return elem;
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

}  // namespace

Report validate_extension(const Extension& e) {
  Report out;
  Report fr = validate_functor(e.projection);
  for (const Violation& v : fr)
    out.push_back({"structure", "projection: " + v.message});
  Report kr = validate_family(e.kernel);
  for (const Violation& v : kr)
    out.push_back({"structure", "kernel family: " + v.message});
  if (!out.empty()) return out;

  const FiniteGroupoid& total = e.projection.domain;
  const FiniteGroupoid& base = e.projection.codomain;
  if (!family_matches_base(e.kernel, base)) {
    out.push_back({"structure", "kernel family does not match the base"});
    return out;
  }
  if (!is_bijective_on_objects(e.projection))
    out.push_back({"structure", "projection is not bijective on objects"});
  if ((int)e.kernel_arrows.size() != base.num_objects()) {
    out.push_back({"structure", "kernel arrow table has wrong size"});
    return out;
  }
  if (!out.empty()) return out;

  if (auto fail = opfibration_failure(e.projection))
    out.push_back({"fibration",
                   "no lift of base arrow " + std::to_string(fail->base_arrow) +
                       " at object " + std::to_string(fail->object)});

  std::vector<int> over = object_over(e.projection);
  for (int a = 0; a < base.num_objects(); ++a) {
    const FiniteGroup& k = e.kernel.at(a);
    const std::vector<int>& arrows = e.kernel_arrows[a];
    std::string where = "at object " + std::to_string(a);
    if ((int)arrows.size() != k.order) {
      out.push_back({"kernel", "kernel arrow list has wrong size " + where});
      continue;
    }
    bool usable = true;
    for (int i : arrows)
      if (i < 0 || i >= total.num_arrows()) usable = false;
    if (!usable) {
      out.push_back({"kernel", "kernel arrow id out of range " + where});
      continue;
    }
    int ida = base.identity[a];
    std::vector<int> loops;
    for (int f = 0; f < total.num_arrows(); ++f)
      if (e.projection.arrow_map[f] == ida) loops.push_back(f);
    std::vector<int> sorted = arrows;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      out.push_back({"kernel", "kernel arrows repeat " + where});
    else if (sorted != loops)
      out.push_back({"kernel",
                     "kernel arrows are not exactly the loops over the "
                     "identity " +
                         where});
    if (arrows[0] != total.identity[over[a]])
      out.push_back(
          {"kernel", "kernel element 0 is not the identity arrow " + where});
    for (int i = 0; i < k.order && usable; ++i)
      for (int j = 0; j < k.order; ++j) {
        int c = total.compose_table[arrows[i]][arrows[j]];
        if (c != arrows[k.mul(i, j)]) {
          out.push_back({"kernel",
                         "kernel identification is not a homomorphism " +
                             where});
          usable = false;
          break;
        }
      }
  }

  for (int f = 0; f < base.num_arrows(); ++f) {
    bool hit = false;
    for (int i = 0; i < total.num_arrows() && !hit; ++i)
      hit = e.projection.arrow_map[i] == f;
    if (!hit)
      out.push_back({"exactness",
                     "no total arrow over base arrow " + std::to_string(f)});
  }
  std::vector<int> elem = kernel_element_of(e);
  for (int i = 0; i < total.num_arrows(); ++i)
    for (int j = 0; j < total.num_arrows(); ++j) {
      if (i == j || e.projection.arrow_map[i] != e.projection.arrow_map[j])
        continue;
      if (total.src(i) != total.src(j)) continue;
      int left = total.compose_table[j][total.inverse[i]];
      int right = total.compose_table[total.inverse[i]][j];
      if (left < 0 || elem[left] < 0 || right < 0 || elem[right] < 0) {
        out.push_back({"exactness",
                       "arrows " + std::to_string(i) + " and " +
                           std::to_string(j) +
                           " share an image but do not differ by a kernel "
                           "arrow"});
        i = total.num_arrows();
        break;
      }
    }
  return out;
}

Extension package_extension(const TwistedGroupoid& t,
                            const GroupFamily& kernel) {
  Extension e{t.projection, kernel, t.kernel_arrows};
  require_valid_extension(e, "package_extension");
  return e;
}

Report validate_extension_morphism(const ExtensionMorphism& m) {
  Report out;
  Report sr = validate_extension(m.source);
  for (const Violation& v : sr)
    out.push_back({"structure", "source: " + v.message});
  Report tr = validate_extension(m.target);
  for (const Violation& v : tr)
    out.push_back({"structure", "target: " + v.message});
  if (!out.empty()) return out;

  if (!(m.source.projection.codomain == m.target.projection.codomain)) {
    out.push_back({"structure", "extensions do not share a base"});
    return out;
  }
  if (m.source.kernel.size() != m.target.kernel.size()) {
    out.push_back({"structure", "kernel families differ"});
    return out;
  }
  for (int a = 0; a < m.source.kernel.size(); ++a)
    if (!same_group(m.source.kernel.at(a), m.target.kernel.at(a))) {
      out.push_back({"structure", "kernel families differ at object " +
                                      std::to_string(a)});
      return out;
    }
  if (!(m.functor.domain == m.source.projection.domain) ||
      !(m.functor.codomain == m.target.projection.domain)) {
    out.push_back({"structure", "functor does not connect the two totals"});
    return out;
  }
  Report fr = validate_functor(m.functor);
  for (const Violation& v : fr)
    out.push_back({"structure", "functor: " + v.message});
  if (!out.empty()) return out;

  for (int x = 0; x < m.functor.domain.num_objects(); ++x)
    if (m.target.projection.object_map[m.functor.object_map[x]] !=
        m.source.projection.object_map[x])
      out.push_back({"projection",
                     "object map does not match over object " +
                         std::to_string(x)});
  for (int e = 0; e < m.functor.domain.num_arrows(); ++e)
    if (m.target.projection.arrow_map[m.functor.arrow_map[e]] !=
        m.source.projection.arrow_map[e]) {
      out.push_back({"projection",
                     "arrow " + std::to_string(e) +
                         " changes its base image"});
      break;
    }
  for (int a = 0; a < (int)m.source.kernel_arrows.size(); ++a)
    for (int k = 0; k < (int)m.source.kernel_arrows[a].size(); ++k)
      if (m.functor.arrow_map[m.source.kernel_arrows[a][k]] !=
          m.target.kernel_arrows[a][k]) {
        out.push_back({"kernel", "kernel element " + std::to_string(k) +
                                     " at object " + std::to_string(a) +
                                     " is not fixed"});
        a = (int)m.source.kernel_arrows.size();
        break;
      }
  if (!is_bijective_on_objects(m.functor) || !is_bijective_on_arrows(m.functor))
    out.push_back({"invertibility", "extension morphism is not invertible"});
  return out;
}

std::optional<ExtensionMorphism> find_extension_morphism(const Extension& a,
                                                         const Extension& b,
                                                         Budget& budget) {
  require_valid_extension(a, "find_extension_morphism");
  require_valid_extension(b, "find_extension_morphism");
  require(a.projection.codomain == b.projection.codomain,
          "find_extension_morphism: extensions do not share a base");
  require(a.kernel.size() == b.kernel.size(),
          "find_extension_morphism: kernel families differ");
  for (int x = 0; x < a.kernel.size(); ++x)
    require(same_group(a.kernel.at(x), b.kernel.at(x)),
            "find_extension_morphism: kernel families differ at object " +
                std::to_string(x));

  const FiniteGroupoid& base = a.projection.codomain;
  const FiniteGroupoid& ta = a.projection.domain;
  const FiniteGroupoid& tb = b.projection.domain;
  std::vector<int> over_b = object_over(b.projection);

  std::vector<int> object_map(ta.num_objects());
  for (int x = 0; x < ta.num_objects(); ++x)
    object_map[x] = over_b[a.projection.object_map[x]];

  // Decompose every source arrow as (kernel element) o (canonical lift).
  Cleavage ca = canonical_cleavage(a.projection);
  std::vector<int> elem_a = kernel_element_of(a);
  std::vector<int> part_f(ta.num_arrows()), part_k(ta.num_arrows());
  for (int e = 0; e < ta.num_arrows(); ++e) {
    int f = a.projection.arrow_map[e];
    int loop = ta.compose(e, ta.inverse[ca.lift[f]]);
    part_f[e] = f;
    part_k[e] = elem_a[loop];
    if (part_k[e] < 0)
      throw TheoremError(
          "find_extension_morphism: arrow decomposition escaped the kernel");
  }

  std::vector<int> free_arrows;
  std::vector<std::vector<int>> choices;
  std::vector<int> phi_lift(base.num_arrows(), -1);
  for (int f = 0; f < base.num_arrows(); ++f) {
    if (base.is_identity(f)) {
      phi_lift[f] = tb.identity[over_b[base.src(f)]];
      continue;
    }
    free_arrows.push_back(f);
    std::vector<int> images;
    for (int e = 0; e < tb.num_arrows(); ++e)
      if (b.projection.arrow_map[e] == f) images.push_back(e);
    choices.push_back(std::move(images));
  }

  std::vector<int> pick(free_arrows.size(), 0);
  std::vector<int> arrow_map(ta.num_arrows());
  for (;;) {
    budget.charge();
    for (size_t i = 0; i < free_arrows.size(); ++i)
      phi_lift[free_arrows[i]] = choices[i][pick[i]];

    for (int e = 0; e < ta.num_arrows(); ++e) {
      int f = part_f[e];
      int tgt = base.tgt(f);
      arrow_map[e] =
          tb.compose(b.kernel_arrows[tgt][part_k[e]], phi_lift[f]);
    }
    bool functorial = true;
    for (int g = 0; g < ta.num_arrows() && functorial; ++g)
      for (int f = 0; f < ta.num_arrows(); ++f) {
        int c = ta.compose_table[g][f];
        if (c < 0) continue;
        if (arrow_map[c] != tb.compose_table[arrow_map[g]][arrow_map[f]]) {
          functorial = false;
          break;
        }
      }
    if (functorial) {
      ExtensionMorphism m{a, b,
                          GroupoidFunctor{ta, tb, object_map, arrow_map}};
      Report r = validate_extension_morphism(m);
      if (!r.empty())
        throw TheoremError("find_extension_morphism: candidate passed "
                           "functoriality but failed validation (" +
                           r.front().category + ": " + r.front().message + ")");
      return m;
    }

    int i = (int)pick.size() - 1;
    while (i >= 0 && pick[i] + 1 == (int)choices[i].size()) pick[i--] = 0;
    if (i < 0) break;
    ++pick[i];
  }
  return std::nullopt;
}

ExtComponents ext_components(const std::vector<Extension>& pool,
                             Budget& budget) {
  int n = (int)pool.size();
  DisjointSets dsu(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (dsu.find(i) == dsu.find(j)) continue;
      if (find_extension_morphism(pool[i], pool[j], budget)) dsu.unite(i, j);
    }

  ExtComponents out;
  out.class_of.assign(n, -1);
  std::map<int, int> class_index;
  for (int i = 0; i < n; ++i) {
    int root = dsu.find(i);
    auto [it, inserted] = class_index.insert({root, (int)out.classes.size()});
    if (inserted) out.classes.push_back({});
    out.class_of[i] = it->second;
    out.classes[it->second].push_back(i);
  }
  return out;
}

std::vector<Extension> enumerate_extensions(const FiniteGroupoid& base,
                                            const GroupFamily& family,
                                            Budget& budget) {
  {
    Report r = validate_groupoid(base);
    if (!r.empty())
      throw StructuralError("enumerate_extensions: invalid base (" +
                            r.front().message + ")");
    r = validate_family(family);
    if (!r.empty())
      throw StructuralError("enumerate_extensions: invalid family (" +
                            r.front().message + ")");
    require(family_matches_base(family, base),
            "enumerate_extensions: family does not match the base");
  }

  // Slot universe: arrow (f, i) has id offset[f] + i.
  std::vector<int> m(base.num_arrows()), offset(base.num_arrows());
  int n = 0;
  for (int f = 0; f < base.num_arrows(); ++f) {
    m[f] = family.at(base.tgt(f)).order;
    offset[f] = n;
    n += m[f];
  }
  require(n <= kMaxArrows, "enumerate_extensions: slot universe too large");
  std::vector<int> abase(n), aslot(n);
  for (int f = 0; f < base.num_arrows(); ++f)
    for (int i = 0; i < m[f]; ++i) {
      abase[offset[f] + i] = f;
      aslot[offset[f] + i] = i;
    }
  std::vector<int> idarr(base.num_objects());
  for (int x = 0; x < base.num_objects(); ++x)
    idarr[x] = offset[base.identity[x]];
  auto is_id = [&](int e) { return e == idarr[base.src(abase[e])]; };

  std::vector<std::vector<int>> comp(n, std::vector<int>(n, -1));
  std::vector<std::pair<int, int>> cells;
  for (int g = 0; g < n; ++g)
    for (int f = 0; f < n; ++f) {
      if (!base.composable(abase[g], abase[f])) continue;
      if (is_id(g))
        comp[g][f] = f;
      else if (is_id(f))
        comp[g][f] = g;
      else
        cells.push_back({g, f});
    }

  std::vector<std::array<int, 3>> triples;
  for (int h = 0; h < n; ++h)
    for (int g = 0; g < n; ++g) {
      if (!base.composable(abase[h], abase[g])) continue;
      for (int f = 0; f < n; ++f)
        if (base.composable(abase[g], abase[f])) triples.push_back({h, g, f});
    }

  auto consistent = [&](int g, int f) {
    int v = comp[g][f];
    for (int i = 0; i < m[abase[f]]; ++i) {
      int fp = offset[abase[f]] + i;
      if (fp != f && comp[g][fp] == v) return false;
    }
    for (int i = 0; i < m[abase[g]]; ++i) {
      int gp = offset[abase[g]] + i;
      if (gp != g && comp[gp][f] == v) return false;
    }
    for (const auto& t : triples) {
      int x = comp[t[1]][t[2]];
      int y = comp[t[0]][t[1]];
      if (x < 0 || y < 0) continue;
      int l = comp[t[0]][x];
      int r = comp[y][t[2]];
      if (l >= 0 && r >= 0 && l != r) return false;
    }
    return true;
  };

  std::vector<Extension> out;
  auto leaf = [&]() {
    FiniteGroupoid total;
    total.objects = base.objects;
    total.arrows.resize(n);
    for (int e = 0; e < n; ++e)
      total.arrows[e] = {base.src(abase[e]), base.tgt(abase[e])};
    total.identity = idarr;
    total.compose_table = comp;
    total.inverse.assign(n, -1);
    for (int e = 0; e < n; ++e) {
      int fb = base.inverse[abase[e]];
      for (int i = 0; i < m[fb]; ++i) {
        int cand = offset[fb] + i;
        if (comp[cand][e] == idarr[base.src(abase[e])] &&
            comp[e][cand] == idarr[base.tgt(abase[e])]) {
          total.inverse[e] = cand;
          break;
        }
      }
      if (total.inverse[e] < 0) return;
    }
    if (!report_ok(validate_groupoid(total))) return;

    // Identify the family with the kernel vertex groups in every way.
    std::vector<std::vector<GroupIso>> isos(base.num_objects());
    for (int a = 0; a < base.num_objects(); ++a) {
      int ida = base.identity[a];
      FiniteGroup kv;
      kv.order = m[ida];
      kv.table.assign(kv.order, std::vector<int>(kv.order, 0));
      for (int i = 0; i < kv.order; ++i)
        for (int j = 0; j < kv.order; ++j)
          kv.table[i][j] = aslot[comp[offset[ida] + i][offset[ida] + j]];
      isos[a] = all_group_isos(family.at(a), kv);
      if (isos[a].empty()) return;
    }
    GroupoidFunctor projection{total, base, base.objects, abase};
    std::vector<int> pick(base.num_objects(), 0);
    for (;;) {
      std::vector<std::vector<int>> kernel_arrows(base.num_objects());
      for (int a = 0; a < base.num_objects(); ++a) {
        const GroupIso& iso = isos[a][pick[a]];
        kernel_arrows[a].resize(family.at(a).order);
        for (int k = 0; k < family.at(a).order; ++k)
          kernel_arrows[a][k] = offset[base.identity[a]] + iso.map[k];
      }
      Extension ext{projection, family, kernel_arrows};
      Report r = validate_extension(ext);
      if (!r.empty())
        throw TheoremError("enumerate_extensions: constructed table failed "
                           "validation (" +
                           r.front().category + ": " + r.front().message + ")");
      out.push_back(std::move(ext));

      int a = base.num_objects() - 1;
      while (a >= 0 && pick[a] + 1 == (int)isos[a].size()) pick[a--] = 0;
      if (a < 0) break;
      ++pick[a];
    }
  };

  std::function<void(size_t)> go = [&](size_t idx) {
    if (idx == cells.size()) {
      leaf();
      return;
    }
    auto [g, f] = cells[idx];
    int cb = base.compose(abase[g], abase[f]);
    for (int v = 0; v < m[cb]; ++v) {
      budget.charge();
      comp[g][f] = offset[cb] + v;
      if (consistent(g, f)) go(idx + 1);
    }
    comp[g][f] = -1;
  };
  go(0);
  return out;
}

InterpretationReport interpretation_check(const FiniteGroupoid& base,
                                          const GroupFamily& family,
                                          Budget& budget,
                                          const std::vector<Extension>* pool) {
  InterpretationReport rep;
  H2Result h = h2(base, family, budget);
  rep.classes = (int)h.classes.size();

  std::vector<Extension> reps;
  for (int r : h.representatives)
    reps.push_back(package_extension(twist(h.cocycles[r]), family));

  for (int i = 0; i < (int)h.cocycles.size(); ++i) {
    Extension ei = package_extension(twist(h.cocycles[i]), family);
    if (!find_extension_morphism(ei, reps[h.class_of[i]], budget)) {
      rep.well_defined = false;
      rep.notes.push_back("cocycle " + std::to_string(i) +
                          " does not land in the component of its class "
                          "representative");
    }
  }

  for (int i = 0; i < (int)reps.size(); ++i)
    for (int j = i + 1; j < (int)reps.size(); ++j)
      if (find_extension_morphism(reps[i], reps[j], budget)) {
        rep.injective = false;
        rep.notes.push_back("representatives of classes " + std::to_string(i) +
                            " and " + std::to_string(j) + " are connected");
      }

  std::vector<Extension> members;
  if (pool) {
    members = *pool;
  } else {
    int slots = 0;
    for (int f = 0; f < base.num_arrows(); ++f)
      slots += family.at(base.tgt(f)).order;
    if (slots <= kExtensionTableCap) {
      members = enumerate_extensions(base, family, budget);
    } else {
      for (const WeakAction& w : h.cocycles)
        members.push_back(package_extension(twist(w), family));
    }
  }
  rep.pool_size = (int)members.size();

  rep.pool_class_of.assign(members.size(), -1);
  for (int i = 0; i < (int)members.size(); ++i) {
    std::vector<int> hits;
    for (int c = 0; c < (int)reps.size(); ++c)
      if (find_extension_morphism(members[i], reps[c], budget))
        hits.push_back(c);
    if (hits.empty()) {
      rep.surjective = false;
      rep.notes.push_back("pool extension " + std::to_string(i) +
                          " is connected to no representative");
    } else {
      rep.pool_class_of[i] = hits.front();
      if (hits.size() > 1) {
        rep.injective = false;
        rep.notes.push_back("pool extension " + std::to_string(i) +
                            " is connected to several representatives");
      }
    }
  }
  return rep;
}

}  // namespace gcoh
