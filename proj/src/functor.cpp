#include "gcoh/functor.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace gcoh {

Report validate_functor(const GroupoidFunctor& p) {
  Report r;
  if ((int)p.object_map.size() != p.domain.num_objects() ||
      (int)p.arrow_map.size() != p.domain.num_arrows()) {
    r.push_back({"structure", "object/arrow map has wrong length"});
    return r;
  }
  for (int a : p.object_map)
    if (a < 0 || a >= p.codomain.num_objects()) {
      r.push_back({"structure", "object map value out of range"});
      return r;
    }
  for (int f : p.arrow_map)
    if (f < 0 || f >= p.codomain.num_arrows()) {
      r.push_back({"structure", "arrow map value out of range"});
      return r;
    }
  for (int f = 0; f < p.domain.num_arrows(); ++f) {
    int pf = p.arrow_map[f];
    if (p.codomain.src(pf) != p.object_map[p.domain.src(f)] ||
        p.codomain.tgt(pf) != p.object_map[p.domain.tgt(f)])
      r.push_back({"functor", "endpoints not preserved at arrow " +
                                  std::to_string(f)});
  }
  for (int a = 0; a < p.domain.num_objects(); ++a)
    if (p.arrow_map[p.domain.identity[a]] !=
        p.codomain.identity[p.object_map[a]])
      r.push_back({"functor", "identity not preserved at object " +
                                  std::to_string(a)});
  for (int v = 0; v < p.domain.num_arrows(); ++v)
    for (int u = 0; u < p.domain.num_arrows(); ++u) {
      if (!p.domain.composable(v, u)) continue;
      int lhs = p.arrow_map[p.domain.compose_table[v][u]];
      int rhs = p.codomain.compose_table[p.arrow_map[v]][p.arrow_map[u]];
      if (rhs < 0 || lhs != rhs)
        r.push_back({"functor", "composition not preserved at (" +
                                    std::to_string(v) + "," +
                                    std::to_string(u) + ")"});
    }
  return r;
}

GroupoidFunctor identity_functor(const FiniteGroupoid& g) {
  GroupoidFunctor p{g, g, std::vector<int>(g.num_objects()),
                    std::vector<int>(g.num_arrows())};
  std::iota(p.object_map.begin(), p.object_map.end(), 0);
  std::iota(p.arrow_map.begin(), p.arrow_map.end(), 0);
  return p;
}

GroupoidFunctor compose_functors(const GroupoidFunctor& second,
                                 const GroupoidFunctor& first) {
  if (!(first.codomain == second.domain))
    throw StructuralError("functor composition: middle groupoids differ");
  GroupoidFunctor p{first.domain, second.codomain,
                    std::vector<int>(first.domain.num_objects()),
                    std::vector<int>(first.domain.num_arrows())};
  for (int a = 0; a < first.domain.num_objects(); ++a)
    p.object_map[a] = second.object_map[first.object_map[a]];
  for (int f = 0; f < first.domain.num_arrows(); ++f)
    p.arrow_map[f] = second.arrow_map[first.arrow_map[f]];
  return p;
}

bool is_bijective_on_objects(const GroupoidFunctor& p) {
  if (p.domain.num_objects() != p.codomain.num_objects()) return false;
  std::vector<bool> seen(p.codomain.num_objects(), false);
  for (int a : p.object_map) {
    if (seen[a]) return false;
    seen[a] = true;
  }
  return true;
}

bool is_bijective_on_arrows(const GroupoidFunctor& p) {
  if (p.domain.num_arrows() != p.codomain.num_arrows()) return false;
  std::vector<bool> seen(p.codomain.num_arrows(), false);
  for (int f : p.arrow_map) {
    if (seen[f]) return false;
    seen[f] = true;
  }
  return true;
}

}  // namespace gcoh
