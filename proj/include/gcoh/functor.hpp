#ifndef GCOH_FUNCTOR_HPP
#define GCOH_FUNCTOR_HPP

#include <vector>

#include "gcoh/common.hpp"
#include "gcoh/groupoid.hpp"

namespace gcoh {

// Functor between finite groupoids, self-contained (carries both ends).
struct GroupoidFunctor {
  FiniteGroupoid domain;
  FiniteGroupoid codomain;
  std::vector<int> object_map;  // domain object -> codomain object
  std::vector<int> arrow_map;   // domain arrow -> codomain arrow

  int on_object(int a) const { return object_map[a]; }
  int on_arrow(int f) const { return arrow_map[f]; }

  bool operator==(const GroupoidFunctor&) const = default;
};

Report validate_functor(const GroupoidFunctor& p);

GroupoidFunctor identity_functor(const FiniteGroupoid& g);

// second o first; requires first.codomain == second.domain.
GroupoidFunctor compose_functors(const GroupoidFunctor& second,
                                 const GroupoidFunctor& first);

bool is_bijective_on_objects(const GroupoidFunctor& p);
bool is_bijective_on_arrows(const GroupoidFunctor& p);

}  // namespace gcoh

#endif
