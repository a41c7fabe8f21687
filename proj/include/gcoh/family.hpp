#ifndef GCOH_FAMILY_HPP
#define GCOH_FAMILY_HPP

#include <vector>

#include "gcoh/common.hpp"
#include "gcoh/group.hpp"
#include "gcoh/groupoid.hpp"

namespace gcoh {

// Family of coefficient groups indexed by the objects of a base groupoid.
struct GroupFamily {
  std::vector<int> base_objects;    // always 0..n-1
  std::vector<FiniteGroup> groups;  // groups[a] sits over object a

  const FiniteGroup& at(int object) const;
  int size() const { return (int)base_objects.size(); }

  bool operator==(const GroupFamily&) const = default;
};

GroupFamily make_family(std::vector<FiniteGroup> groups);

Report validate_family(const GroupFamily& fam);

// The family's index set must equal the groupoid's objects exactly.
bool family_matches_base(const GroupFamily& fam, const FiniteGroupoid& base);

}  // namespace gcoh

#endif
