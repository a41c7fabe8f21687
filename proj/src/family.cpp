#include "gcoh/family.hpp"

#include <numeric>
#include <string>

namespace gcoh {

const FiniteGroup& GroupFamily::at(int object) const {
  if (object < 0 || object >= (int)groups.size())
    throw StructuralError("family has no group over object " +
                          std::to_string(object));
  return groups[object];
}

GroupFamily make_family(std::vector<FiniteGroup> groups) {
  GroupFamily fam;
  fam.base_objects.resize(groups.size());
  std::iota(fam.base_objects.begin(), fam.base_objects.end(), 0);
  fam.groups = std::move(groups);
  return fam;
}

Report validate_family(const GroupFamily& fam) {
  Report r;
  if (fam.groups.size() != fam.base_objects.size()) {
    r.push_back({"structure", "family must assign exactly one group per object"});
    return r;
  }
  for (int i = 0; i < (int)fam.base_objects.size(); ++i)
    if (fam.base_objects[i] != i) {
      r.push_back({"structure", "base objects must be the dense list 0..n-1"});
      return r;
    }
  for (int a = 0; a < (int)fam.groups.size(); ++a)
    for (const Violation& v : validate_group(fam.groups[a]))
      r.push_back({v.category,
                   "group over object " + std::to_string(a) + ": " + v.message});
  return r;
}

bool family_matches_base(const GroupFamily& fam, const FiniteGroupoid& base) {
  return fam.base_objects == base.objects;
}

}  // namespace gcoh
