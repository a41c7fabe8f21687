#ifndef GCOH_COMMON_HPP
#define GCOH_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcoh {

// Thrown when data is structurally unusable for an operation (wrong shapes,
// dangling ids, mismatched carriers).  Distinct from axiom violations, which
// validators collect into Reports instead of throwing.
struct StructuralError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when an enumeration exceeds its configured budget.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Thrown when a checkable theorem fails on data that passed its
// preconditions.  Reaching this means either the input silently broke a
// precondition or the library is wrong; callers should treat it as fatal.
struct TheoremError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// One validator finding.  `category` is a short tag ("structure", "identity",
// "associativity", "exactness", ...) so callers can distinguish structural
// mismatches from axiom failures.
struct Violation {
  std::string category;
  std::string message;
  bool operator==(const Violation&) const = default;
};

using Report = std::vector<Violation>;

inline bool report_ok(const Report& r) { return r.empty(); }

// Work meter for exhaustive searches.  Units are "candidates visited";
// every enumerator charges it and throws BudgetError past the limit.
struct Budget {
  long long limit = 200'000'000;
  long long used = 0;

  Budget() = default;
  explicit Budget(long long lim) : limit(lim) {}

  void charge(long long n = 1) {
    used += n;
    if (used > limit)
      throw BudgetError("budget exceeded: " + std::to_string(used) + " > " +
                        std::to_string(limit) + " candidates");
  }
};

}  // namespace gcoh

#endif
