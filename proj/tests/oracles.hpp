// Independent brute-force oracles.  Nothing here calls into the library
// under test: group tables are enumerated by Latin-square backtracking with
// associativity checked at the leaves, and isomorphism is decided by raw
// permutation search.

#ifndef GCOH_TESTS_ORACLES_HPP
#define GCOH_TESTS_ORACLES_HPP

#include <algorithm>
#include <numeric>
#include <vector>

namespace oracle {

using Table = std::vector<std::vector<int>>;

namespace detail {

inline void table_search(int n, Table& t, std::vector<int>& row_used,
                         std::vector<int>& col_used, int i, int j,
                         std::vector<Table>& out) {
  if (i == n) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (t[t[a][b]][c] != t[a][t[b][c]]) return;
    out.push_back(t);
    return;
  }
  int ni = (j == n - 1) ? i + 1 : i;
  int nj = (j == n - 1) ? 1 : j + 1;
  for (int v = 0; v < n; ++v) {
    int rbit = 1 << v;
    if ((row_used[i] & rbit) || (col_used[j] & rbit)) continue;
    t[i][j] = v;
    row_used[i] |= rbit;
    col_used[j] |= rbit;
    table_search(n, t, row_used, col_used, ni, nj, out);
    row_used[i] &= ~rbit;
    col_used[j] &= ~rbit;
  }
}

}  // namespace detail

// Every group multiplication table on {0..n-1} whose identity is 0.
inline std::vector<Table> all_group_tables(int n) {
  Table t(n, std::vector<int>(n, 0));
  std::vector<int> row_used(n, 0), col_used(n, 0);
  for (int k = 0; k < n; ++k) {
    t[0][k] = k;
    t[k][0] = k;
    row_used[k] |= 1 << k;  // column 0 entry
    col_used[k] |= 1 << k;  // row 0 entry
    row_used[0] |= 1 << k;
    col_used[0] |= 1 << k;
  }
  std::vector<Table> out;
  if (n == 1) {
    out.push_back(t);
    return out;
  }
  detail::table_search(n, t, row_used, col_used, 1, 1, out);
  return out;
}

// Isomorphism by exhaustive search over identity-fixing relabellings.
inline bool tables_isomorphic(const Table& a, const Table& b) {
  int n = (int)a.size();
  if ((int)b.size() != n) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n; ++y)
        if (perm[a[x][y]] != b[perm[x]][perm[y]]) {
          ok = false;
          break;
        }
    if (ok) return true;
  } while (std::next_permutation(perm.begin() + 1, perm.end()));
  return false;
}

// Partition into isomorphism classes; returns class id per table, classes
// numbered by least member.
inline std::vector<int> iso_classes(const std::vector<Table>& tables) {
  std::vector<int> cls(tables.size(), -1);
  int next = 0;
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (cls[i] >= 0) continue;
    cls[i] = next;
    for (std::size_t j = i + 1; j < tables.size(); ++j)
      if (cls[j] < 0 && tables_isomorphic(tables[i], tables[j]))
        cls[j] = next;
    ++next;
  }
  return cls;
}

}  // namespace oracle

#endif
