#pragma once

// Test-only reference constructions, independent of the library's code paths.

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace hpt::test {

struct OracleRow {
  std::vector<mpz_class> values;
  std::string kinds;  // 'W', 'A', 'B'
};

/// Edge-list formulation of the growing rule: every vertex hangs its
/// downward edges in order (winger 2, A q-2, B q-1); the last edge of a
/// vertex and the first edge of its right neighbour end in one shared child
/// (type A), every other edge ends in a child of its own (type B, or a
/// winger on the two outer ends).
inline std::vector<OracleRow> oracle_rows(int q, std::size_t n_max) {
  std::vector<OracleRow> rows{{{1}, "W"}};
  for (std::size_t n = 1; n <= n_max; ++n) {
    const OracleRow& prev = rows.back();
    OracleRow next;
    if (prev.values.size() == 1) {
      next = {{1, 1}, "WW"};
      rows.push_back(next);
      continue;
    }
    const std::size_t m = prev.values.size();
    for (std::size_t i = 0; i < m; ++i) {
      const char kind = prev.kinds[i];
      const int degree = kind == 'W' ? 2 : (kind == 'A' ? q - 2 : q - 1);
      for (int e = 0; e < degree; ++e) {
        const bool first_edge = e == 0;
        const bool last_edge = e == degree - 1;
        if (first_edge && i > 0) {
          next.values.back() += prev.values[i];  // merges with the left neighbour's last edge
          continue;
        }
        next.values.push_back(prev.values[i]);
        if (last_edge && i + 1 < m)
          next.kinds.push_back('A');
        else if (kind == 'W' && (i == 0 ? first_edge : last_edge))
          next.kinds.push_back('W');
        else
          next.kinds.push_back('B');
      }
    }
    rows.push_back(std::move(next));
  }
  return rows;
}

inline mpz_class binomial(unsigned long n, unsigned long k) {
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), n, k);
  return out;
}

}  // namespace hpt::test
