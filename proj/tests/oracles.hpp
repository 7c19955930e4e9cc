#pragma once

// Independent reference computations. Slow, short, and sharing no code with
// the library beyond the value types.

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "crystal/linalg.hpp"
#include "crystal/tableau.hpp"

namespace oracle {

using crystal::Matrix;
using crystal::Rational;

// Determinant by cofactor expansion.
inline Rational det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  Rational total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m(0, c)) == 0) continue;
    std::vector<std::size_t> rows, cols;
    for (std::size_t r = 1; r < n; ++r) rows.push_back(r);
    for (std::size_t k = 0; k < n; ++k)
      if (k != c) cols.push_back(k);
    const Rational minor = det(m.rows_subset(rows).columns(cols));
    total += (c % 2 ? -1 : 1) * m(0, c) * minor;
  }
  return total;
}

inline void subsets(std::size_t n, std::size_t k, std::size_t from, std::vector<std::size_t>& cur,
                    const std::function<void(const std::vector<std::size_t>&)>& visit) {
  if (cur.size() == k) {
    visit(cur);
    return;
  }
  for (std::size_t x = from; x < n; ++x) {
    cur.push_back(x);
    subsets(n, k, x + 1, cur, visit);
    cur.pop_back();
  }
}

// Largest k with a nonzero k x k minor.
inline std::size_t rank_by_minors(const Matrix& m) {
  for (std::size_t k = std::min(m.rows(), m.cols()); k > 0; --k) {
    bool found = false;
    std::vector<std::size_t> rs, cs;
    subsets(m.rows(), k, 0, rs, [&](const std::vector<std::size_t>& rows) {
      if (found) return;
      subsets(m.cols(), k, 0, cs, [&](const std::vector<std::size_t>& cols) {
        if (!found && sgn(det(m.rows_subset(rows).columns(cols))) != 0) found = true;
      });
    });
    if (found) return k;
  }
  return 0;
}

// Every filling of the shape with entries 1..top, filtered by the SSYT rules.
inline std::vector<crystal::Tableau> brute_ssyt(const crystal::Partition& shape, int top) {
  std::vector<int> cells;
  for (std::size_t r = 0; r < shape.size(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.push_back(static_cast<int>(r));
  std::vector<int> fill(cells.size(), 1);
  std::vector<crystal::Tableau> out;
  while (true) {
    crystal::Tableau t;
    std::size_t k = 0;
    for (int len : shape) {
      if (len == 0) continue;
      t.rows.emplace_back(fill.begin() + k, fill.begin() + k + len);
      k += len;
    }
    bool ok = true;
    for (std::size_t r = 0; r < t.rows.size() && ok; ++r)
      for (std::size_t c = 0; c < t.rows[r].size() && ok; ++c) {
        if (c > 0 && t.rows[r][c - 1] > t.rows[r][c]) ok = false;
        if (r > 0 && t.rows[r - 1][c] >= t.rows[r][c]) ok = false;
      }
    if (ok) out.push_back(t);
    std::size_t p = 0;
    while (p < fill.size() && fill[p] == top) fill[p++] = 1;
    if (p == fill.size()) break;
    ++fill[p];
  }
  return out;
}

// Ways to write sum v_i alpha_i as a multiset of positive roots
// alpha_i + ... + alpha_j (Kostant partition function), by recursion over the
// root list.
inline long kostant(std::vector<int> v) {
  const int n = static_cast<int>(v.size());
  std::vector<std::pair<int, int>> roots;
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) roots.push_back({i, j});
  std::function<long(std::size_t)> go = [&](std::size_t r) -> long {
    if (std::all_of(v.begin(), v.end(), [](int x) { return x == 0; })) return 1;
    if (r == roots.size()) return 0;
    long total = go(r + 1);
    const auto [i, j] = roots[r];
    int used = 0;
    while (true) {
      bool fits = true;
      for (int k = i; k <= j; ++k) fits = fits && v[k - 1] > 0;
      if (!fits) break;
      for (int k = i; k <= j; ++k) --v[k - 1];
      ++used;
      total += go(r + 1);
    }
    for (int k = i; k <= j; ++k) v[k - 1] += used;
    return total;
  };
  return go(0);
}

// The eight tableaux and arrows of B((2,1)) for sl_3, written out by hand.
inline std::set<std::tuple<std::string, int, std::string>> b21_edges() {
  return {{"(11/2)", 1, "(12/2)"}, {"(11/3)", 1, "(12/3)"}, {"(12/3)", 1, "(22/3)"}, {"(13/3)", 1, "(23/3)"},
          {"(11/2)", 2, "(11/3)"}, {"(12/2)", 2, "(13/2)"}, {"(13/2)", 2, "(13/3)"}, {"(22/3)", 2, "(23/3)"}};
}

}  // namespace oracle
