/*
   Copyright 2026 The dmf Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef DMF_DET_HPP
#define DMF_DET_HPP

#include <cstddef>
#include <utility>
#include <vector>

#include "dmf/error.hpp"

namespace dmf {

template <class R>
using Matrix = std::vector<std::vector<R>>;

namespace detail {

template <class R>
void require_square(const Matrix<R>& m) {
  for (const auto& row : m) {
    if (row.size() != m.size()) throw DomainError("determinant of a non-square matrix");
  }
}

}  // namespace detail

/// Determinant by Laplace expansion along rows, memoized over column
/// subsets: D(S) for rows 0..|S|-1 and columns S. Costs n 2^(n-1) products
/// and uses no division, so it works over any commutative ring.
template <class R>
R det_minor_dp(const Matrix<R>& m, const R& zero, const R& one) {
  detail::require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return one;
  if (n > 20) throw DomainError("matrix too large for subset expansion");
  std::vector<R> dp(std::size_t{1} << n, zero);
  std::vector<bool> have(dp.size(), false);
  dp[0] = one;
  have[0] = true;
  for (std::size_t s = 1; s < dp.size(); ++s) {
    const int row = __builtin_popcountll(s) - 1;
    R acc = zero;
    bool any = false;
    for (std::size_t j = 0; j < n; ++j) {
      if (!(s >> j & 1)) continue;
      const std::size_t rest = s & ~(std::size_t{1} << j);
      // Sign of removing column j: number of columns of S after j.
      const int after = __builtin_popcountll(s >> (j + 1));
      if (!m[row][j].is_zero() && have[rest] && !dp[rest].is_zero()) {
        R term = m[row][j] * dp[rest];
        if (after % 2 == 1) term = -term;
        acc = any ? acc + term : term;
        any = true;
      }
    }
    if (any) {
      dp[s] = std::move(acc);
      have[s] = true;
    }
  }
  return have.back() ? dp.back() : zero;
}

/// Fraction-free Gaussian elimination. div(a, b) must return the exact
/// quotient a / b. Rows are swapped when a pivot vanishes.
template <class R, class Div>
R det_bareiss(Matrix<R> m, const R& zero, const R& one, Div div) {
  detail::require_square(m);
  const std::size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  R prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && m[r][k].is_zero()) ++r;
      if (r == n) return zero;
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R t = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = k == 0 ? std::move(t) : div(t, prev);
      }
    }
    prev = m[k][k];
  }
  R d = m[n - 1][n - 1];
  return negate ? -d : d;
}

}  // namespace dmf

#endif  // DMF_DET_HPP
