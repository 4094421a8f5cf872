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

#include "dmf/hyperderiv.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "dmf/arith.hpp"
#include "dmf/error.hpp"

namespace dmf {

namespace {

// Rows alpha(n, 0..n) for n = 0..size-1. Rows are appended under the unique
// lock and never modified afterwards.
struct AlphaTable {
  std::shared_mutex mu;
  std::vector<std::vector<RatFuncK>> rows;
  std::vector<RatFuncK> inv_d;  // 1/d_m
};

AlphaTable& table_for(const FqField& field) {
  static std::mutex mu;
  static std::map<const FqField*, std::unique_ptr<AlphaTable>> tables;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = tables[&field];
  if (!slot) slot = std::make_unique<AlphaTable>();
  return *slot;
}

void extend(AlphaTable& t, const FqField& field, int n) {
  const std::uint64_t q = field.q();
  while (static_cast<int>(t.rows.size()) <= n) {
    const int m = static_cast<int>(t.rows.size());
    std::vector<RatFuncK> row(static_cast<std::size_t>(m) + 1, RatFuncK(field));
    if (m == 0) {
      row[0] = RatFuncK::from_int(field, 1);
    } else {
      std::vector<int> steps;
      for (std::uint64_t qk = 1; qk <= static_cast<std::uint64_t>(m); qk *= q) {
        const int k = static_cast<int>(steps.size());
        if (static_cast<int>(t.inv_d.size()) <= k) {
          t.inv_d.push_back(RatFuncK(PolyA::from_int(field, 1), d_factorial(field, k)));
        }
        steps.push_back(static_cast<int>(qk));
      }
      for (int r = 1; r <= m; ++r) {
        RatFuncK acc(field);
        for (std::size_t k = 0; k < steps.size(); ++k) {
          const int prev = m - steps[k];
          if (r - 1 > prev) continue;
          const RatFuncK& a = t.rows[prev][r - 1];
          if (a.is_zero()) continue;
          acc += k == 0 ? a : a * t.inv_d[k];
        }
        row[r] = std::move(acc);
      }
    }
    t.rows.push_back(std::move(row));
  }
}

}  // namespace

RatFuncK alpha_coeff(const FqField& field, int n, int r) {
  if (n < 0 || r < 0) throw DomainError("alpha_{n,r} requires n, r >= 0");
  if (r > n) return RatFuncK(field);
  AlphaTable& t = table_for(field);
  {
    std::shared_lock lock(t.mu);
    if (static_cast<int>(t.rows.size()) > n) return t.rows[n][r];
  }
  std::unique_lock lock(t.mu);
  extend(t, field, n);
  return t.rows[n][r];
}

USeries hyperderivative(const USeries& f, int n) {
  if (n < 0) throw DomainError("hyperderivative order must be nonnegative");
  if (n == 0) return f;
  const FqField& F = f.zero().field();
  const int N = f.prec();
  const std::uint32_t p = F.p();
  std::vector<RatFuncK> alpha;
  alpha.reserve(static_cast<std::size_t>(n) + 1);
  for (int r = 0; r <= n; ++r) alpha.push_back(alpha_coeff(F, n, r));
  USeries out(f.zero(), N);
  for (int i = 2; i < N; ++i) {
    RatFuncK acc(F);
    const int rmax = std::min(i - 1, n);
    for (int r = 1; r <= rmax; ++r) {
      if (alpha[r].is_zero()) continue;
      const RatFuncK& a = f[i - r];
      if (a.is_zero()) continue;
      std::uint32_t b = binom_char_p(static_cast<std::uint64_t>(i - 1), static_cast<std::uint64_t>(r), p);
      if (b == 0) continue;
      if ((n + r) % 2 != 0) b = p - b;
      acc += (alpha[r] * a).scaled(F.from_int(b));
    }
    if (!acc.is_zero()) out.set(i, std::move(acc));
  }
  return out;
}

int series_valuation(const USeries& f, const PrimeContext& ctx) {
  int v = kInfinity;
  for (const auto& c : f.coeffs()) {
    if (c.is_zero()) continue;
    v = std::min(v, valuation(c, ctx.pi()));
  }
  return v;
}

bool congruent(const USeries& f, const USeries& g, const PrimeContext& ctx, int m) {
  return series_valuation(f - g, ctx) >= m;
}

}  // namespace dmf
