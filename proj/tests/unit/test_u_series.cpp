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

#include <doctest.h>

#include <functional>
#include <map>

#include "support.hpp"

using namespace dmf;
using namespace dmf::testing;

namespace {

// alpha(n, r) summed over multisets of q-powers: an ordered tuple with c_k
// copies of q^k occurs multinomial(r; c) times.
RatFuncK alpha_by_multisets(const FqField& F, int n, int r) {
  const int q = static_cast<int>(F.q());
  const std::uint32_t p = F.p();
  std::vector<int> powers;
  for (int v = 1; v <= n; v *= q) powers.push_back(v);
  RatFuncK total(F);
  std::vector<int> counts(powers.size(), 0);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int rest, int left) {
    if (k == powers.size()) {
      if (rest != 0 || left != 0) return;
      std::uint64_t mult = 1;
      int placed = 0;
      PolyA den = PolyA::from_int(F, 1);
      for (std::size_t i = 0; i < counts.size(); ++i) {
        placed += counts[i];
        mult = mult * binom_char_p(placed, counts[i], p) % p;
        den *= d_factorial(F, static_cast<int>(i)).pow(counts[i]);
      }
      if (mult != 0) total += RatFuncK(PolyA::from_int(F, static_cast<std::int64_t>(mult)), den);
      return;
    }
    for (int c = 0; c * powers[k] <= rest && c <= left; ++c) {
      counts[k] = c;
      rec(k + 1, rest - c * powers[k], left - c);
    }
    counts[k] = 0;
  };
  rec(0, n, r);
  return total;
}

int order_at(UPoly<RatFuncK> f, const RatFuncK& w) {
  if (f.is_zero()) return kInfinity;
  const auto lin = UPoly<RatFuncK>::x(w) - UPoly<RatFuncK>::constant(w);
  int k = 0;
  for (;;) {
    auto [qq, r] = UPoly<RatFuncK>::divmod(f, lin);
    if (!r.is_zero()) return k;
    f = qq;
    ++k;
  }
}

}  // namespace

TEST_CASE("series arithmetic examples") {
  const FqField& F = F3();
  CHECK(S(F, "1 + T*u + O(u^3)") * S(F, "1 - T*u + O(u^3)") == S(F, "1 - T^2*u^2 + O(u^3)"));
  CHECK(S(F, "1 + T*u^2 + O(u^6)").inverse() == S(F, "1 - T*u^2 + T^2*u^4 + O(u^6)"));
  CHECK_THROWS_AS(S(F, "u + O(u^4)").inverse(), DomainError);
  CHECK_THROWS(S(F, "1 + O(u^2)") + S(F5(), "1 + O(u^2)"));
}

TEST_CASE("series precision tracking") {
  const FqField& F = F3();
  const USeries a = S(F, "1 + u + O(u^10)");
  const USeries b = S(F, "u^3 + O(u^5)");
  CHECK((a + b).prec() == 5);
  CHECK((a * b).prec() == 5);
  CHECK((S(F, "u + O(u^10)") * b).prec() == 6);
  CHECK(a.shifted(2).prec() == 12);
  CHECK(S(F, "0 + O(u^4)").order() == kInfinity);
}

TEST_CASE("unit series invert correctly") {
  Rng rng(21);
  for (const FqField* F : {&F3(), &F5()}) {
    for (int it = 0; it < 30; ++it) {
      USeries f = random_series(*F, rng, 15, 3);
      if (f[0].is_zero()) f.set(0, RatFuncK::from_int(*F, 1));
      CHECK(f * f.inverse() == USeries::constant(RatFuncK::from_int(*F, 1), 15));
      const USeries g = random_series(*F, rng, 15, 3);
      CHECK((f * g).exact_div(f) == g);
      CHECK(f.pow(3) == f * f * f);
    }
  }
}

TEST_CASE("alpha coefficients") {
  for (const FqField* F : {&F3(), &F5()}) {
    const int q = static_cast<int>(F->q());
    CHECK(alpha_coeff(*F, 1, 1).is_one());
    CHECK(alpha_coeff(*F, q, 1) == RatFuncK(PolyA::from_int(*F, 1), d_factorial(*F, 1)));
    for (int n = 1; n <= 30; ++n) {
      const int s = static_cast<int>(digit_sum(n, q));
      for (int r = 1; r <= n + 1; ++r) {
        const RatFuncK a = alpha_coeff(*F, n, r);
        CHECK(a == alpha_by_multisets(*F, n, r));
        const bool allowed = r <= n && r >= s && (r - s) % (q - 1) == 0;
        if (!allowed) CHECK(a.is_zero());
      }
    }
  }
}

TEST_CASE("hyperderivative examples") {
  const FqField& F = F3();
  Rng rng(4);
  const USeries f = random_series(F, rng, 20, 2);
  CHECK(hyperderivative(f, 0) == f);
  USeries expect(RatFuncK(F), 20);
  for (int i = 1; i < 20; ++i) expect.set(i, f[i - 1] * RatFuncK::from_int(F, i - 1));
  expect.set(1, RatFuncK(F));
  CHECK(hyperderivative(f, 1) == expect);
  for (int n = 1; n <= 10; ++n) CHECK(hyperderivative(USeries::constant(K(F, "T + 1"), 20), n).is_zero());
}

TEST_CASE("hyperderivatives form an iterative higher derivation") {
  Rng rng(7);
  for (const FqField* F : {&F3(), &F5()}) {
    const std::uint32_t p = F->p();
    for (int it = 0; it < 4; ++it) {
      const USeries f = random_integral_series(*F, rng, 24, 2);
      const USeries g = random_integral_series(*F, rng, 24, 2);
      for (int n = 0; n <= 12; ++n) {
        USeries rhs(RatFuncK(*F), 24);
        for (int i = 0; i <= n; ++i) rhs += hyperderivative(f, i) * hyperderivative(g, n - i);
        CHECK(agree(hyperderivative(f * g, n), rhs));
        CHECK(hyperderivative(f + g, n) == hyperderivative(f, n) + hyperderivative(g, n));
      }
      for (int i = 0; i <= 6; ++i) {
        for (int j = 0; i + j <= 12; ++j) {
          const RatFuncK c = RatFuncK::from_int(*F, binom_char_p(i + j, i, p));
          CHECK(hyperderivative(hyperderivative(f, j), i) == hyperderivative(f, i + j).scaled(c));
        }
      }
    }
  }
}

TEST_CASE("hyperderivatives raise the order at infinity by the digit sum") {
  Rng rng(9);
  for (const FqField* F : {&F3(), &F5()}) {
    const int q = static_cast<int>(F->q());
    for (int it = 0; it < 5; ++it) {
      USeries f = random_integral_series(*F, rng, 40, 2).shifted(it);
      for (int n = 1; n <= q * q; ++n) {
        const USeries d = hyperderivative(f, n);
        const int bound = f.order() + static_cast<int>(digit_sum(n, q));
        CHECK((d.order() >= bound));
      }
    }
  }
}

TEST_CASE("hyperderivatives keep denominators small") {
  Rng rng(13);
  const FqField& F = F3();
  const USeries f = random_integral_series(F, rng, 40, 3);
  for (int n = 0; n < 27; ++n) {
    const USeries d = hyperderivative(f, n);
    for (const auto& c : d.coeffs()) CHECK(factors_have_degree_below(c.den(), 3));
  }
}

TEST_CASE("Hasse derivatives of polynomials") {
  const FqField& F = F3();
  const RatFuncK one = RatFuncK::from_int(F, 1);
  using UP = UPoly<RatFuncK>;
  CHECK(hasse_poly(UP::monomial(one, 5), 2, 3) == UP::monomial(one, 3));
  CHECK(hasse_poly(UP::monomial(one, 3), 4, 3).is_zero());
  CHECK(hasse_poly(UP::monomial(one, 2), 1, 3) == UP::monomial(one.scaled(F.from_int(2)), 1));
  Rng rng(2);
  for (int it = 0; it < 40; ++it) {
    const RatFuncK w = RatFuncK(random_poly(F, rng, 1));
    const int m = static_cast<int>(rng() % 7);
    UP f = UP::constant(one);
    for (int i = 0; i < m; ++i) f = f * (UP::x(one) - UP::constant(w));
    UP g(RatFuncK(F), {RatFuncK(random_nonzero_poly(F, rng, 2)), RatFuncK(random_poly(F, rng, 2)), one});
    if (g.eval(w).is_zero()) continue;
    f = f * g;
    for (int n = 0; n <= 6; ++n) {
      const int o = order_at(hasse_poly(f, n, 3), w);
      if (binom_char_p(m, n, 3) != 0 && n <= m) {
        CHECK(o == m - n);
      } else {
        CHECK(o > m - n);
      }
    }
  }
}

TEST_CASE("valuations of series and congruences") {
  const FqField& F = F3();
  const PrimeContext ctx(P(F, "T^3 - T + 1"));
  const RatFuncK pi(ctx.pi());
  USeries f(RatFuncK(F), 4);
  f.set(1, pi);
  f.set(2, pi * pi);
  CHECK(series_valuation(f, ctx) == 1);
  CHECK(series_valuation(USeries(RatFuncK(F), 4), ctx) == kInfinity);
  Rng rng(1);
  for (int m = 0; m <= 3; ++m) {
    const USeries g = random_integral_series(F, rng, 10, 3);
    const USeries h = random_integral_series(F, rng, 10, 3);
    CHECK(congruent(g, g + h.scaled(pi.pow(m)), ctx, m));
  }
}
