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

#include "dmf/arith.hpp"

#include "dmf/error.hpp"

namespace dmf {

namespace {

std::uint64_t q_power(std::uint64_t q, int i) {
  std::uint64_t r = 1;
  for (int k = 0; k < i; ++k) r *= q;
  return r;
}

}  // namespace

PolyA bracket(const FqField& field, int i) {
  if (i <= 0) throw DomainError("bracket [i] requires i >= 1");
  const std::uint64_t qi = q_power(field.q(), i);
  return PolyA::monomial(field, field.one(), static_cast<int>(qi)) - PolyA::T(field);
}

PolyA d_factorial(const FqField& field, int i) {
  if (i < 0) throw DomainError("d_i requires i >= 0");
  PolyA d = PolyA::from_int(field, 1);
  for (int k = 1; k <= i; ++k) d *= bracket(field, k).frobenius(i - k);
  return d;
}

std::uint32_t binom_char_p(std::uint64_t m, std::uint64_t n, std::uint32_t p) {
  if (n > m) return 0;
  std::uint64_t result = 1;
  while (n > 0 || m > 0) {
    const std::uint64_t mi = m % p;
    const std::uint64_t ni = n % p;
    if (ni > mi) return 0;
    // Small binomial C(mi, ni) mod p via multiplicative formula with inverses.
    std::uint64_t num = 1, den = 1;
    for (std::uint64_t k = 0; k < ni; ++k) {
      num = num * ((mi - k) % p) % p;
      den = den * ((k + 1) % p) % p;
    }
    // den is a unit since ni < p.
    std::uint64_t inv = 1, base = den, e = p - 2;
    while (e > 0) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    result = result * (num * inv % p) % p;
    m /= p;
    n /= p;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint64_t digit_sum(std::uint64_t n, std::uint64_t q) {
  std::uint64_t s = 0;
  while (n > 0) {
    s += n % q;
    n /= q;
  }
  return s;
}

int valuation(const PolyA& a, const PolyA& pi) {
  if (a.is_zero()) return kInfinity;
  int v = 0;
  PolyA x = a;
  while (true) {
    auto [quo, rem] = PolyA::divmod(x, pi);
    if (!rem.is_zero()) return v;
    x = std::move(quo);
    ++v;
  }
}

int valuation(const RatFuncK& x, const PolyA& pi) {
  if (x.is_zero()) return kInfinity;
  return valuation(x.num(), pi) - valuation(x.den(), pi);
}

int valuation_infty(const RatFuncK& x) {
  if (x.is_zero()) return kInfinity;
  return x.den().degree() - x.num().degree();
}

bool is_irreducible(const PolyA& a) {
  if (a.is_zero()) throw DomainError("irreducibility test of the zero polynomial");
  const int n = a.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const FqField& F = a.field();
  const PolyA m = a.monic();
  const PolyA t = PolyA::T(F);
  // T^(q^i) mod m for i = 1..n/2; m is irreducible iff none shares a factor
  // with m after subtracting T, and T^(q^n) = T mod m.
  PolyA frob = t % m;
  for (int i = 1; i <= n / 2; ++i) {
    frob = frob.powmod(F.q(), m);
    if (!gcd(frob - t, m).is_one()) return false;
  }
  for (int i = n / 2 + 1; i <= n; ++i) frob = frob.powmod(F.q(), m);
  return (frob - t) % m == PolyA(F);
}

std::vector<PolyA> monic_polynomials(const FqField& field, int degree) {
  std::vector<PolyA> out;
  const std::uint64_t count = q_power(field.q(), degree);
  out.reserve(count);
  for (std::uint64_t c = 0; c < count; ++c) {
    std::vector<std::uint32_t> codes(static_cast<std::size_t>(degree) + 1, 0);
    std::uint64_t r = c;
    for (int i = 0; i < degree; ++i) {
      codes[i] = static_cast<std::uint32_t>(r % field.q());
      r /= field.q();
    }
    codes[degree] = 1;
    out.emplace_back(field, std::move(codes));
  }
  return out;
}

std::vector<PolyA> monic_irreducibles(const FqField& field, int degree) {
  std::vector<PolyA> out;
  for (auto& f : monic_polynomials(field, degree)) {
    if (is_irreducible(f)) out.push_back(std::move(f));
  }
  return out;
}

bool factors_have_degree_below(const PolyA& a, int e) {
  if (a.is_zero()) throw DomainError("factor-degree test of the zero polynomial");
  const FqField& F = a.field();
  PolyA radical_source = PolyA::from_int(F, 1);
  for (int i = 1; i < e; ++i) radical_source *= bracket(F, i);
  PolyA x = a.monic();
  while (x.degree() > 0) {
    PolyA g = gcd(x, radical_source);
    if (g.is_one()) return false;
    x = x.exact_div(g);
  }
  return true;
}

}  // namespace dmf
