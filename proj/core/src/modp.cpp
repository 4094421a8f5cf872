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

#include "dmf/modp.hpp"

#include "dmf/error.hpp"
#include "dmf/expansion.hpp"

namespace dmf {

ResidueForm reduce_form(const IsobaricForm& f, const PrimeContext& ctx) {
  return f.map(ctx.ring().zero(), [&ctx](const RatFuncK& c) { return ctx.reduce(c); });
}

ResidueSeries reduce_series(const USeries& s, const PrimeContext& ctx) {
  ResidueSeries r(ctx.ring().zero(), s.prec());
  for (int i = 0; i < s.prec(); ++i) {
    if (!s[i].is_zero()) r.set(i, ctx.reduce(s[i]));
  }
  return r;
}

ResiduePoly reduce_poly(const UPoly<RatFuncK>& p, const PrimeContext& ctx) {
  std::vector<Residue> c;
  for (const auto& x : p.coeffs()) c.push_back(ctx.reduce(x));
  return ResiduePoly(ctx.ring().zero(), std::move(c));
}

ResiduePoly companion_mod(const IsobaricForm& f, const PrimeContext& ctx) {
  return companion(reduce_form(f, ctx)).poly;
}

ResiduePoly ss_poly(const PrimeContext& ctx) {
  // With j = g^(q+1) / (-h^(q-1)) the leading coefficient of P(g_d, x) is
  // (-1)^deg; S is the monic normalization.
  const ResiduePoly p = companion_mod(g_d_form(ctx), ctx);
  return p.monic().shifted(ctx.gamma0());
}

QuadElem DrinfeldRank2::j_invariant() const {
  const std::uint64_t q = g_coeff.ring().field().q();
  return g_coeff.pow(q + 1) * delta_coeff.inverse();
}

Additive<QuadElem> phi_pi(const DrinfeldRank2& phi, const PrimeContext& ctx) {
  const ResidueRing& R = ctx.ring();
  const std::uint64_t q = ctx.q();
  if (phi.delta_coeff.is_zero()) throw DomainError("rank-2 module needs a nonzero Delta coefficient");
  const QuadElem zero = phi.g_coeff.zero_like();
  auto frob = [q](const QuadElem& x, int i) {
    QuadElem r = x;
    for (int k = 0; k < i; ++k) r = r.pow(q);
    return r;
  };
  const QuadElem tbar(R.from_poly(PolyA::T(R.field())));
  const Additive<QuadElem> phi_t{{tbar, phi.g_coeff, phi.delta_coeff}};
  Additive<QuadElem> power{{zero.one_like()}};
  Additive<QuadElem> result{{zero}};
  const PolyA& pi = ctx.pi();
  for (int i = 0; i <= pi.degree(); ++i) {
    if (i > 0) power = Additive<QuadElem>::compose(phi_t, power, zero, frob);
    if (pi.coeff(i).code == 0) continue;
    result += power.scaled(QuadElem(R.from_poly(PolyA::constant(R.field(), pi.coeff(i)))));
  }
  return result;
}

bool is_supersingular(const DrinfeldRank2& phi, const PrimeContext& ctx) {
  const Additive<QuadElem> f = phi_pi(phi, ctx);
  for (int i = 0; i < 2 * ctx.d() && i < static_cast<int>(f.c.size()); ++i) {
    if (!f.c[i].is_zero()) return false;
  }
  return true;
}

std::vector<QuadElem> ss_bruteforce(const PrimeContext& ctx) {
  std::vector<QuadElem> out;
  const ResidueRing& R = ctx.ring();
  for (const auto& j : QuadElem::elements(R)) {
    DrinfeldRank2 phi{j.one_like(), j.one_like()};
    if (j.is_zero()) {
      phi.g_coeff = j.zero_like();
    } else {
      phi.delta_coeff = j.inverse();
    }
    if (is_supersingular(phi, ctx)) out.push_back(j);
  }
  return out;
}

ResiduePoly ss_product(const std::vector<QuadElem>& js, const PrimeContext& ctx) {
  const ResidueRing& R = ctx.ring();
  const QuadElem zero(R.zero());
  UPoly<QuadElem> prod = UPoly<QuadElem>::constant(zero.one_like());
  for (const auto& j : js) {
    prod *= UPoly<QuadElem>(zero, {-j, zero.one_like()});
  }
  std::vector<Residue> c;
  for (const auto& x : prod.coeffs()) {
    if (!x.is_base()) throw Error("supersingular product has a coefficient outside A/pi");
    c.push_back(x.a());
  }
  return ResiduePoly(R.zero(), std::move(c));
}

namespace {

// True iff s lies in the span of the reduced monomials of weight k, type l.
bool in_reduced_span(ResidueSeries s, const PrimeContext& ctx, std::int64_t k, int l, const ResidueSeries& g,
                     const ResidueSeries& h) {
  const int q = static_cast<int>(ctx.q());
  const int n = s.prec();
  for (const auto& [a, b] : monomial_exponents(q, k, l)) {
    if (b >= n) break;
    const Residue lead = s[static_cast<int>(b)];
    if (lead.is_zero()) continue;
    const Residue c = b % 2 == 0 ? lead : -lead;
    const ResidueSeries mono = g.pow(static_cast<std::uint64_t>(a)).mul_trunc(h.pow(static_cast<std::uint64_t>(b)), n);
    s -= mono.scaled(c);
  }
  return s.is_zero();
}

}  // namespace

std::int64_t filtration(const IsobaricForm& f, const PrimeContext& ctx) {
  const ResidueForm fr = reduce_form(f, ctx);
  if (fr.is_zero()) return kMinusInfinity;
  const int q = static_cast<int>(ctx.q());
  const std::int64_t k = f.weight();
  const int l = f.type();
  const int n = identify_precision(q, k, l);
  const FqField& F = ctx.field();
  const ResidueSeries s = reduce_series(expand(f, n), ctx);
  const ResidueSeries g = reduce_series(g_series(F, n), ctx);
  const ResidueSeries h = reduce_series(h_series(F, n), ctx);
  const std::int64_t step = static_cast<std::int64_t>(ctx.norm()) - 1;
  for (std::int64_t kk = k % step; kk <= k; kk += step) {
    if (monomial_exponents(q, kk, l).empty()) continue;
    if (in_reduced_span(s, ctx, kk, l, g, h)) return kk;
  }
  throw Error("form is not in the span of its own weight modulo the prime");
}

DwwReport check_dww(const IsobaricForm& f, const PrimeContext& ctx) {
  const std::int64_t w = filtration(f, ctx);
  if (w == kMinusInfinity) throw DomainError("filtration is minus infinity");
  const int q = static_cast<int>(ctx.q());
  const std::int64_t step = static_cast<std::int64_t>(ctx.norm()) - 1;
  const std::int64_t k = f.weight();
  if ((k - w) % step != 0) throw Error("weight minus filtration is not a multiple of q^d - 1");
  const std::int64_t alpha = (k - w) / step;
  const int gamma = mu_gamma(q, k, f.type()).gamma;
  const std::int64_t a = (alpha * ctx.gamma0() * q + gamma) / (q + 1);
  const ResiduePoly lhs = companion_mod(f, ctx).shifted(static_cast<int>(a));
  const ResiduePoly s_alpha = ss_poly(ctx).pow(static_cast<std::uint64_t>(alpha));
  ResiduePoly rem = ResiduePoly::divmod(lhs, s_alpha).second;
  const bool ok = rem.is_zero();
  return {k, w, alpha, a, ok, std::move(rem)};
}

CompanionProductReport companion_product_congruence(const IsobaricForm& f, const PrimeContext& ctx) {
  const IsobaricForm gd = g_d_form(ctx);
  const int q = static_cast<int>(ctx.q());
  const ResiduePoly lhs = companion_mod(f * gd, ctx);
  ResiduePoly rhs = companion_mod(gd, ctx) * companion_mod(f, ctx);
  const bool minus_x = ctx.d() % 2 == 1 && mu_gamma(q, f.weight(), f.type()).gamma == q;
  if (minus_x) rhs = -rhs.shifted(1);
  const bool holds = lhs == rhs;
  return {holds, minus_x, lhs, rhs};
}

}  // namespace dmf
