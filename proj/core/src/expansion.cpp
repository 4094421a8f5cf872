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

#include "dmf/expansion.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <tuple>

#include "dmf/arith.hpp"
#include "dmf/error.hpp"
#include "dmf/hyperderiv.hpp"

namespace dmf {

namespace {

// Per-field store of the highest-precision expansion computed so far for each
// key. Entries only grow; readers get truncated copies.
class SeriesCache {
 public:
  USeries get(const std::string& key, int n, const std::function<USeries(int)>& compute) {
    {
      std::lock_guard<std::recursive_mutex> lock(mu_);
      auto it = store_.find(key);
      if (it != store_.end() && it->second.prec() >= n) return it->second.truncated(n);
    }
    USeries s = compute(n);
    std::lock_guard<std::recursive_mutex> lock(mu_);
    auto it = store_.find(key);
    if (it == store_.end() || it->second.prec() < s.prec()) store_.insert_or_assign(key, s);
    return s.truncated(n);
  }

 private:
  std::recursive_mutex mu_;
  std::map<std::string, USeries> store_;
};

SeriesCache& cache_for(const FqField& field) {
  static std::mutex mu;
  static std::map<const FqField*, std::unique_ptr<SeriesCache>> caches;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = caches[&field];
  if (!slot) slot = std::make_unique<SeriesCache>();
  return *slot;
}

std::uint64_t ipow(std::uint64_t q, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

RatFuncK one_of(const FqField& field) { return RatFuncK::from_int(field, 1); }

// B = sum_i l_i u^(q^D - q^i) for rho_a = sum_i l_i tau^i.
USeries denominator_series(const PolyA& a, int prec) {
  const FqField& F = a.field();
  const AdditivePoly rho = carlitz_rho(a);
  const int D = a.degree();
  const std::uint64_t qD = ipow(F.q(), D);
  USeries B(RatFuncK(F), prec);
  for (int i = 0; i <= D; ++i) {
    const std::uint64_t e = qD - ipow(F.q(), i);
    if (e < static_cast<std::uint64_t>(prec) && !rho.c[i].is_zero()) B.set(static_cast<int>(e), RatFuncK(rho.c[i]));
  }
  return B;
}

// sum over monic a of u_a^j for each requested j, to precision n.
std::map<int, USeries> power_sums(const FqField& field, const std::set<int>& js, int n) {
  std::map<int, USeries> out;
  for (int j : js) out.emplace(j, USeries(RatFuncK(field), n));
  if (js.empty()) return out;
  const int jmax = *js.rbegin();
  const int jmin = *js.begin();
  for (int D = 0; ipow(field.q(), D) * static_cast<std::uint64_t>(jmin) < static_cast<std::uint64_t>(n); ++D) {
    const std::uint64_t qD = ipow(field.q(), D);
    for (const auto& a : monic_polynomials(field, D)) {
      const int L = n - static_cast<int>(qD) * jmin;
      const USeries B = denominator_series(a, L);
      USeries Bj = USeries::constant(one_of(field), L);
      for (int j = 1; j <= jmax; ++j) {
        const std::uint64_t start = qD * static_cast<std::uint64_t>(j);
        if (start >= static_cast<std::uint64_t>(n)) break;
        const int len = n - static_cast<int>(start);
        Bj = Bj.mul_trunc(B, len);
        if (!js.count(j)) continue;
        out.at(j) += Bj.truncated(len).inverse().shifted(static_cast<int>(start));
      }
    }
  }
  return out;
}

}  // namespace

AdditivePoly carlitz_rho(const PolyA& a) {
  const FqField& F = a.field();
  const PolyA zero(F);
  auto frob = [](const PolyA& x, int i) { return x.frobenius(i); };
  AdditivePoly rho_t{{PolyA::T(F), PolyA::from_int(F, 1)}};
  AdditivePoly power{{PolyA::from_int(F, 1)}};
  AdditivePoly result{{zero}};
  for (int i = 0; i <= a.degree(); ++i) {
    if (i > 0) power = AdditivePoly::compose(rho_t, power, zero, frob);
    if (a.coeff(i).code != 0) result += power.scaled(PolyA::constant(F, a.coeff(i)));
  }
  while (result.c.size() > 1 && result.c.back().is_zero()) result.c.pop_back();
  return result;
}

USeries u_sub_a_power(const PolyA& a, int m, int n) {
  if (!a.is_monic()) throw DomainError("u_a requires a monic polynomial");
  if (m < 0) throw DomainError("negative power of u_a");
  const FqField& F = a.field();
  if (m == 0) return USeries::constant(one_of(F), n);
  const std::uint64_t start = ipow(F.q(), a.degree()) * static_cast<std::uint64_t>(m);
  if (start >= static_cast<std::uint64_t>(n)) return USeries(RatFuncK(F), n);
  const int len = n - static_cast<int>(start);
  const USeries B = denominator_series(a, len);
  return B.pow(static_cast<std::uint64_t>(m)).truncated(len).inverse().shifted(static_cast<int>(start));
}

USeries u_sub_a(const PolyA& a, int n) {
  if (!a.is_monic()) throw DomainError("u_a requires a monic polynomial");
  const std::uint64_t qD = ipow(a.field().q(), a.degree());
  if (qD >= static_cast<std::uint64_t>(n)) throw PrecisionError("precision too small to hold the leading term of u_a");
  return u_sub_a_power(a, 1, n);
}

USeries carlitz_exp(const FqField& field, int n) {
  USeries e(RatFuncK(field), n);
  for (int j = 0; ipow(field.q(), j) < static_cast<std::uint64_t>(n); ++j) {
    e.set(static_cast<int>(ipow(field.q(), j)), RatFuncK(PolyA::from_int(field, 1), d_factorial(field, j)));
  }
  return e;
}

RatFuncK zeta_ratio(const FqField& field, int k) {
  if (k < 0 || k % (static_cast<int>(field.q()) - 1) != 0) throw DomainError("zeta_ratio requires (q-1) | k");
  const USeries e = carlitz_exp(field, k + 2);
  return e.unshifted(1).inverse()[k];
}

std::vector<RatFuncK> goss_coeffs(const FqField& field, int k) {
  if (k < 1) throw DomainError("Goss polynomial index must be positive");
  const USeries e = carlitz_exp(field, k);
  std::vector<RatFuncK> c;
  USeries pw = USeries::constant(one_of(field), k);
  for (int m = 0; m < k; ++m) {
    if (m > 0) pw = pw.mul_trunc(e, k);
    c.push_back(pw[k - 1]);
  }
  return c;
}

UPoly<RatFuncK> goss_poly(const FqField& field, int k) {
  std::vector<RatFuncK> c = goss_coeffs(field, k);
  c.insert(c.begin(), RatFuncK(field));
  return UPoly<RatFuncK>(RatFuncK(field), std::move(c));
}

USeries e_series(const FqField& field, int n) {
  return cache_for(field).get("E", n, [&field](int N) {
    USeries E(RatFuncK(field), N);
    for (int D = 0; ipow(field.q(), D) < static_cast<std::uint64_t>(N); ++D) {
      for (const auto& a : monic_polynomials(field, D)) E += u_sub_a_power(a, 1, N).scaled(RatFuncK(a));
    }
    return E;
  });
}

USeries gk_series(const FqField& field, int i, int n) {
  if (i < 1) throw DomainError("g_i requires i >= 1");
  return cache_for(field).get("g" + std::to_string(i), n, [&field, i](int N) {
    const int k = static_cast<int>(ipow(field.q(), i)) - 1;
    const std::vector<RatFuncK> c = goss_coeffs(field, k);
    std::set<int> js;
    for (int m = 0; m < k; ++m) {
      if (!c[m].is_zero() && m + 1 < N) js.insert(m + 1);
    }
    const std::map<int, USeries> sums = power_sums(field, js, N);
    USeries total(RatFuncK(field), N);
    for (int m = 0; m < k; ++m) {
      if (!js.count(m + 1)) continue;
      total += sums.at(m + 1).scaled(c[m]);
    }
    const RatFuncK beta = zeta_ratio(field, k).inverse();
    return USeries::constant(one_of(field), N) + total.scaled(beta);
  });
}

USeries g_series(const FqField& field, int n) { return gk_series(field, 1, n); }

USeries h_series(const FqField& field, int n) {
  return cache_for(field).get("h", n, [&field](int N) {
    const USeries g = g_series(field, N);
    const USeries E = e_series(field, N);
    const RatFuncK qm1 = RatFuncK::from_int(field, static_cast<std::int64_t>(field.q()) - 1);
    return (E.mul_trunc(g, N)).scaled(qm1) - hyperderivative(g, 1);
  });
}

USeries expand_monomial(const FqField& field, std::int64_t a, std::int64_t b, int n) {
  if (a < 0 || b < 0) throw DomainError("negative exponent in a monomial");
  USeries r = USeries::constant(one_of(field), n);
  if (a > 0) r = g_series(field, n).pow(static_cast<std::uint64_t>(a)).truncated(n);
  if (b > 0) {
    if (b >= n) return USeries(RatFuncK(field), n);
    r = r.mul_trunc(h_series(field, n).pow(static_cast<std::uint64_t>(b)), n);
  }
  return r;
}

USeries expand(const IsobaricForm& f, int n) {
  const FqField& F = f.zero().field();
  USeries out(RatFuncK(F), n);
  if (f.is_zero()) return out;
  const USeries g = g_series(F, n);
  const USeries h = h_series(F, n);
  std::map<std::int64_t, USeries> gp, hp;
  auto power = [n, &F](std::map<std::int64_t, USeries>& memo, const USeries& base, std::int64_t e) -> const USeries& {
    auto it = memo.find(e);
    if (it != memo.end()) return it->second;
    USeries v = e == 0 ? USeries::constant(one_of(F), n) : base.pow(static_cast<std::uint64_t>(e)).truncated(n);
    return memo.emplace(e, std::move(v)).first->second;
  };
  for (const auto& [b, c] : f.terms()) {
    if (b >= n) continue;
    const std::int64_t a = f.a_of(b);
    out += power(gp, g, a).mul_trunc(power(hp, h, b), n).scaled(c);
  }
  return out;
}

int identify_precision(int q, std::int64_t k, std::int64_t l) {
  const auto ex = monomial_exponents(q, k, l);
  const std::int64_t maxb = ex.empty() ? 0 : ex.back().second;
  return static_cast<int>(maxb) + 1 + kIdentifyMargin;
}

IsobaricForm identify(const USeries& s, std::int64_t k, std::int64_t l) {
  const FqField& F = s.zero().field();
  const int q = static_cast<int>(F.q());
  const int need = identify_precision(q, k, l);
  if (s.prec() < need) throw PrecisionError("identify needs precision " + std::to_string(need));
  const int n = s.prec();
  IsobaricForm f(RatFuncK(F), q, k, l);
  USeries r = s;
  for (const auto& [a, b] : monomial_exponents(q, k, l)) {
    const RatFuncK lead = r[static_cast<int>(b)];
    if (lead.is_zero()) continue;
    const RatFuncK c = b % 2 == 0 ? lead : -lead;
    f.add_term(a, b, c);
    r -= expand_monomial(F, a, b, n).scaled(c);
  }
  if (!r.is_zero()) throw NotModularError("series is not a modular form of weight " + std::to_string(k) + " and type " + std::to_string(normalize_type(l, q)));
  return f;
}

IsobaricForm g_i_form(const FqField& field, int i) {
  static std::mutex mu;
  static std::map<std::pair<const FqField*, int>, IsobaricForm> memo;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = memo.find({&field, i});
    if (it != memo.end()) return it->second;
  }
  const int q = static_cast<int>(field.q());
  const std::int64_t k = static_cast<std::int64_t>(ipow(field.q(), i)) - 1;
  const USeries s = gk_series(field, i, identify_precision(q, k, 0));
  IsobaricForm f = identify(s, k, 0);
  for (const auto& [b, c] : f.terms()) {
    if (!c.is_integral()) throw Error("g_" + std::to_string(i) + " has a non-integral coefficient");
  }
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(std::make_pair(&field, i), f);
  return f;
}

IsobaricForm g_d_form(const PrimeContext& ctx) {
  IsobaricForm f = g_i_form(ctx.field(), ctx.d());
  const int q = static_cast<int>(ctx.q());
  const USeries s = gk_series(ctx.field(), ctx.d(), identify_precision(q, f.weight(), 0));
  for (int i = 0; i < s.prec(); ++i) {
    const Residue r = ctx.reduce(s[i]);
    if (i == 0 ? !r.is_one() : !r.is_zero()) throw Error("g_d is not congruent to 1 modulo the prime");
  }
  return f;
}

}  // namespace dmf
