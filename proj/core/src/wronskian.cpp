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

#include "dmf/wronskian.hpp"

#include <algorithm>
#include <chrono>
#include <random>

#include "dmf/det.hpp"
#include "dmf/error.hpp"
#include "dmf/expansion.hpp"
#include "dmf/hyperderiv.hpp"
#include "dmf/modp.hpp"
#include "dmf/text.hpp"

namespace dmf {

namespace {

std::int64_t ipow(std::int64_t q, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= q;
  return r;
}

void require_cubic_prime_field(const PrimeContext& ctx) {
  if (!ctx.field().is_prime_field()) throw DomainError("this verification requires q = p prime");
  if (ctx.d() != 3) throw DomainError("this verification requires deg pi = 3");
}

class Timer {
 public:
  Timer() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

bool VerifyReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

void VerifyReport::add(std::string name, bool ok, std::string detail) {
  checks.push_back({std::move(name), ok, std::move(detail)});
}

std::vector<IsobaricForm> special_basis(const FqField& field) {
  if (!field.is_prime_field()) throw DomainError("special basis requires q = p prime");
  require_odd_q(field);
  const std::int64_t q = field.q();
  std::vector<IsobaricForm> out;
  for (std::int64_t n = 0; n <= q - 1; ++n) {
    out.push_back(IsobaricForm::monomial(RatFuncK::from_int(field, 1), static_cast<int>(q), n * (q + 1),
                                         q * q - q + 1 - n * (q - 1)));
  }
  return out;
}

USeries wronskian_series(const std::vector<USeries>& fs) {
  if (fs.empty()) throw DomainError("Wronskian of an empty list");
  const std::size_t n = fs.size();
  int prec = fs[0].prec();
  for (const auto& f : fs) prec = std::min(prec, f.prec());
  Matrix<USeries> m;
  for (const auto& f : fs) {
    std::vector<USeries> row;
    for (std::size_t j = 0; j < n; ++j) row.push_back(hyperderivative(f.truncated(prec), static_cast<int>(j)));
    m.push_back(std::move(row));
  }
  const RatFuncK& z = fs[0].zero();
  const USeries zero(z, prec);
  const USeries one = USeries::constant(z.one_like(), prec);
  if (n < 6) return det_minor_dp(m, zero, one);
  return det_bareiss(m, zero, one, [](const USeries& a, const USeries& b) { return a.exact_div(b); });
}

IsobaricForm wronskian_serre(const std::vector<IsobaricForm>& fs) {
  if (fs.empty()) throw DomainError("Wronskian of an empty list");
  const int q = fs[0].q();
  if (static_cast<int>(fs.size()) > q) throw DomainError("symbolic Wronskian takes at most q forms");
  const std::uint32_t p = fs[0].zero().field().p();
  for (const auto& f : fs) {
    if (f.weight() != fs[0].weight() || f.type() != fs[0].type()) {
      throw DomainError("Wronskian forms must share weight and type");
    }
  }
  Matrix<IsobaricForm> m;
  for (const auto& f : fs) {
    std::vector<IsobaricForm> row;
    for (std::size_t j = 0; j < fs.size(); ++j) row.push_back(serre_del_n(f, static_cast<int>(j), p));
    m.push_back(std::move(row));
  }
  return det_isobaric(m);
}

std::int64_t epsilon(int q, int d) {
  if (d < 3) throw DomainError("epsilon requires d >= 3");
  const std::int64_t g = genus(q, d);
  const std::int64_t gg = g * (g + 1);
  const int gamma = mu_gamma(q, (ipow(q, d) + 1) * gg, gg).gamma;
  const std::int64_t num = d % 2 == 1 ? gamma : q * gg - gamma;
  if (num % (q + 1) != 0 || num < 0) throw Error("epsilon is not a nonnegative integer");
  return num / (q + 1);
}

std::int64_t exponent_a(int q, int d) {
  if (d < 3) throw DomainError("exponent_a requires d >= 3");
  const std::int64_t g = genus(q, d);
  const std::int64_t gg = g * (g + 1);
  const int gamma = mu_gamma(q, (ipow(q, d) + 1) * gg, gg).gamma;
  return (g * (g - 1) * (d % 2) * q + gamma) / (q + 1);
}

int wronskian_precision(std::uint32_t p) { return static_cast<int>(p * p * (p + 1) / 2 + 40); }

VerifyReport verify_theorem_computation(const PrimeContext& ctx, int n) {
  require_cubic_prime_field(ctx);
  Timer timer;
  const FqField& F = ctx.field();
  const int q = static_cast<int>(ctx.q());
  const std::int64_t p = q;
  const int need = wronskian_precision(ctx.q());
  if (n == 0) n = need;
  if (n < need) throw PrecisionError("Wronskian check needs precision " + std::to_string(need));
  VerifyReport rep{"computation", ctx.q(), format_poly(ctx.pi()), n, 0, {}};

  const RatFuncK one = RatFuncK::from_int(F, 1);
  const std::int64_t k = ipow(q, 3) + 1;
  const auto basis = special_basis(F);
  const auto full = monomial_basis(one, q, k, 1);
  const auto cusp = double_cusp_basis(one, q, k, 1);
  bool same = basis.size() == cusp.size();
  for (const auto& f : basis) {
    bool found = false;
    for (const auto& c : cusp) found = found || c == f;
    same = same && found;
  }
  rep.add("basis", same && static_cast<std::int64_t>(full.size()) == ctx.genus() + 1 &&
                       static_cast<std::int64_t>(cusp.size()) == ctx.genus(),
          "dim M = " + std::to_string(full.size()) + ", double cusp dim = " + std::to_string(cusp.size()));

  const IsobaricForm w = wronskian_serre(basis);
  const std::int64_t ea = p * p * (p - 1) / 2;
  const std::int64_t eb = p * p * (p + 1) / 2;
  int sign = 0;
  if (w.terms().size() == 1 && w.terms().begin()->first == eb && w.a_of(eb) == ea) {
    const RatFuncK& c = w.terms().begin()->second;
    if (c == one) sign = 1;
    if (c == -one) sign = -1;
  }
  rep.add("symbolic", sign != 0, "W = " + format_form(w) + ", sign " + std::to_string(sign));

  std::vector<USeries> fs;
  for (const auto& f : basis) fs.push_back(expand(f, n));
  const USeries ws = wronskian_series(fs);
  const int common = std::min(ws.prec(), n);
  const USeries we = expand(w, common);
  const bool equal = agree(ws, we) && common >= need;
  rep.add("series", equal, "compared " + std::to_string(common) + " coefficients");

  const int ord = ws.order();
  rep.add("u-order", ord == eb, "order " + (ord == kInfinity ? std::string("inf") : std::to_string(ord)));
  rep.seconds = timer.seconds();
  return rep;
}

VerifyReport verify_theorem_ahlgrenono(const PrimeContext& ctx) {
  require_cubic_prime_field(ctx);
  Timer timer;
  const FqField& F = ctx.field();
  const int q = static_cast<int>(ctx.q());
  const std::int64_t p = q;
  VerifyReport rep{"ahlgrenono", ctx.q(), format_poly(ctx.pi()), 0, 0, {}};
  const RatFuncK one = RatFuncK::from_int(F, 1);

  const IsobaricForm G = IsobaricForm::monomial(one, q, p * p * (p - 1), p * p * (p + 1));
  const MuGamma mg = mu_gamma(q, 2 * p * (p * p * p + p), 2);
  rep.add("mu-gamma", mg.mu == 2 * p * p * p - 2 * p * p + 3 * p - 1 && mg.gamma == p - 1,
          "mu = " + std::to_string(mg.mu) + ", gamma = " + std::to_string(mg.gamma));

  const auto PG = companion(G).poly;
  rep.add("companion-G", PG == UPoly<RatFuncK>::monomial(one, static_cast<int>((p - 1) * (p - 1))),
          "P(G, x) = " + format_upoly(PG));

  const IsobaricForm g3 = g_d_form(ctx);
  const std::int64_t steps = p * (p - 1);
  IsobaricForm f = G;
  int minus_x = 0;
  bool chain_ok = true;
  for (std::int64_t i = 0; i < steps; ++i) {
    const CompanionProductReport r = companion_product_congruence(f, ctx);
    chain_ok = chain_ok && r.holds;
    if (r.minus_x_branch) ++minus_x;
    f *= g3;
  }
  rep.add("chain", chain_ok && minus_x == p - 1, "-x branch taken " + std::to_string(minus_x) + " times");

  const ResiduePoly Pg3 = companion_mod(g3, ctx);
  const ResiduePoly PGr = companion_mod(G, ctx);
  const Residue r1 = ctx.ring().one();
  const ResiduePoly mx = ResiduePoly::monomial(-r1, 1);
  const ResiduePoly lhs = mx.pow(static_cast<std::uint64_t>(p - 1)) * PGr * Pg3.pow(static_cast<std::uint64_t>(steps));
  const ResiduePoly rhs = ss_poly(ctx).pow(static_cast<std::uint64_t>(steps));
  const std::int64_t deg = (ctx.genus() + 1) * steps;
  rep.add("congruence", lhs == rhs && lhs.degree() == deg,
          "degree " + std::to_string(lhs.degree()) + " vs " + std::to_string(rhs.degree()));

  ResiduePoly end = companion_mod(f, ctx);
  rep.add("chain-endpoint", end == lhs, "P(G g_3^" + std::to_string(steps) + ") mod pi");
  rep.seconds = timer.seconds();
  return rep;
}

IsobaricForm random_integral_form(const FqField& field, std::uint64_t seed, int max_b, int max_deg) {
  std::mt19937_64 rng(seed);
  const int q = static_cast<int>(field.q());
  auto rand_poly = [&](bool nonzero) {
    std::vector<std::uint32_t> c(static_cast<std::size_t>(max_deg) + 1);
    do {
      for (auto& x : c) x = static_cast<std::uint32_t>(rng() % q);
    } while (nonzero && std::all_of(c.begin(), c.end(), [](std::uint32_t x) { return x == 0; }));
    return RatFuncK(PolyA(field, c));
  };
  const std::int64_t b0 = static_cast<std::int64_t>(rng() % (max_b + 1));
  const std::int64_t a0 = static_cast<std::int64_t>(rng() % (2 * q + 1));
  const std::int64_t k = a0 * (q - 1) + b0 * (q + 1);
  IsobaricForm f(RatFuncK(field), q, k, b0);
  for (const auto& [a, b] : monomial_exponents(q, k, b0)) {
    f.add_term(a, b, rand_poly(a == a0 && b == b0));
  }
  return f;
}

IsobaricForm random_dww_form(const PrimeContext& ctx, std::uint64_t seed) {
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  const FqField& F = ctx.field();
  const int q = static_cast<int>(ctx.q());
  IsobaricForm r1 = random_integral_form(F, rng(), 6, std::max(0, std::min(2, ctx.d() - 1)));
  // A unit coefficient keeps r1 nonzero mod pi.
  const auto ex = monomial_exponents(q, r1.weight(), r1.type());
  const auto [a1, b1] = ex.front();
  r1.add_term(a1, b1, RatFuncK::from_int(F, 1) - r1.coeff(a1, b1));
  const int e = static_cast<int>(rng() % 3);
  const IsobaricForm gd = g_d_form(ctx);
  IsobaricForm main = r1 * gd.pow(static_cast<std::uint64_t>(e));
  IsobaricForm r2(RatFuncK(F), q, main.weight(), main.type());
  for (const auto& [a, b] : monomial_exponents(q, main.weight(), main.type())) {
    const std::uint32_t c = static_cast<std::uint32_t>(rng() % q);
    if (c != 0 && rng() % 2 == 0) r2.add_term(a, b, RatFuncK(PolyA::constant(F, F.from_code(c))));
  }
  return main + r2.scaled(RatFuncK(ctx.pi()));
}

VerifyReport verify_dww(const PrimeContext& ctx, int count, std::uint64_t seed) {
  Timer timer;
  VerifyReport rep{"dww", ctx.q(), format_poly(ctx.pi()), 0, 0, {}};
  const IsobaricForm gd = g_d_form(ctx);
  auto run = [&rep, &ctx](const std::string& name, const IsobaricForm& f) {
    const DwwReport r = check_dww(f, ctx);
    rep.add(name, r.divisible,
            "k = " + std::to_string(r.weight) + ", w = " + std::to_string(r.filtration) +
                ", alpha = " + std::to_string(r.alpha) + ", a = " + std::to_string(r.a));
  };
  run("g_d", gd);
  run("g_d^2", gd * gd);
  for (int i = 0; i < count; ++i) run("random-" + std::to_string(i), random_dww_form(ctx, seed + i));
  rep.seconds = timer.seconds();
  return rep;
}

VerifyReport verify_companion_products(const PrimeContext& ctx, int count, std::uint64_t seed) {
  Timer timer;
  const FqField& F = ctx.field();
  const int q = static_cast<int>(ctx.q());
  VerifyReport rep{"companion-products", ctx.q(), format_poly(ctx.pi()), 0, 0, {}};
  auto run = [&rep, &ctx](const std::string& name, const IsobaricForm& f) {
    const CompanionProductReport r = companion_product_congruence(f, ctx);
    rep.add(name, r.holds, r.minus_x_branch ? "-x branch" : "plain branch");
  };
  run("one", IsobaricForm::one(RatFuncK(F), q));
  run("g", form_g(F));
  run("h", form_h(F));
  run("g^q", form_g(F).pow(static_cast<std::uint64_t>(q)));
  for (int i = 0; i < count; ++i) run("random-" + std::to_string(i), random_integral_form(F, seed + i));
  rep.seconds = timer.seconds();
  return rep;
}

}  // namespace dmf
