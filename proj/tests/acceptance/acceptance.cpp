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

// Acceptance run: prints one PASS/FAIL line per criterion and exits nonzero
// if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <dmf/dmf.hpp>

using namespace dmf;

namespace {

// Collects failed sub-checks of one criterion.
class Criterion {
 public:
  void expect(bool ok, const std::string& what) {
    ++total_;
    if (!ok && failures_.size() < 5) failures_.push_back(what);
    if (!ok) ++failed_;
  }
  void note(const std::string& s) { notes_.push_back(s); }
  bool ok() const { return failed_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << total_ - failed_ << "/" << total_ << " checks";
    for (const auto& n : notes_) s << "; " << n;
    for (const auto& f : failures_) s << "; failed: " << f;
    return s.str();
  }

 private:
  int total_ = 0;
  int failed_ = 0;
  std::vector<std::string> failures_;
  std::vector<std::string> notes_;
};

using Rng = std::mt19937_64;

const FqField& field(int q) { return FqField::of_order(static_cast<std::uint64_t>(q)); }
RatFuncK one_of(const FqField& F) { return RatFuncK::from_int(F, 1); }

USeries random_integral_series(const FqField& F, Rng& rng, int prec, int max_deg) {
  USeries s(RatFuncK(F), prec);
  std::uniform_int_distribution<std::uint32_t> code(0, F.q() - 1);
  std::uniform_int_distribution<int> deg(-1, max_deg);
  for (int i = 0; i < prec; ++i) {
    std::vector<std::uint32_t> c;
    for (int j = deg(rng); j >= 0; --j) c.push_back(code(rng));
    s.set(i, RatFuncK(PolyA(F, c)));
  }
  return s;
}

std::vector<PrimeContext> primes(const FqField& F, int d) {
  std::vector<PrimeContext> out;
  for (const auto& pi : monic_irreducibles(F, d)) out.emplace_back(pi);
  return out;
}

IsobaricForm mono(const FqField& F, std::int64_t a, std::int64_t b) {
  return IsobaricForm::monomial(one_of(F), static_cast<int>(F.q()), a, b);
}

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

void genus_and_dimensions(Criterion& c) {
  c.expect(genus(3, 3) == 3, "genus(3,3) = 3");
  c.expect(genus(3, 4) == 9, "genus(3,4) = 9");
  c.expect(genus(5, 3) == 5, "genus(5,3) = 5");
  for (int q : {3, 5}) {
    const std::int64_t k = ipow(q, 3) + 1;
    const std::int64_t g = genus(q, 3);
    const auto all = monomial_basis(one_of(field(q)), q, k, 1);
    const auto dc = double_cusp_basis(one_of(field(q)), q, k, 1);
    c.expect(static_cast<std::int64_t>(all.size()) == g + 1, "dim M at q=" + std::to_string(q));
    c.expect(static_cast<std::int64_t>(dc.size()) == g, "double cusp dim at q=" + std::to_string(q));
    // Distinct monomials of one weight have distinct u-orders, so they are independent.
    const int n = static_cast<int>(all.back().max_b()) + 2;
    std::vector<int> orders;
    for (const auto& f : all) orders.push_back(expand(f, n).order());
    std::sort(orders.begin(), orders.end());
    c.expect(std::adjacent_find(orders.begin(), orders.end()) == orders.end(), "basis independence");
  }
}

// alpha(n, r) as a sum over multisets {c_k copies of q^k}: each multiset
// stands for multinomial(r; c) ordered tuples.
RatFuncK alpha_by_multisets(const FqField& F, int n, int r) {
  const int q = static_cast<int>(F.q());
  std::vector<int> powers;
  for (int v = 1; v <= n; v *= q) powers.push_back(v);
  std::vector<int> counts(powers.size(), 0);
  RatFuncK total(F);
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t k, int rest, int left) {
    if (k == powers.size()) {
      if (rest != 0 || left != 0) return;
      std::uint64_t mult = 1;
      int placed = 0;
      PolyA den = PolyA::from_int(F, 1);
      for (std::size_t i = 0; i < counts.size(); ++i) {
        placed += counts[i];
        mult = mult * binom_char_p(placed, counts[i], F.p()) % F.p();
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

void hyperderivative_laws(Criterion& c) {
  Rng rng(2026);
  const int prec = 30;
  for (int q : {3, 5}) {
    const FqField& F = field(q);
    const std::uint32_t p = F.p();
    for (int s = 0; s < 50; ++s) {
      const USeries f = random_integral_series(F, rng, prec, 2).shifted(static_cast<int>(rng() % 3));
      const USeries g = random_integral_series(F, rng, prec, 2);
      std::vector<USeries> df, dg;
      for (int n = 0; n <= 12; ++n) {
        df.push_back(hyperderivative(f, n));
        dg.push_back(hyperderivative(g, n));
      }
      const USeries fg = f * g;
      const RatFuncK cst(PolyA(F, {1, 2, 1}));
      for (int n = 0; n <= 12; ++n) {
        USeries rhs(RatFuncK(F), prec);
        for (int i = 0; i <= n; ++i) rhs += df[i] * dg[n - i];
        c.expect(agree(hyperderivative(fg, n), rhs), "product rule");
        c.expect(hyperderivative(f.scaled(cst) + g, n) == df[n].scaled(cst) + dg[n], "linearity");
        for (const USeries* x : {&f, &g}) {
          const USeries& dx = x == &f ? df[n] : dg[n];
          if (x->order() == kInfinity) continue;
          c.expect(dx.order() >= x->order() + static_cast<int>(digit_sum(n, q)), "order bound");
        }
      }
      for (int i = 0; i <= 12; ++i) {
        for (int j = 0; i + j <= 12; ++j) {
          const RatFuncK b = RatFuncK::from_int(F, binom_char_p(i + j, i, p));
          c.expect(hyperderivative(df[j], i) == df[i + j].scaled(b), "iterativity");
        }
      }
    }
    // Outside the allowed range alpha vanishes; inside it can still vanish
    // when every multinomial count is divisible by p, so the values are also
    // compared with a direct sum over multisets of q-powers.
    int cancelled = 0;
    for (int n = 1; n <= 30; ++n) {
      const int ds = static_cast<int>(digit_sum(n, q));
      for (int r = 1; r <= 31; ++r) {
        const bool allowed = r <= n && r >= ds && (r - ds) % (q - 1) == 0;
        const RatFuncK a = alpha_coeff(F, n, r);
        if (!allowed) c.expect(a.is_zero(), "alpha vanishing criterion");
        c.expect(a == alpha_by_multisets(F, n, r), "alpha against multiset sum");
        cancelled += allowed && a.is_zero();
      }
    }
    c.note("q=" + std::to_string(q) + ": " + std::to_string(cancelled) + " allowed (n, r) with alpha = 0 mod p");
  }
}

void integrality(Criterion& c) {
  Rng rng(7);
  const FqField& F = field(3);
  for (int s = 0; s < 50; ++s) {
    const USeries f = random_integral_series(F, rng, 40, 3);
    for (int n = 0; n < 27; ++n) {
      const USeries d = hyperderivative(f, n);
      bool ok = true;
      for (const auto& x : d.coeffs()) ok = ok && factors_have_degree_below(x.den(), 3);
      c.expect(ok, "denominator of D_" + std::to_string(n));
    }
  }
}

void generator_expansions(Criterion& c) {
  for (int q : {3, 5}) {
    const FqField& F = field(q);
    const int n = 600;
    const RatFuncK t(PolyA::monomial(F, F.one(), 1));
    const USeries e = carlitz_exp(F, n);
    USeries lhs(RatFuncK(F), n);
    RatFuncK tp = one_of(F);
    for (int i = 0; i < n; ++i, tp *= t) lhs.set(i, e[i] * tp);
    c.expect(lhs == e.scaled(t) + e.pow(q).truncated(n), "e_C functional equation");

    const int m = q == 3 ? 600 : 300;
    const USeries g = g_series(F, m), h = h_series(F, m), E = e_series(F, m);
    bool g_start = g[0].is_one() && g[q - 1] == -RatFuncK(bracket(F, 1));
    for (int i = 1; i < q - 1; ++i) g_start = g_start && g[i].is_zero();
    c.expect(g_start, "g begins 1 - [1]u^(q-1)");
    c.expect(h.order() == 1 && h[1] == RatFuncK::from_int(F, -1), "h begins -u");
    c.expect(agree(hyperderivative(h, 1), (E * h).scaled(RatFuncK::from_int(F, q + 1))), "D_1 h = (q+1) E h");
    for (const IsobaricForm& f : {form_g(F), form_h(F)}) {
      const USeries s = expand(f, m);
      const USeries rhs = hyperderivative(s, 1) - (E * s).scaled(RatFuncK::from_int(F, f.weight()));
      c.expect(agree(expand(serre_del(f), m), rhs), "expand(del f) = D_1 f - k E f");
    }
    for (const auto& ctx : primes(F, 1)) c.expect(congruent(g, USeries::constant(one_of(F), m), ctx, 1), "g = 1 mod deg-1 prime");
  }
  const FqField& F = field(3);
  for (int d = 2; d <= 3; ++d) {
    const USeries gd = gk_series(F, d, 600);
    for (const auto& ctx : primes(F, d)) {
      c.expect(congruent(gd, USeries::constant(one_of(F), 600), ctx, 1), "g_d series = 1 mod pi");
      c.expect(reduce_series(expand(g_d_form(ctx), 600), ctx) == ResidueSeries::constant(ctx.ring().one(), 600),
               "g_d form = 1 mod pi");
    }
  }
}

void supersingular_agreement(Criterion& c) {
  const std::vector<std::pair<int, int>> cases = {{3, 1}, {3, 2}, {3, 3}, {5, 1}, {5, 2}};
  int count = 0;
  for (const auto& [q, d] : cases) {
    for (const auto& ctx : primes(field(q), d)) {
      const std::string tag = "q=" + std::to_string(q) + " pi=" + format_poly(ctx.pi());
      const ResiduePoly S = ss_poly(ctx);
      const auto js = ss_bruteforce(ctx);
      c.expect(S == ss_product(js, ctx), "S equals brute-force product at " + tag);
      c.expect(S.is_monic() && S.degree() == ctx.genus() + 1, "degree g+1 at " + tag);
      c.expect(S.coeff(0).is_zero() == (d % 2 == 1), "x | S iff d odd at " + tag);
      ++count;
    }
  }
  c.note(std::to_string(count) + " primes");
}

void wronskian_identity(Criterion& c) {
  for (int p : {3, 5}) {
    const FqField& F = field(p);
    const auto basis = special_basis(F);
    const IsobaricForm w = wronskian_serre(basis);
    const std::int64_t e1 = p * p * (p - 1) / 2, e2 = p * p * (p + 1) / 2;
    const IsobaricForm m = mono(F, e1, e2);
    int sigma = 0;
    if (w == m) sigma = 1;
    if (w == -m) sigma = -1;
    c.expect(sigma != 0, "symbolic Wronskian is +-g^a h^b at p=" + std::to_string(p));
    c.note("sigma(p=" + std::to_string(p) + ") = " + std::to_string(sigma));
    const int n = static_cast<int>(e2) + 40;
    std::vector<USeries> ex;
    for (const auto& f : basis) ex.push_back(expand(f, n));
    const USeries ws = wronskian_series(ex);
    c.expect(ws.prec() >= n, "series precision at p=" + std::to_string(p));
    c.expect(ws == expand(w, ws.prec()), "series identity at p=" + std::to_string(p));
    c.expect(ws.order() == e2, "u-order at p=" + std::to_string(p));
  }
}

void final_congruence(Criterion& c) {
  const int p = 3;
  const FqField& F = field(p);
  const std::int64_t e1 = p * p * (p - 1) / 2, e2 = p * p * (p + 1) / 2;
  const IsobaricForm G = mono(F, 2 * e1, 2 * e2);
  const MuGamma mg = mu_gamma(p, 2 * p * (p * p * p + p), 2);
  c.expect(mg.mu == 2 * p * p * p - 2 * p * p + 3 * p - 1 && mg.gamma == p - 1, "(mu, gamma)");
  c.expect(G.weight() == 2 * p * (p * p * p + p) && G.type() == normalize_type(2, p), "weight and type of G");
  c.expect(companion(G).poly == UPoly<RatFuncK>::monomial(one_of(F), (p - 1) * (p - 1)), "P(G) = x^((p-1)^2)");
  int count = 0;
  for (const auto& ctx : primes(F, 3)) {
    const Residue one = ctx.ring().one();
    const ResiduePoly x = ResiduePoly::x(one);
    const ResiduePoly lhs = (-x).pow(p - 1) * companion_mod(G, ctx) * companion_mod(g_d_form(ctx), ctx).pow(p * (p - 1));
    const ResiduePoly rhs = ss_poly(ctx).pow(p * (p - 1));
    const std::string tag = format_poly(ctx.pi());
    c.expect(lhs == rhs, "congruence at " + tag);
    c.expect(lhs.degree() == 24 && rhs.degree() == 24, "degree 24 at " + tag);
    c.expect(verify_theorem_ahlgrenono(ctx).passed(), "verifier at " + tag);
    ++count;
  }
  c.note(std::to_string(count) + " cubic primes");
}

void proposition_checks(Criterion& c) {
  const FqField& F = field(3);
  for (const auto& ctx : primes(F, 3)) {
    const std::string tag = format_poly(ctx.pi());
    const IsobaricForm gd = g_d_form(ctx);
    const DwwReport r1 = check_dww(gd, ctx), r2 = check_dww(gd.pow(2), ctx);
    c.expect(r1.divisible && r1.alpha == 1, "g_3 at " + tag);
    c.expect(r2.divisible && r2.alpha == 2, "g_3^2 at " + tag);
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      c.expect(check_dww(random_dww_form(ctx, seed), ctx).divisible, "random form at " + tag);
    }
  }
  int minus_x = 0;
  for (int d : {2, 3}) {
    for (const auto& ctx : primes(F, d)) {
      std::vector<IsobaricForm> fs = {IsobaricForm::one(one_of(F), 3), form_g(F), form_h(F), form_g(F).pow(3),
                                      form_g(F).pow(3) * form_h(F).pow(2)};
      for (std::uint64_t seed = 1; seed <= 10; ++seed) fs.push_back(random_integral_form(F, seed));
      for (const auto& f : fs) {
        const auto rep = companion_product_congruence(f, ctx);
        c.expect(rep.holds, "companion product at " + format_poly(ctx.pi()));
        minus_x += rep.minus_x_branch;
        if (d % 2 == 0) c.expect(!rep.minus_x_branch, "even d never takes the -x branch");
      }
    }
  }
  c.expect(minus_x > 0, "the -x branch is exercised");
  c.note("-x branch taken " + std::to_string(minus_x) + " times");
  for (const auto& [q, d] : std::vector<std::pair<int, int>>{{3, 3}, {3, 5}, {5, 3}, {5, 5}}) {
    c.expect(epsilon(q, d) == 0, "epsilon = 0 for odd d");
  }
  c.expect(epsilon(3, 4) == 67, "epsilon(3,4) = 67");
  const std::int64_t g = genus(3, 3);
  c.expect(exponent_a(3, 3) == 4 && exponent_a(3, 3) < g * (g - 1), "exponent a(3,3) = 4 < g(g-1)");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria = {
      {"genus and dimensions", genus_and_dimensions},
      {"hyperderivative laws", hyperderivative_laws},
      {"integrality of hyperderivatives", integrality},
      {"generator expansions", generator_expansions},
      {"supersingular agreement", supersingular_agreement},
      {"Wronskian identity", wronskian_identity},
      {"final congruence", final_congruence},
      {"proposition checks", proposition_checks},
  };
  int failed = 0;
  int index = 0;
  for (const auto& [name, fn] : criteria) {
    ++index;
    Criterion c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      fn(c);
    } catch (const std::exception& e) {
      c.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("criterion %d %-32s %s (%.2fs) %s\n", index, name.c_str(), c.ok() ? "PASS" : "FAIL", secs,
                c.summary().c_str());
    std::fflush(stdout);
    failed += !c.ok();
  }
  return failed == 0 ? 0 : 1;
}
