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

#include <algorithm>
#include <numeric>

#include "support.hpp"

using namespace dmf;
using namespace dmf::testing;

namespace {

IsobaricForm form(const FqField& F, std::string_view s) { return parse_form(F, s); }

IsobaricForm random_form(const FqField& F, Rng& rng, std::int64_t k, std::int64_t l) {
  const int q = static_cast<int>(F.q());
  IsobaricForm f(RatFuncK(F), q, k, l);
  for (const auto& [a, b] : monomial_exponents(q, k, l)) f.add_term(a, b, RatFuncK(random_poly(F, rng, 2)));
  return f;
}

// Leibniz expansion over all permutations.
RatFuncK det_by_permutations(const Matrix<RatFuncK>& m) {
  const FqField& F = m[0][0].field();
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  RatFuncK total(F);
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i) {
      for (std::size_t j = i + 1; j < perm.size(); ++j) inversions += perm[i] > perm[j];
    }
    RatFuncK t = RatFuncK::from_int(F, inversions % 2 ? -1 : 1);
    for (std::size_t i = 0; i < perm.size(); ++i) t *= m[i][perm[i]];
    total += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST_CASE("graded ring operations") {
  const FqField& F = F3();
  const IsobaricForm g = form_g(F), h = form_h(F);
  const IsobaricForm gh = g * h;
  CHECK(gh.weight() == 6);
  CHECK(gh.type() == 1);
  CHECK(gh.coeff(1, 1).is_one());
  const IsobaricForm delta = form_delta(F);
  CHECK(delta.weight() == 8);
  CHECK(delta.type() == 0);
  CHECK(delta == -h.pow(2));
  Rng rng(1);
  for (int it = 0; it < 30; ++it) {
    const IsobaricForm f = random_form(F, rng, 28, 1), f2 = random_form(F, rng, 28, 1);
    CHECK((f + f2) - f2 == f);
    CHECK_THROWS_AS(f + g, DomainError);
  }
  CHECK_THROWS_AS(IsobaricForm(RatFuncK(F), 3, 4, 0).add_term(1, 1, RatFuncK::from_int(F, 1)), DomainError);
}

TEST_CASE("Serre derivation") {
  const FqField& F = F3();
  CHECK(serre_del(form_g(F)) == -form_h(F));
  CHECK(serre_del(form_h(F)).is_zero());
  CHECK(serre_del(form_g(F).pow(2)) == (form_g(F) * form_h(F)).scaled(RatFuncK::from_int(F, -2)));
  Rng rng(5);
  for (const FqField* Fp : {&F3(), &F5()}) {
    const int q = static_cast<int>(Fp->q());
    for (int it = 0; it < 20; ++it) {
      const auto k1 = static_cast<std::int64_t>(rng() % 6) * (q - 1) + (q + 1);
      const auto k2 = static_cast<std::int64_t>(rng() % 6) * (q - 1);
      const IsobaricForm f1 = random_form(*Fp, rng, k1, 1), f2 = random_form(*Fp, rng, k2, 0);
      CHECK(serre_del(f1 * f2) == serre_del(f1) * f2 + f1 * serre_del(f2));
    }
  }
}

TEST_CASE("divided Serre operators") {
  const FqField& F = F3();
  const IsobaricForm g = form_g(F), h = form_h(F);
  Rng rng(8);
  for (int it = 0; it < 10; ++it) {
    const IsobaricForm f = random_form(F, rng, 28, 1);
    CHECK(serre_del_n(f, 1, 3) == serre_del(f));
    CHECK(serre_del_n(f, 0, 3) == f);
  }
  CHECK(serre_del_n(g.pow(4) * h.pow(5), 2, 3).is_zero());
  CHECK(serre_del_n(g.pow(8) * h.pow(3), 2, 3) == g.pow(6) * h.pow(5));
  CHECK_THROWS_AS(serre_del_n(g, 3, 3), DomainError);
  // del^2 = 2! del_2 for q = 5.
  const FqField& F5f = F5();
  for (int it = 0; it < 10; ++it) {
    const IsobaricForm f = random_form(F5f, rng, 36, 0);
    CHECK(serre_del(serre_del(f)) == serre_del_n(f, 2, 5).scaled(RatFuncK::from_int(F5f, 2)));
    CHECK(serre_del(serre_del(serre_del(f))) == serre_del_n(f, 3, 5).scaled(RatFuncK::from_int(F5f, 6)));
  }
}

TEST_CASE("weight and type decomposition") {
  for (int p : {3, 5, 7}) {
    const std::int64_t k = 2 * p * (static_cast<std::int64_t>(p) * p * p + p);
    const MuGamma mg = mu_gamma(p, k, 2);
    CHECK(mg.mu == 2LL * p * p * p - 2LL * p * p + 3LL * p - 1);
    CHECK(mg.gamma == p - 1);
  }
  CHECK(mu_gamma(3, 26, 0).gamma == 1);
  CHECK(mu_gamma(3, 80, 0).gamma == 0);
  CHECK(mu_gamma(3, 2, 0).mu == 0);
  CHECK(mu_gamma(3, 2, 0).gamma == 1);
  // Exhaustive comparison with a direct search over mu.
  for (int q : {3, 5}) {
    for (std::int64_t k = 0; k <= 120; ++k) {
      for (int l = 0; l < q - 1; ++l) {
        int found = 0;
        std::int64_t mu = 0;
        int gamma = 0;
        for (std::int64_t m = -200; m <= 200; ++m) {
          if (normalize_type(m, q) != l) continue;
          const std::int64_t rest = k - m * (q + 1);
          if (rest < 0 || rest % (q - 1) != 0 || rest / (q - 1) > q) continue;
          ++found;
          mu = m;
          gamma = static_cast<int>(rest / (q - 1));
        }
        if (found == 0) {
          CHECK_THROWS_AS(mu_gamma(q, k, l), DomainError);
        } else {
          CHECK(found == 1);
          const MuGamma mg = mu_gamma(q, k, l);
          CHECK(mg.mu == mu);
          CHECK(mg.gamma == gamma);
        }
      }
    }
  }
}

TEST_CASE("companion polynomials") {
  const FqField& F = F3();
  const RatFuncK one = RatFuncK::from_int(F, 1);
  const auto pg = companion(form_g(F));
  CHECK(pg.poly == UPoly<RatFuncK>::constant(one));
  CHECK(pg.mu == 0);
  CHECK(pg.gamma == 1);
  CHECK(companion(form_g(F).pow(4)).poly == UPoly<RatFuncK>::monomial(-one, 1));
  for (int p : {3, 5}) {
    const FqField& Fp = FqField::of_order(p);
    const std::uint64_t e1 = p * p * (p - 1) / 2, e2 = p * p * (p + 1) / 2;
    const IsobaricForm G = (form_g(Fp).pow(e1) * form_h(Fp).pow(e2)).pow(2);
    CHECK(companion(G).poly == UPoly<RatFuncK>::monomial(RatFuncK::from_int(Fp, 1), (p - 1) * (p - 1)));
  }
}

TEST_CASE("companion round trips and trivial zeros") {
  Rng rng(3);
  for (const FqField* F : {&F3(), &F5()}) {
    const int q = static_cast<int>(F->q());
    for (int it = 0; it < 40; ++it) {
      const std::int64_t k = static_cast<std::int64_t>(rng() % 40) * 2;
      const std::int64_t l = static_cast<std::int64_t>(rng() % (q - 1));
      if (monomial_exponents(q, k, l).empty()) continue;
      const IsobaricForm f = random_form(*F, rng, k, l);
      const auto cp = companion(f);
      CHECK(from_companion(cp.poly, q, k, l) == f);
      CHECK(cp.k == cp.mu * (q + 1) + cp.gamma * (q - 1));
      CHECK(companion(from_companion(cp.poly, q, k, l)).poly == cp.poly);
      for (const auto& [b, c] : f.terms()) CHECK(f.a_of(b) >= cp.gamma);
      if (!f.is_zero()) CHECK(cp.poly.degree() == (f.max_a() - cp.gamma) / (q + 1));
    }
  }
}

TEST_CASE("monomial bases") {
  const FqField& F = F3();
  const auto basis = monomial_basis(RatFuncK(F), 3, 28, 1);
  REQUIRE(basis.size() == 4);
  CHECK(basis[0] == parse_form(F, "g^12*h"));
  CHECK(basis[1] == parse_form(F, "g^8*h^3"));
  CHECK(basis[2] == parse_form(F, "g^4*h^5"));
  CHECK(basis[3] == parse_form(F, "h^7"));
  CHECK(double_cusp_basis(RatFuncK(F), 3, 28, 1).size() == 3);
  const auto b5 = monomial_basis(RatFuncK(F5()), 5, 126, 1);
  CHECK(b5.size() == 6);
  CHECK(double_cusp_basis(RatFuncK(F5()), 5, 126, 1).size() == 5);
  const auto bg = monomial_basis(RatFuncK(F), 3, 2, 0);
  REQUIRE(bg.size() == 1);
  CHECK(bg[0] == form_g(F));
}

TEST_CASE("determinants agree with the Leibniz expansion") {
  Rng rng(17);
  const FqField& F = F3();
  for (std::size_t n = 1; n <= 6; ++n) {
    for (int it = 0; it < 5; ++it) {
      Matrix<RatFuncK> m(n, std::vector<RatFuncK>(n, RatFuncK(F)));
      for (auto& row : m) {
        for (auto& x : row) x = RatFuncK(random_poly(F, rng, 2));
      }
      const RatFuncK zero(F), one = RatFuncK::from_int(F, 1);
      const RatFuncK expect = det_by_permutations(m);
      CHECK(det_minor_dp(m, zero, one) == expect);
      CHECK(det_bareiss(m, zero, one, [](const RatFuncK& a, const RatFuncK& b) { return a / b; }) == expect);
    }
  }
}

TEST_CASE("determinants of forms") {
  const FqField& F = F3();
  const IsobaricForm g = form_g(F), h = form_h(F);
  CHECK(det_isobaric(Matrix<IsobaricForm>{{g}}) == g);
  CHECK_THROWS_AS(det_isobaric(Matrix<IsobaricForm>{{g, h}, {h, g}}), DomainError);
  const IsobaricForm z2(RatFuncK(F), 3, 2, 0);
  CHECK(det_isobaric(Matrix<IsobaricForm>{{g, z2}, {h, h}}) == g * h);
  CHECK(det_isobaric(Matrix<IsobaricForm>{{g, h}, {g * g, g * h}}).is_zero());
}
