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

#ifndef DMF_MODP_HPP
#define DMF_MODP_HPP

#include <cstdint>
#include <vector>

#include "dmf/additive.hpp"
#include "dmf/isobaric.hpp"
#include "dmf/prime.hpp"
#include "dmf/series.hpp"
#include "dmf/upoly.hpp"

namespace dmf {

using ResidueForm = Isobaric<Residue>;
using ResiduePoly = UPoly<Residue>;

/// Coefficient-wise reduction; throws DomainError on a non-integral coefficient.
ResidueForm reduce_form(const IsobaricForm& f, const PrimeContext& ctx);
ResidueSeries reduce_series(const USeries& s, const PrimeContext& ctx);
ResiduePoly reduce_poly(const UPoly<RatFuncK>& p, const PrimeContext& ctx);

/// P(f, x) mod pi.
ResiduePoly companion_mod(const IsobaricForm& f, const PrimeContext& ctx);

/// x^gamma0 P(g_d, x) mod pi, scaled to be monic.
ResiduePoly ss_poly(const PrimeContext& ctx);

// phi_T = T mod pi + g tau + Delta tau^2 over F_{q^{2d}}.
struct DrinfeldRank2 {
  QuadElem g_coeff;
  QuadElem delta_coeff;

  QuadElem j_invariant() const;
};

/// Coefficients of phi_pi as an additive polynomial.
Additive<QuadElem> phi_pi(const DrinfeldRank2& phi, const PrimeContext& ctx);

/// True iff phi_pi has no tau^i term for i < 2d.
bool is_supersingular(const DrinfeldRank2& phi, const PrimeContext& ctx);

/// Every supersingular j in F_{q^{2d}}, by exhaustive search.
std::vector<QuadElem> ss_bruteforce(const PrimeContext& ctx);

/// prod (x - j), which must have coefficients in A/pi.
ResiduePoly ss_product(const std::vector<QuadElem>& js, const PrimeContext& ctx);

/// Smallest weight k - m(q^d - 1) >= 0 of the same type containing f mod pi,
/// or kMinusInfinity when f = 0 mod pi.
std::int64_t filtration(const IsobaricForm& f, const PrimeContext& ctx);

struct DwwReport {
  std::int64_t weight;
  std::int64_t filtration;
  std::int64_t alpha;
  std::int64_t a;
  bool divisible;
  ResiduePoly remainder;
};

/// Checks that S^alpha divides x^a P(f, x) mod pi.
DwwReport check_dww(const IsobaricForm& f, const PrimeContext& ctx);

struct CompanionProductReport {
  bool holds;
  bool minus_x_branch;
  ResiduePoly lhs;  // P(f g_d) mod pi
  ResiduePoly rhs;
};

/// P(f g_d) = P(g_d) P(f) mod pi, with the extra factor -x when d is odd and
/// gamma(k, l) = q.
CompanionProductReport companion_product_congruence(const IsobaricForm& f, const PrimeContext& ctx);

}  // namespace dmf

#endif  // DMF_MODP_HPP
