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

#ifndef DMF_EXPANSION_HPP
#define DMF_EXPANSION_HPP

#include <cstdint>
#include <vector>

#include "dmf/additive.hpp"
#include "dmf/isobaric.hpp"
#include "dmf/prime.hpp"
#include "dmf/series.hpp"
#include "dmf/upoly.hpp"

namespace dmf {

/// Extra u-coefficients identify() requires beyond the largest basis index.
inline constexpr int kIdentifyMargin = 10;

/// Carlitz module: rho_T = T + tau, extended to A.
AdditivePoly carlitz_rho(const PolyA& a);

/// u_a = 1 / rho_a(1/u) for monic a, to precision n.
USeries u_sub_a(const PolyA& a, int n);

/// u_a^m to precision n, as u^(m q^D) / B^m with B = sum_i l_i u^(q^D - q^i).
USeries u_sub_a_power(const PolyA& a, int m, int n);

/// e_C(z) = sum_j z^(q^j) / d_j to precision n (z plays the role of u).
USeries carlitz_exp(const FqField& field, int n);

/// [z^k] (z / e_C(z)); requires (q-1) | k.
RatFuncK zeta_ratio(const FqField& field, int k);

/// c_{m,k} = [x^(k-1)] e_C(x)^m for m = 0..k-1.
std::vector<RatFuncK> goss_coeffs(const FqField& field, int k);

/// G_k(t) = sum_m c_{m,k} t^(m+1).
UPoly<RatFuncK> goss_poly(const FqField& field, int k);

/// E = sum over monic a of a u_a.
USeries e_series(const FqField& field, int n);

/// Normalized Eisenstein series g_i of weight q^i - 1.
USeries gk_series(const FqField& field, int i, int n);
USeries g_series(const FqField& field, int n);

/// h = (q-1) E g - D_1 g, so that the Serre derivative of g is -h.
USeries h_series(const FqField& field, int n);

/// Substitutes the u-expansions of g and h.
USeries expand(const IsobaricForm& f, int n);

/// u-expansion of g^a h^b.
USeries expand_monomial(const FqField& field, std::int64_t a, std::int64_t b, int n);

/// Inverse of expand on M_{k,l}. Requires precision >= max b + 1 + margin and
/// throws NotModularError when the residual does not vanish.
IsobaricForm identify(const USeries& s, std::int64_t k, std::int64_t l);

/// Precision identify() needs for weight k and type l.
int identify_precision(int q, std::int64_t k, std::int64_t l);

/// g_d as an isobaric polynomial, d = deg pi; checked integral and = 1 mod pi.
IsobaricForm g_d_form(const PrimeContext& ctx);
/// Same, for a bare degree.
IsobaricForm g_i_form(const FqField& field, int i);

}  // namespace dmf

#endif  // DMF_EXPANSION_HPP
