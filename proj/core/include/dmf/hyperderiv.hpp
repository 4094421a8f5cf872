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

#ifndef DMF_HYPERDERIV_HPP
#define DMF_HYPERDERIV_HPP

#include "dmf/prime.hpp"
#include "dmf/ratfunc.hpp"
#include "dmf/series.hpp"

namespace dmf {

/// alpha_{n,r}: the sum over ordered tuples (n_1..n_r) with
/// q^{n_1} + ... + q^{n_r} = n of 1/(d_{n_1} ... d_{n_r}). Memoized per field.
RatFuncK alpha_coeff(const FqField& field, int n, int r);

/// Hyperderivative D_n of a u-series:
///   b_{n,i} = sum_{r=1}^{i-1} (-1)^{n+r} C(i-1, r) alpha_{n,r} a_{i-r}.
/// D_0 is the identity; the output keeps the input precision.
USeries hyperderivative(const USeries& f, int n);

/// min over stored coefficients of v_pi(c_i); kInfinity for the zero series.
int series_valuation(const USeries& f, const PrimeContext& ctx);

/// True iff v_pi(f - g) >= m on the common stored coefficients.
bool congruent(const USeries& f, const USeries& g, const PrimeContext& ctx, int m);

}  // namespace dmf

#endif  // DMF_HYPERDERIV_HPP
