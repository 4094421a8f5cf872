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

#ifndef DMF_ARITH_HPP
#define DMF_ARITH_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "dmf/poly.hpp"
#include "dmf/ratfunc.hpp"

namespace dmf {

/// Valuation of zero.
inline constexpr int kInfinity = std::numeric_limits<int>::max();
/// Filtration of a form congruent to zero.
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

/// [i] = T^(q^i) - T, the product of the monic primes of degree dividing i.
/// Throws DomainError for i = 0.
PolyA bracket(const FqField& field, int i);

/// d_i, the product of all monic polynomials of degree i:
/// d_0 = 1, d_i = [1]^(q^(i-1)) ... [i-1]^q [i].
PolyA d_factorial(const FqField& field, int i);

/// Binomial coefficient C(m, n) reduced mod p, by Lucas' theorem.
std::uint32_t binom_char_p(std::uint64_t m, std::uint64_t n, std::uint32_t p);

/// Sum of the base-q digits of n.
std::uint64_t digit_sum(std::uint64_t n, std::uint64_t q);

/// Exponent of the prime pi in a nonzero polynomial; kInfinity for zero.
int valuation(const PolyA& a, const PolyA& pi);
int valuation(const RatFuncK& x, const PolyA& pi);
/// v_inf(x) = deg(den) - deg(num); kInfinity for zero.
int valuation_infty(const RatFuncK& x);

/// Rabin's test: true iff a (nonzero, degree >= 1) is irreducible over F_q.
bool is_irreducible(const PolyA& a);

/// Every monic irreducible of the given degree, in increasing order of the
/// coefficient code (c_{d-1}, ..., c_0) read as a base-q number.
std::vector<PolyA> monic_irreducibles(const FqField& field, int degree);

/// Every monic polynomial of the given degree, in the same order.
std::vector<PolyA> monic_polynomials(const FqField& field, int degree);

/// True iff every irreducible factor of a nonzero polynomial has degree
/// strictly less than e.
bool factors_have_degree_below(const PolyA& a, int e);

}  // namespace dmf

#endif  // DMF_ARITH_HPP
