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

#ifndef DMF_TESTS_SUPPORT_HPP
#define DMF_TESTS_SUPPORT_HPP

#include <cstdint>
#include <ostream>
#include <random>
#include <string_view>

#include <dmf/dmf.hpp>

namespace dmf {

inline std::ostream& operator<<(std::ostream& os, const PolyA& x) { return os << format_poly(x); }
inline std::ostream& operator<<(std::ostream& os, const RatFuncK& x) { return os << format_ratfunc(x); }
inline std::ostream& operator<<(std::ostream& os, const Residue& x) { return os << format_residue(x); }
inline std::ostream& operator<<(std::ostream& os, const USeries& x) { return os << format_series(x); }
inline std::ostream& operator<<(std::ostream& os, const ResidueSeries& x) { return os << format_series(x); }
inline std::ostream& operator<<(std::ostream& os, const IsobaricForm& x) { return os << format_form(x); }
inline std::ostream& operator<<(std::ostream& os, const UPoly<RatFuncK>& x) { return os << format_upoly(x); }
inline std::ostream& operator<<(std::ostream& os, const UPoly<Residue>& x) { return os << format_upoly(x); }

}  // namespace dmf

namespace dmf::testing {

inline const FqField& F3() { return FqField::of_order(3); }
inline const FqField& F5() { return FqField::of_order(5); }
inline const FqField& F9() { return FqField::of_order(9); }

inline PolyA P(const FqField& F, std::string_view s) { return parse_poly(F, s); }
inline RatFuncK K(const FqField& F, std::string_view s) { return parse_ratfunc(F, s); }
inline USeries S(const FqField& F, std::string_view s) { return parse_series(F, s); }

using Rng = std::mt19937_64;

inline PolyA random_poly(const FqField& F, Rng& rng, int max_deg) {
  std::uniform_int_distribution<int> deg(-1, max_deg);
  std::uniform_int_distribution<std::uint32_t> code(0, F.q() - 1);
  const int d = deg(rng);
  std::vector<std::uint32_t> c;
  for (int i = 0; i <= d; ++i) c.push_back(code(rng));
  return PolyA(F, c);
}

inline PolyA random_nonzero_poly(const FqField& F, Rng& rng, int max_deg) {
  for (;;) {
    PolyA p = random_poly(F, rng, max_deg);
    if (!p.is_zero()) return p;
  }
}

inline RatFuncK random_ratfunc(const FqField& F, Rng& rng, int max_deg) {
  return RatFuncK(random_poly(F, rng, max_deg), random_nonzero_poly(F, rng, max_deg));
}

// Series with polynomial coefficients, a few of them zero.
inline USeries random_integral_series(const FqField& F, Rng& rng, int prec, int max_deg) {
  USeries s(RatFuncK(F), prec);
  std::bernoulli_distribution sparse(0.3);
  for (int i = 0; i < prec; ++i) {
    if (sparse(rng)) continue;
    s.set(i, RatFuncK(random_poly(F, rng, max_deg)));
  }
  return s;
}

inline USeries random_series(const FqField& F, Rng& rng, int prec, int max_deg) {
  USeries s(RatFuncK(F), prec);
  for (int i = 0; i < prec; ++i) s.set(i, random_ratfunc(F, rng, max_deg));
  return s;
}

}  // namespace dmf::testing

#endif  // DMF_TESTS_SUPPORT_HPP
