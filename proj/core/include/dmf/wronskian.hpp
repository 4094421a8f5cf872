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

#ifndef DMF_WRONSKIAN_HPP
#define DMF_WRONSKIAN_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dmf/isobaric.hpp"
#include "dmf/prime.hpp"
#include "dmf/series.hpp"

namespace dmf {

/// g^(n(q+1)) h^(q^2-q+1-n(q-1)) for 0 <= n <= q-1: weight q^3+1, type 1.
std::vector<IsobaricForm> special_basis(const FqField& field);

/// det [D_m(f_i)], m = 0..n-1.
USeries wronskian_series(const std::vector<USeries>& fs);

/// det [d_m(f_i)] with the Serre operators d_m = d^m / m!; at most q forms.
IsobaricForm wronskian_serre(const std::vector<IsobaricForm>& fs);

/// Number of trivial zeros of the Wronskian's companion polynomial.
std::int64_t epsilon(int q, int d);
/// floor((g(g-1) gamma0 q + gamma((q^d+1) g(g+1), g(g+1))) / (q+1)).
std::int64_t exponent_a(int q, int d);

struct Check {
  std::string name;
  bool passed;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  std::uint32_t q = 0;
  std::string pi;
  int precision = 0;
  double seconds = 0;
  std::vector<Check> checks;

  bool passed() const;
  void add(std::string name, bool ok, std::string detail = {});
};

/// Minimal precision for the Wronskian comparison: p^2(p+1)/2 + 40.
int wronskian_precision(std::uint32_t p);

/// Special basis spans M_{q^3+1,1}; symbolic Wronskian is
/// +-g^(p^2(p-1)/2) h^(p^2(p+1)/2); series Wronskian matches its expansion
/// with u-order p^2(p+1)/2. n = 0 selects wronskian_precision.
VerifyReport verify_theorem_computation(const PrimeContext& ctx, int n = 0);

/// Companion polynomial of G = (g^(p^2(p-1)/2) h^(p^2(p+1)/2))^2 and the
/// congruence (-x)^(p-1) P(G) P(g_3)^(p(p-1)) = S^(p(p-1)) mod pi.
VerifyReport verify_theorem_ahlgrenono(const PrimeContext& ctx);

/// check_dww on g_d, g_d^2 and `count` pseudo-random integral forms.
VerifyReport verify_dww(const PrimeContext& ctx, int count = 20, std::uint64_t seed = 1);

/// companion_product_congruence on 1, g, h, g^q and pseudo-random forms.
VerifyReport verify_companion_products(const PrimeContext& ctx, int count = 10, std::uint64_t seed = 1);

/// Pseudo-random integral form r1 g_d^e + pi r2 with r1 not divisible by pi.
IsobaricForm random_dww_form(const PrimeContext& ctx, std::uint64_t seed);

/// Pseudo-random integral form of a random small weight.
IsobaricForm random_integral_form(const FqField& field, std::uint64_t seed, int max_b = 6, int max_deg = 2);

}  // namespace dmf

#endif  // DMF_WRONSKIAN_HPP
