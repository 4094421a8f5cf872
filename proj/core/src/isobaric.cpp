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

#include "dmf/isobaric.hpp"

namespace dmf {

MuGamma mu_gamma(int q, std::int64_t k, std::int64_t l) {
  if (k < 0) throw DomainError("weight must be nonnegative");
  const int lt = normalize_type(l, q);
  for (int gamma = 0; gamma <= q; ++gamma) {
    const std::int64_t rest = k - static_cast<std::int64_t>(gamma) * (q - 1);
    if (rest % (q + 1) != 0) continue;
    const std::int64_t mu = rest / (q + 1);
    if (normalize_type(mu, q) == lt) return {mu, gamma};
  }
  throw DomainError("no form of weight " + std::to_string(k) + " and type " + std::to_string(lt));
}

std::vector<std::pair<std::int64_t, std::int64_t>> monomial_exponents(int q, std::int64_t k, std::int64_t l) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  if (k < 0) return out;
  const int lt = normalize_type(l, q);
  for (std::int64_t b = lt; b * (q + 1) <= k; b += q - 1) {
    const std::int64_t rest = k - b * (q + 1);
    if (rest % (q - 1) == 0) out.emplace_back(rest / (q - 1), b);
  }
  return out;
}

IsobaricForm form_g(const FqField& field) {
  return IsobaricForm::monomial(RatFuncK::from_int(field, 1), static_cast<int>(field.q()), 1, 0);
}

IsobaricForm form_h(const FqField& field) {
  return IsobaricForm::monomial(RatFuncK::from_int(field, 1), static_cast<int>(field.q()), 0, 1);
}

IsobaricForm form_delta(const FqField& field) {
  return IsobaricForm::monomial(RatFuncK::from_int(field, -1), static_cast<int>(field.q()), 0, field.q() - 1);
}

}  // namespace dmf
