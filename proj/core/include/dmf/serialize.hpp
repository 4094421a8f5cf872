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

#ifndef DMF_SERIALIZE_HPP
#define DMF_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "dmf/isobaric.hpp"
#include "dmf/modp.hpp"
#include "dmf/series.hpp"
#include "dmf/wronskian.hpp"

namespace dmf {

inline constexpr int kSchemaVersion = 1;

/// {"q": q, "prec": N, "coeffs": ["c_0", ..., "c_{N-1}"]}
nlohmann::json series_to_json(const USeries& s);
USeries series_from_json(const nlohmann::json& j);

/// {"q": q, "k": k, "l": l, "terms": [{"a": a, "b": b, "c": "..."}]}
nlohmann::json form_to_json(const IsobaricForm& f);
IsobaricForm form_from_json(const nlohmann::json& j);

/// {"q": q, "coeffs": [...]} with coefficients in ascending degree.
nlohmann::json upoly_to_json(const UPoly<RatFuncK>& p);
nlohmann::json upoly_to_json(const ResiduePoly& p);

nlohmann::json report_to_json(const VerifyReport& r);
nlohmann::json dww_to_json(const DwwReport& r);

}  // namespace dmf

#endif  // DMF_SERIALIZE_HPP
