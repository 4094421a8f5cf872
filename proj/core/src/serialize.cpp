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

#include "dmf/serialize.hpp"

#include "dmf/error.hpp"
#include "dmf/text.hpp"

namespace dmf {

using nlohmann::json;

nlohmann::json series_to_json(const USeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coeffs()) coeffs.push_back(format_ratfunc(c));
  return {{"q", s.zero().field().q()}, {"prec", s.prec()}, {"coeffs", std::move(coeffs)}};
}

USeries series_from_json(const nlohmann::json& j) {
  try {
    const FqField& F = FqField::of_order(j.at("q").get<std::uint64_t>());
    const int prec = j.at("prec").get<int>();
    USeries s(RatFuncK(F), prec);
    const auto& coeffs = j.at("coeffs");
    if (static_cast<int>(coeffs.size()) > prec) throw ParseError("more coefficients than the precision");
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
      s.set(static_cast<int>(i), parse_ratfunc(F, coeffs[i].get<std::string>()));
    }
    return s;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed series JSON: ") + e.what());
  }
}

nlohmann::json form_to_json(const IsobaricForm& f) {
  json terms = json::array();
  for (const auto& [b, c] : f.terms()) terms.push_back({{"a", f.a_of(b)}, {"b", b}, {"c", format_ratfunc(c)}});
  return {{"q", f.q()}, {"k", f.weight()}, {"l", f.type()}, {"terms", std::move(terms)}};
}

IsobaricForm form_from_json(const nlohmann::json& j) {
  try {
    const FqField& F = FqField::of_order(j.at("q").get<std::uint64_t>());
    IsobaricForm f(RatFuncK(F), static_cast<int>(F.q()), j.at("k").get<std::int64_t>(), j.at("l").get<std::int64_t>());
    for (const auto& t : j.at("terms")) {
      f.add_term(t.at("a").get<std::int64_t>(), t.at("b").get<std::int64_t>(),
                 parse_ratfunc(F, t.at("c").get<std::string>()));
    }
    return f;
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed form JSON: ") + e.what());
  }
}

nlohmann::json upoly_to_json(const UPoly<RatFuncK>& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(format_ratfunc(c));
  return {{"q", p.zero().field().q()}, {"coeffs", std::move(coeffs)}, {"text", format_upoly(p)}};
}

nlohmann::json upoly_to_json(const ResiduePoly& p) {
  json coeffs = json::array();
  for (const auto& c : p.coeffs()) coeffs.push_back(format_residue(c));
  return {{"q", p.zero().ring().field().q()},
          {"pi", format_poly(p.zero().ring().pi())},
          {"coeffs", std::move(coeffs)},
          {"text", format_upoly(p)}};
}

nlohmann::json report_to_json(const VerifyReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
  return {{"suite", r.suite}, {"q", r.q},       {"pi", r.pi},
          {"precision", r.precision}, {"seconds", r.seconds}, {"passed", r.passed()},
          {"checks", std::move(checks)}};
}

nlohmann::json dww_to_json(const DwwReport& r) {
  return {{"weight", r.weight},       {"filtration", r.filtration}, {"alpha", r.alpha},
          {"a", r.a},                 {"divisible", r.divisible},   {"remainder", format_upoly(r.remainder)}};
}

}  // namespace dmf
