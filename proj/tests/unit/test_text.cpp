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

#include "support.hpp"

using namespace dmf;
using namespace dmf::testing;

TEST_CASE("polynomial text") {
  const FqField& F = F3();
  CHECK(P(F, "T^3+2T+1") == P(F, "T^3 + 2*T + 1"));
  CHECK(format_poly(P(F, "1 + T + 2T^3")) == "2*T^3 + T + 1");
  CHECK(format_poly(P(F, "-T")) == "2*T");
  CHECK(format_poly(PolyA(F)) == "0");
  CHECK(P(F, "(T+1)^2") == P(F, "T^2 + 2*T + 1"));
  CHECK_THROWS_AS(P(F, "T^"), ParseError);
  CHECK_THROWS_AS(P(F, "T + x"), ParseError);
  CHECK_THROWS_AS(P(F, "1/T"), ParseError);
  Rng rng(1);
  for (const FqField* Fq : {&F3(), &F5(), &F9()}) {
    for (int it = 0; it < 100; ++it) {
      const PolyA a = random_poly(*Fq, rng, 7);
      CHECK(P(*Fq, format_poly(a)) == a);
      const RatFuncK x = random_ratfunc(*Fq, rng, 4);
      CHECK(K(*Fq, format_ratfunc(x)) == x);
    }
  }
}

TEST_CASE("series text") {
  const FqField& F = F3();
  CHECK(format_series(u_sub_a(P(F, "T"), 8)) == "u^3 + 2*T*u^5 + T^2*u^7 + O(u^8)");
  CHECK(format_series(USeries(RatFuncK(F), 4)) == "O(u^4)");
  CHECK_THROWS_AS(S(F, "1 + u"), ParseError);
  Rng rng(2);
  for (int it = 0; it < 30; ++it) {
    const USeries s = random_series(F, rng, 12, 3);
    CHECK(S(F, format_series(s)) == s);
  }
}

TEST_CASE("form and companion text") {
  const FqField& F = F3();
  CHECK(format_form(g_i_form(F, 3)) == "g^13 + (T^3 + 2*T)*g^9*h^2 + (T^9 + 2*T)*g*h^6");
  CHECK_THROWS_AS(parse_form(F, "g + h"), ParseError);
  Rng rng(3);
  for (int it = 0; it < 30; ++it) {
    const IsobaricForm f = random_integral_form(F, rng(), 6, 2);
    CHECK(parse_form(F, format_form(f)) == f);
    const auto cp = companion(f).poly;
    CHECK(parse_upoly(F, format_upoly(cp)) == cp);
  }
}

TEST_CASE("JSON round trips") {
  const FqField& F = F3();
  Rng rng(4);
  for (int it = 0; it < 20; ++it) {
    const USeries s = random_series(F, rng, 10, 3);
    const nlohmann::json j = series_to_json(s);
    CHECK(j.at("q") == 3);
    CHECK(j.at("prec") == 10);
    CHECK(series_from_json(nlohmann::json::parse(j.dump())) == s);
    const IsobaricForm f = random_integral_form(F, rng(), 6, 2);
    CHECK(form_from_json(nlohmann::json::parse(form_to_json(f).dump())) == f);
  }
  const nlohmann::json g = form_to_json(form_g(F));
  CHECK(g.at("k") == 2);
  CHECK(g.at("l") == 0);
  CHECK(g.at("terms").size() == 1);
  CHECK_THROWS(series_from_json(nlohmann::json{{"q", 3}}));
}
