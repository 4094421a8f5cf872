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

#ifndef DMF_TEXT_HPP
#define DMF_TEXT_HPP

#include <string>
#include <string_view>
#include <vector>

#include "dmf/isobaric.hpp"
#include "dmf/prime.hpp"
#include "dmf/ratfunc.hpp"
#include "dmf/series.hpp"
#include "dmf/upoly.hpp"

namespace dmf {

// Canonical text forms. Coefficients of F_q print as integers 0..p-1, or as
// element codes 0..q-1 when q is not prime. Polynomials list terms in
// descending degree with explicit '*'.

std::string format_poly(const PolyA& a, std::string_view var = "T");
std::string format_ratfunc(const RatFuncK& x);
std::string format_residue(const Residue& x);
/// a + b*s with s^2 the fixed non-square of A/pi.
std::string format_quad(const QuadElem& x);
std::string format_series(const USeries& s, std::string_view var = "u");
std::string format_series(const ResidueSeries& s, std::string_view var = "u");
std::string format_form(const IsobaricForm& f);
std::string format_form(const Isobaric<Residue>& f);
std::string format_upoly(const UPoly<RatFuncK>& p, std::string_view var = "x");
std::string format_upoly(const UPoly<Residue>& p, std::string_view var = "x");

// Parsers accept +, -, *, /, ^, parentheses and implicit multiplication
// ("2T", "3(T+1)"). Division is allowed only by expressions free of the
// outer variables. Errors raise ParseError.

PolyA parse_poly(const FqField& field, std::string_view text);
RatFuncK parse_ratfunc(const FqField& field, std::string_view text);
/// A series must end with an O(u^N) term giving its precision.
USeries parse_series(const FqField& field, std::string_view text);
/// A homogeneous polynomial in g and h; "0" parses as the zero form of weight 0.
IsobaricForm parse_form(const FqField& field, std::string_view text);
UPoly<RatFuncK> parse_upoly(const FqField& field, std::string_view text);

}  // namespace dmf

#endif  // DMF_TEXT_HPP
