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

#ifndef DMF_RATFUNC_HPP
#define DMF_RATFUNC_HPP

#include <cstdint>

#include "dmf/poly.hpp"

namespace dmf {

/// An element of K = F_q(T) in canonical form: monic denominator coprime to
/// the numerator. Integral elements (denominator 1) take fast paths.
class RatFuncK {
 public:
  explicit RatFuncK(const FqField& field) : num_(field), den_(PolyA::from_int(field, 1)) {}
  RatFuncK(PolyA num) : num_(std::move(num)), den_(PolyA::from_int(num_.field(), 1)) {}  // NOLINT
  /// Normalizes; throws DomainError on a zero denominator.
  RatFuncK(PolyA num, PolyA den);

  static RatFuncK from_int(const FqField& field, std::int64_t n) {
    return RatFuncK(PolyA::from_int(field, n));
  }

  const FqField& field() const { return num_.field(); }
  const PolyA& num() const { return num_; }
  const PolyA& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const { return num_.is_one() && den_.is_one(); }
  bool is_integral() const { return den_.is_one(); }

  // Coefficient-ring protocol shared with Residue and the series/polynomial
  // templates.
  RatFuncK zero_like() const { return RatFuncK(field()); }
  RatFuncK one_like() const { return from_int(field(), 1); }
  RatFuncK from_int_like(std::int64_t n) const { return from_int(field(), n); }

  RatFuncK operator-() const;
  RatFuncK& operator+=(const RatFuncK& o);
  RatFuncK& operator-=(const RatFuncK& o);
  RatFuncK& operator*=(const RatFuncK& o);
  RatFuncK& operator/=(const RatFuncK& o) { return *this *= o.inverse(); }
  friend RatFuncK operator+(RatFuncK a, const RatFuncK& b) { return a += b; }
  friend RatFuncK operator-(RatFuncK a, const RatFuncK& b) { return a -= b; }
  friend RatFuncK operator*(RatFuncK a, const RatFuncK& b) { return a *= b; }
  friend RatFuncK operator/(RatFuncK a, const RatFuncK& b) { return a /= b; }
  RatFuncK scaled(FqElem c) const;

  /// Throws DomainError on zero.
  RatFuncK inverse() const;
  RatFuncK pow(std::int64_t n) const;

  friend bool operator==(const RatFuncK& a, const RatFuncK& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  PolyA num_;
  PolyA den_;
};

}  // namespace dmf

#endif  // DMF_RATFUNC_HPP
