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

#ifndef DMF_POLY_HPP
#define DMF_POLY_HPP

#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "dmf/fq.hpp"

namespace dmf {

/// Degree of the zero polynomial.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

/// An element of A = F_q[T] in dense form with no trailing zero
/// coefficients.
class PolyA {
 public:
  explicit PolyA(const FqField& field) : field_(&field) {}
  PolyA(const FqField& field, std::vector<std::uint32_t> codes);

  static PolyA constant(const FqField& field, FqElem c);
  static PolyA from_int(const FqField& field, std::int64_t n);
  static PolyA monomial(const FqField& field, FqElem c, int degree);
  static PolyA T(const FqField& field) { return monomial(field, field.one(), 1); }

  const FqField& field() const { return *field_; }
  /// kNegInfDegree for the zero polynomial.
  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
  bool is_constant() const { return c_.size() <= 1; }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }
  std::size_t term_count() const;

  FqElem coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? FqElem{0} : FqElem{c_[i]};
  }
  FqElem leading() const { return c_.empty() ? FqElem{0} : FqElem{c_.back()}; }
  std::span<const std::uint32_t> codes() const { return c_; }

  PolyA operator-() const;
  PolyA& operator+=(const PolyA& o);
  PolyA& operator-=(const PolyA& o);
  PolyA& operator*=(const PolyA& o) { return *this = *this * o; }
  friend PolyA operator+(PolyA a, const PolyA& b) { return a += b; }
  friend PolyA operator-(PolyA a, const PolyA& b) { return a -= b; }
  friend PolyA operator*(const PolyA& a, const PolyA& b);
  PolyA scaled(FqElem c) const;
  /// Multiplication by T^k.
  PolyA shifted(int k) const;

  /// Quotient and remainder; throws DomainError when b is zero.
  static std::pair<PolyA, PolyA> divmod(const PolyA& a, const PolyA& b);
  friend PolyA operator/(const PolyA& a, const PolyA& b) { return divmod(a, b).first; }
  friend PolyA operator%(const PolyA& a, const PolyA& b) { return divmod(a, b).second; }
  /// Quotient that must be exact; throws DomainError otherwise.
  PolyA exact_div(const PolyA& b) const;

  PolyA monic() const;
  PolyA pow(std::uint64_t n) const;
  /// a^n mod m by square and multiply.
  PolyA powmod(std::uint64_t n, const PolyA& m) const;
  /// Substitutes T -> T^(q^i); equals a^(q^i) since coefficients lie in F_q.
  PolyA frobenius(int i) const;
  FqElem eval(FqElem x) const;

  friend bool operator==(const PolyA& a, const PolyA& b) {
    return a.field_ == b.field_ && a.c_ == b.c_;
  }
  /// Orders by degree, then by coefficients from the top.
  friend bool operator<(const PolyA& a, const PolyA& b);

  /// Adds the coefficient-wise product a*b into a 64-bit accumulator without
  /// reduction (prime fields only). Pair with from_accumulator.
  static void accumulate_product(std::vector<std::uint64_t>& acc, const PolyA& a, const PolyA& b);
  static PolyA from_accumulator(const FqField& field, const std::vector<std::uint64_t>& acc);

 private:
  void trim();

  const FqField* field_;
  std::vector<std::uint32_t> c_;
};

/// Monic gcd; gcd(0, 0) = 0.
PolyA gcd(PolyA a, PolyA b);

/// Bezout coefficients: returns (g, s, t) with s*a + t*b = g = gcd(a, b).
struct ExtendedGcd {
  PolyA g, s, t;
};
ExtendedGcd extended_gcd(const PolyA& a, const PolyA& b);

}  // namespace dmf

#endif  // DMF_POLY_HPP
