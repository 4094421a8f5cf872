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

#ifndef DMF_FQ_HPP
#define DMF_FQ_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace dmf {

/// An element of F_q, stored as its code in [0, q). For q = p the code is the
/// residue itself; for q = p^e it is sum(c_i p^i) for the residue
/// sum(c_i X^i) modulo the field's defining polynomial.
struct FqElem {
  std::uint32_t code = 0;

  friend auto operator<=>(const FqElem&, const FqElem&) = default;
};

/// The finite field F_q. Instances are interned and live for the whole
/// program, so holding a `const FqField*` is always safe.
class FqField {
 public:
  /// F_{p^e}. The extension modulus is the monic irreducible of degree e
  /// over F_p with the smallest code.
  static const FqField& get(std::uint32_t p, std::uint32_t e = 1);
  /// Factors q as a prime power; throws DomainError otherwise.
  static const FqField& of_order(std::uint64_t q);

  FqField(const FqField&) = delete;
  FqField& operator=(const FqField&) = delete;

  std::uint32_t p() const { return p_; }
  std::uint32_t e() const { return e_; }
  std::uint32_t q() const { return q_; }
  bool is_prime_field() const { return e_ == 1; }
  /// Coefficients (low to high, over F_p) of the extension modulus; empty
  /// for prime fields.
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  FqElem zero() const { return {0}; }
  FqElem one() const { return {1}; }
  /// Image of an integer under Z -> F_p -> F_q.
  FqElem from_int(std::int64_t n) const;
  /// Element with the given code; throws DomainError if code >= q.
  FqElem from_code(std::uint64_t code) const;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) {
      std::uint32_t s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_table_[a * q_ + b];
  }
  std::uint32_t neg(std::uint32_t a) const {
    if (e_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_table_[a];
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (e_ == 1) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
    return mul_table_[a * q_ + b];
  }
  /// Throws DomainError on zero.
  std::uint32_t inv(std::uint32_t a) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t n) const;

  FqElem add(FqElem a, FqElem b) const { return {add(a.code, b.code)}; }
  FqElem sub(FqElem a, FqElem b) const { return {sub(a.code, b.code)}; }
  FqElem neg(FqElem a) const { return {neg(a.code)}; }
  FqElem mul(FqElem a, FqElem b) const { return {mul(a.code, b.code)}; }
  FqElem inv(FqElem a) const { return {inv(a.code)}; }
  FqElem pow(FqElem a, std::uint64_t n) const { return {pow(a.code, n)}; }

  /// All q elements in code order.
  std::vector<FqElem> elements() const;

 private:
  FqField(std::uint32_t p, std::uint32_t e);

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<std::uint32_t> add_table_;
  std::vector<std::uint32_t> neg_table_;
  std::vector<std::uint32_t> mul_table_;
  std::vector<std::uint32_t> inv_table_;
};

/// Returns true iff n is prime (trial division; n is small here).
bool is_prime_number(std::uint64_t n);

}  // namespace dmf

#endif  // DMF_FQ_HPP
