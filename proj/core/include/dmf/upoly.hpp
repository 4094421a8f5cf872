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

#ifndef DMF_UPOLY_HPP
#define DMF_UPOLY_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "dmf/arith.hpp"
#include "dmf/error.hpp"

namespace dmf {

// Dense univariate polynomial over a coefficient type C providing the
// coefficient protocol: zero_like, one_like, from_int_like, is_zero, inverse
// and the ring operators.
template <class C>
class UPoly {
 public:
  explicit UPoly(C zero) : zero_(std::move(zero)) {}
  UPoly(C zero, std::vector<C> coeffs) : zero_(std::move(zero)), c_(std::move(coeffs)) { trim(); }

  static UPoly constant(const C& c) {
    UPoly r(c.zero_like());
    r.c_.push_back(c);
    r.trim();
    return r;
  }
  static UPoly x(const C& proto) { return monomial(proto.one_like(), 1); }
  static UPoly monomial(const C& c, int deg) {
    UPoly r(c.zero_like());
    r.c_.assign(static_cast<std::size_t>(deg) + 1, c.zero_like());
    r.c_[deg] = c;
    r.trim();
    return r;
  }

  const C& zero() const { return zero_; }
  int degree() const { return c_.empty() ? kNegInfDegree : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<C>& coeffs() const { return c_; }
  C coeff(int i) const {
    return (i < 0 || i >= static_cast<int>(c_.size())) ? zero_ : c_[i];
  }
  const C& leading() const { return c_.empty() ? zero_ : c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == zero_.one_like(); }

  /// Least i with a nonzero coefficient; kInfinity for the zero polynomial.
  int order() const {
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (!c_[i].is_zero()) return static_cast<int>(i);
    }
    return kInfinity;
  }

  UPoly operator-() const {
    UPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }
  UPoly& operator+=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), zero_);
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    UPoly r(a.zero_);
    if (a.c_.empty() || b.c_.empty()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) {
        if (b.c_[j].is_zero()) continue;
        r.c_[i + j] += a.c_[i] * b.c_[j];
      }
    }
    r.trim();
    return r;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  UPoly scaled(const C& s) const {
    UPoly r(*this);
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }
  UPoly shifted(int k) const {
    if (c_.empty() || k == 0) return *this;
    UPoly r(zero_);
    r.c_.assign(static_cast<std::size_t>(k), zero_);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
  }
  UPoly pow(std::uint64_t n) const {
    UPoly result = constant(zero_.one_like());
    UPoly base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }
  UPoly monic() const {
    if (c_.empty()) throw DomainError("monic of the zero polynomial");
    return scaled(c_.back().inverse());
  }

  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw DomainError("polynomial division by zero");
    UPoly q(a.zero_), r(a);
    if (a.degree() < b.degree()) return {q, r};
    const C lead_inv = b.leading().inverse();
    const int db = b.degree();
    q.c_.assign(static_cast<std::size_t>(a.degree() - db) + 1, a.zero_);
    for (int i = r.degree(); i >= db; --i) {
      if (static_cast<int>(r.c_.size()) <= i || r.c_[i].is_zero()) continue;
      const C f = r.c_[i] * lead_inv;
      q.c_[i - db] = f;
      for (int j = 0; j <= db; ++j) r.c_[i - db + j] -= f * b.c_[j];
    }
    q.trim();
    r.trim();
    return {q, r};
  }

  C eval(const C& x) const {
    C acc = zero_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  C zero_;
  std::vector<C> c_;
};

/// Hasse derivative D^(n) on polynomials: s^m -> C(m, n) s^(m-n), with the
/// binomial reduced mod p.
template <class C>
UPoly<C> hasse_poly(const UPoly<C>& f, int n, std::uint32_t p) {
  if (n < 0) throw DomainError("Hasse derivative order must be nonnegative");
  std::vector<C> out;
  const auto& c = f.coeffs();
  for (std::size_t m = static_cast<std::size_t>(n); m < c.size(); ++m) {
    const std::uint32_t b = binom_char_p(m, static_cast<std::uint64_t>(n), p);
    out.push_back(b == 0 ? f.zero() : c[m] * f.zero().from_int_like(b));
  }
  return UPoly<C>(f.zero(), std::move(out));
}

}  // namespace dmf

#endif  // DMF_UPOLY_HPP
