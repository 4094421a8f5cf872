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

#ifndef DMF_SERIES_HPP
#define DMF_SERIES_HPP

#include <algorithm>
#include <cstdint>
#include <type_traits>
#include <utility>
#include <vector>

#include "dmf/arith.hpp"
#include "dmf/error.hpp"
#include "dmf/prime.hpp"
#include "dmf/ratfunc.hpp"

namespace dmf {

namespace detail {

inline bool same_domain(const RatFuncK& a, const RatFuncK& b) { return &a.field() == &b.field(); }
inline bool same_domain(const Residue& a, const Residue& b) { return &a.ring() == &b.ring(); }
inline bool same_domain(const QuadElem& a, const QuadElem& b) { return &a.ring() == &b.ring(); }

inline int sat_add(int a, int b) {
  const long long s = static_cast<long long>(a) + b;
  return s >= kInfinity ? kInfinity : static_cast<int>(s);
}

}  // namespace detail

// Power series in u truncated at a precision N: the value is known modulo
// u^N. Coefficients c_0..c_{N-1} are stored densely.
template <class C>
class Series {
 public:
  Series(C zero, int prec) : zero_(std::move(zero)), prec_(prec) {
    if (prec < 0) throw DomainError("negative series precision");
    c_.assign(static_cast<std::size_t>(prec), zero_);
  }
  Series(C zero, std::vector<C> coeffs, int prec) : zero_(std::move(zero)), c_(std::move(coeffs)), prec_(prec) {
    if (prec < 0) throw DomainError("negative series precision");
    c_.resize(static_cast<std::size_t>(prec), zero_);
  }

  static Series constant(const C& c, int prec) {
    Series r(c.zero_like(), prec);
    if (prec > 0) r.c_[0] = c;
    return r;
  }
  static Series monomial(const C& c, int exponent, int prec) {
    Series r(c.zero_like(), prec);
    if (exponent < prec) r.c_[exponent] = c;
    return r;
  }

  const C& zero() const { return zero_; }
  int prec() const { return prec_; }
  const std::vector<C>& coeffs() const { return c_; }
  const C& operator[](int i) const { return c_[i]; }
  const C& coeff(int i) const {
    if (i < 0) throw DomainError("negative series index");
    if (i >= prec_) throw PrecisionError("coefficient beyond series precision");
    return c_[i];
  }
  void set(int i, C c) {
    if (i < 0 || i >= prec_) throw PrecisionError("coefficient beyond series precision");
    c_[i] = std::move(c);
  }

  /// Least index with a nonzero stored coefficient, or kInfinity.
  int order() const {
    for (int i = 0; i < prec_; ++i) {
      if (!c_[i].is_zero()) return i;
    }
    return kInfinity;
  }
  bool is_zero() const { return order() == kInfinity; }

  Series truncated(int n) const {
    if (n >= prec_) return *this;
    Series r(*this);
    r.c_.resize(static_cast<std::size_t>(std::max(n, 0)), zero_);
    r.prec_ = std::max(n, 0);
    return r;
  }

  Series operator-() const {
    Series r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Series& operator+=(const Series& o) {
    check_domain(o);
    if (o.prec_ < prec_) *this = truncated(o.prec_);
    for (int i = 0; i < prec_; ++i) {
      if (!o.c_[i].is_zero()) c_[i] += o.c_[i];
    }
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_domain(o);
    if (o.prec_ < prec_) *this = truncated(o.prec_);
    for (int i = 0; i < prec_; ++i) {
      if (!o.c_[i].is_zero()) c_[i] -= o.c_[i];
    }
    return *this;
  }
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }

  /// Product with the natural precision min(N_a + ord b, N_b + ord a).
  friend Series operator*(const Series& a, const Series& b) {
    const int pa = detail::sat_add(a.prec_, std::min(b.order(), b.prec_));
    const int pb = detail::sat_add(b.prec_, std::min(a.order(), a.prec_));
    return a.mul_trunc(b, std::min(pa, pb));
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  /// Product computed only up to u^n (the result precision is at most n).
  Series mul_trunc(const Series& o, int n) const {
    check_domain(o);
    const int pa = detail::sat_add(prec_, std::min(o.order(), o.prec_));
    const int pb = detail::sat_add(o.prec_, std::min(order(), prec_));
    const int prec = std::min({n, pa, pb});
    std::vector<int> ia, ib;
    for (int i = 0; i < std::min(prec_, prec); ++i) {
      if (!c_[i].is_zero()) ia.push_back(i);
    }
    for (int i = 0; i < std::min(o.prec_, prec); ++i) {
      if (!o.c_[i].is_zero()) ib.push_back(i);
    }
    Series r(zero_, prec);
    if constexpr (std::is_same_v<C, RatFuncK>) {
      if (zero_.field().is_prime_field() && all_integral(ia) && o.all_integral(ib)) {
        std::vector<std::vector<std::uint64_t>> acc(static_cast<std::size_t>(prec));
        for (int i : ia) {
          for (int j : ib) {
            if (i + j >= prec) break;
            PolyA::accumulate_product(acc[i + j], c_[i].num(), o.c_[j].num());
          }
        }
        for (int k = 0; k < prec; ++k) {
          if (!acc[k].empty()) r.c_[k] = RatFuncK(PolyA::from_accumulator(zero_.field(), acc[k]));
        }
        return r;
      }
    }
    for (int i : ia) {
      for (int j : ib) {
        if (i + j >= prec) break;
        r.c_[i + j] += c_[i] * o.c_[j];
      }
    }
    return r;
  }

  Series scaled(const C& s) const {
    Series r(*this);
    if (s.is_zero()) {
      for (auto& c : r.c_) c = zero_;
      return r;
    }
    for (auto& c : r.c_) {
      if (!c.is_zero()) c = c * s;
    }
    return r;
  }

  /// Multiplication by u^k.
  Series shifted(int k) const {
    if (k < 0) throw DomainError("negative shift");
    Series r(zero_, prec_ + k);
    for (int i = 0; i < prec_; ++i) r.c_[i + k] = c_[i];
    return r;
  }
  /// Division by u^k; the first k coefficients must vanish.
  Series unshifted(int k) const {
    if (k > prec_) throw PrecisionError("shift exceeds series precision");
    for (int i = 0; i < k; ++i) {
      if (!c_[i].is_zero()) throw DomainError("series not divisible by the requested power of u");
    }
    return Series(zero_, std::vector<C>(c_.begin() + k, c_.end()), prec_ - k);
  }

  /// Inverse of a series with invertible constant term, to the same precision.
  Series inverse() const {
    if (prec_ == 0) return *this;
    if (c_[0].is_zero()) throw DomainError("inverting a series with zero constant term");
    const C inv0 = c_[0].inverse();
    const bool unit_one = inv0 == zero_.one_like();
    std::vector<int> nz;
    for (int i = 1; i < prec_; ++i) {
      if (!c_[i].is_zero()) nz.push_back(i);
    }
    Series r(zero_, prec_);
    r.c_[0] = inv0;
    for (int n = 1; n < prec_; ++n) {
      C acc = zero_;
      for (int j : nz) {
        if (j > n) break;
        if (!r.c_[n - j].is_zero()) acc += c_[j] * r.c_[n - j];
      }
      if (acc.is_zero()) continue;
      r.c_[n] = unit_one ? -acc : -(acc * inv0);
    }
    return r;
  }

  /// Exact quotient a / b where ord b <= ord a; precision drops by ord b.
  Series exact_div(const Series& b) const {
    const int v = b.order();
    if (v == kInfinity) throw PrecisionError("division by a series that vanishes to its precision");
    if (order() < v) throw DomainError("series quotient is not a power series");
    const Series num = unshifted(std::min(v, prec_));
    const Series den = b.unshifted(v);
    return num * den.inverse();
  }

  Series pow(std::uint64_t n) const {
    Series result = constant(zero_.one_like(), prec_);
    Series base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

  /// Exact equality of precision and coefficients.
  friend bool operator==(const Series& a, const Series& b) {
    return a.prec_ == b.prec_ && a.c_ == b.c_;
  }

 private:
  void check_domain(const Series& o) const {
    if (!detail::same_domain(zero_, o.zero_)) throw DomainError("mixing series coefficient domains");
  }
  bool all_integral(const std::vector<int>& idx) const {
    if constexpr (std::is_same_v<C, RatFuncK>) {
      for (int i : idx) {
        if (!c_[i].is_integral()) return false;
      }
    }
    return true;
  }

  C zero_;
  std::vector<C> c_;
  int prec_;
};

using USeries = Series<RatFuncK>;
using ResidueSeries = Series<Residue>;

/// True iff a and b agree on every coefficient below min(prec a, prec b).
template <class C>
bool agree(const Series<C>& a, const Series<C>& b) {
  const int n = std::min(a.prec(), b.prec());
  for (int i = 0; i < n; ++i) {
    if (!(a[i] == b[i])) return false;
  }
  return true;
}

}  // namespace dmf

#endif  // DMF_SERIES_HPP
