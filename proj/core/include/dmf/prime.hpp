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

#ifndef DMF_PRIME_HPP
#define DMF_PRIME_HPP

#include <cstdint>
#include <vector>

#include "dmf/poly.hpp"
#include "dmf/ratfunc.hpp"

namespace dmf {

class Residue;

// The residue field A/(pi), realized as remainders mod pi. Instances are
// interned per (field, pi) and live for the whole program, so elements can
// hold a plain pointer to their ring.
class ResidueRing {
 public:
  static const ResidueRing& get(const PolyA& pi);

  ResidueRing(const ResidueRing&) = delete;
  ResidueRing& operator=(const ResidueRing&) = delete;

  const FqField& field() const { return pi_.field(); }
  const PolyA& pi() const { return pi_; }
  int degree() const { return pi_.degree(); }
  /// q^d, the number of elements.
  std::uint64_t size() const { return size_; }

  Residue zero() const;
  Residue one() const;
  Residue from_poly(const PolyA& a) const;
  /// Reduction of a pi-integral rational function; throws DomainError when
  /// pi divides the denominator.
  Residue reduce(const RatFuncK& x) const;
  /// The element whose remainder has coefficient codes given by the base-q
  /// digits of code.
  Residue from_code(std::uint64_t code) const;
  std::vector<Residue> elements() const;
  /// Least element (by code) that is not a square; defines F_{q^{2d}}.
  const PolyA& nonresidue() const { return nonresidue_; }

 private:
  explicit ResidueRing(PolyA pi);

  PolyA pi_;
  std::uint64_t size_;
  PolyA nonresidue_;
};

class Residue {
 public:
  Residue(const ResidueRing& ring, PolyA v) : ring_(&ring), v_(std::move(v)) {}

  const ResidueRing& ring() const { return *ring_; }
  /// The canonical representative, of degree < d.
  const PolyA& value() const { return v_; }
  bool is_zero() const { return v_.is_zero(); }
  bool is_one() const { return v_.is_one(); }

  Residue zero_like() const { return ring_->zero(); }
  Residue one_like() const { return ring_->one(); }
  Residue from_int_like(std::int64_t n) const {
    return Residue(*ring_, PolyA::from_int(ring_->field(), n));
  }

  Residue operator-() const { return Residue(*ring_, -v_); }
  Residue& operator+=(const Residue& o) {
    v_ += o.v_;
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    v_ -= o.v_;
    return *this;
  }
  Residue& operator*=(const Residue& o);
  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }
  friend Residue operator/(const Residue& a, const Residue& b) { return a * b.inverse(); }
  Residue inverse() const;
  Residue pow(std::uint64_t n) const;

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.ring_ == b.ring_ && a.v_ == b.v_;
  }

 private:
  const ResidueRing* ring_;
  PolyA v_;
};

// Element a + b*s of the quadratic extension (A/pi)[s]/(s^2 - nu) ~ F_{q^{2d}}.
class QuadElem {
 public:
  QuadElem(const ResidueRing& ring, PolyA a, PolyA b);
  explicit QuadElem(const Residue& a);

  const ResidueRing& ring() const { return *ring_; }
  Residue a() const { return Residue(*ring_, a_); }
  Residue b() const { return Residue(*ring_, b_); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  /// True iff the element lies in A/pi.
  bool is_base() const { return b_.is_zero(); }

  QuadElem zero_like() const { return QuadElem(*ring_, PolyA(ring_->field()), PolyA(ring_->field())); }
  QuadElem one_like() const {
    return QuadElem(*ring_, PolyA::from_int(ring_->field(), 1), PolyA(ring_->field()));
  }
  QuadElem from_int_like(std::int64_t n) const {
    return QuadElem(*ring_, PolyA::from_int(ring_->field(), n), PolyA(ring_->field()));
  }

  QuadElem operator-() const { return QuadElem(*ring_, -a_, -b_); }
  QuadElem& operator+=(const QuadElem& o) {
    a_ += o.a_;
    b_ += o.b_;
    return *this;
  }
  QuadElem& operator-=(const QuadElem& o) {
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
  }
  QuadElem& operator*=(const QuadElem& o);
  friend QuadElem operator+(QuadElem a, const QuadElem& b) { return a += b; }
  friend QuadElem operator-(QuadElem a, const QuadElem& b) { return a -= b; }
  friend QuadElem operator*(QuadElem a, const QuadElem& b) { return a *= b; }
  QuadElem inverse() const;
  QuadElem pow(std::uint64_t n) const;

  friend bool operator==(const QuadElem& a, const QuadElem& b) {
    return a.ring_ == b.ring_ && a.a_ == b.a_ && a.b_ == b.b_;
  }

  /// All q^{2d} elements, ordered by (b code, a code).
  static std::vector<QuadElem> elements(const ResidueRing& ring);

 private:
  const ResidueRing* ring_;
  PolyA a_;
  PolyA b_;
};

/// Genus of X_0(pi) for deg pi = d: (q^d - q)/(q^2 - 1) for odd d and
/// (q^d - q^2)/(q^2 - 1) for even d.
std::int64_t genus(std::int64_t q, int d);

// A monic prime pi of A together with its residue field and the constants
// attached to it.
class PrimeContext {
 public:
  /// Validates that q is odd and that pi is monic irreducible of degree >= 1.
  explicit PrimeContext(const PolyA& pi);

  const FqField& field() const { return ring_->field(); }
  std::uint32_t q() const { return field().q(); }
  const PolyA& pi() const { return ring_->pi(); }
  int d() const { return ring_->degree(); }
  const ResidueRing& ring() const { return *ring_; }
  std::int64_t genus() const { return genus_; }
  /// gamma(q^d - 1, 0): 1 for odd d, 0 for even d.
  int gamma0() const { return gamma0_; }
  /// q^d.
  std::uint64_t norm() const { return ring_->size(); }

  Residue reduce(const RatFuncK& x) const { return ring_->reduce(x); }

 private:
  const ResidueRing* ring_;
  std::int64_t genus_;
  int gamma0_;
};

/// Throws DomainError unless the field has odd characteristic.
void require_odd_q(const FqField& field);

}  // namespace dmf

#endif  // DMF_PRIME_HPP
