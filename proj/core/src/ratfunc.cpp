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

#include "dmf/ratfunc.hpp"

#include "dmf/error.hpp"

namespace dmf {

RatFuncK::RatFuncK(PolyA num, PolyA den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw DomainError("rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = PolyA::from_int(field(), 1);
    return;
  }
  if (!den_.is_one()) {
    PolyA g = gcd(num_, den_);
    if (!g.is_one()) {
      num_ = num_.exact_div(g);
      den_ = den_.exact_div(g);
    }
    if (!den_.is_monic()) {
      const FqElem li = field().inv(den_.leading());
      num_ = num_.scaled(li);
      den_ = den_.scaled(li);
    }
  }
}

RatFuncK RatFuncK::operator-() const {
  RatFuncK r(*this);
  r.num_ = -r.num_;
  return r;
}

RatFuncK& RatFuncK::operator+=(const RatFuncK& o) {
  if (o.num_.is_zero()) return *this;
  if (num_.is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ += o.num_;
    return *this;
  }
  if (den_ == o.den_) {
    return *this = RatFuncK(num_ + o.num_, den_);
  }
  // Henrici: with g = gcd(b, d), a/b + c/d = (a d' + c b') / (b d') where
  // b = g b', d = g d', and only gcd(numerator, g) can cancel.
  PolyA g = gcd(den_, o.den_);
  if (g.is_one()) {
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    if (num_.is_zero()) den_ = PolyA::from_int(field(), 1);
    return *this;
  }
  PolyA b1 = den_.exact_div(g);
  PolyA d1 = o.den_.exact_div(g);
  PolyA t = num_ * d1 + o.num_ * b1;
  PolyA den = den_ * d1;
  if (t.is_zero()) return *this = RatFuncK(field());
  PolyA g2 = gcd(t, g);
  if (!g2.is_one()) {
    t = t.exact_div(g2);
    den = den.exact_div(g2);
  }
  num_ = std::move(t);
  den_ = std::move(den);
  return *this;
}

RatFuncK& RatFuncK::operator-=(const RatFuncK& o) { return *this += -o; }

RatFuncK& RatFuncK::operator*=(const RatFuncK& o) {
  if (num_.is_zero()) return *this;
  if (o.num_.is_zero()) return *this = o;
  if (den_.is_one() && o.den_.is_one()) {
    num_ *= o.num_;
    return *this;
  }
  PolyA a = num_, c = o.num_, b = den_, d = o.den_;
  if (!d.is_one()) {
    PolyA g1 = gcd(a, d);
    if (!g1.is_one()) {
      a = a.exact_div(g1);
      d = d.exact_div(g1);
    }
  }
  if (!b.is_one()) {
    PolyA g2 = gcd(c, b);
    if (!g2.is_one()) {
      c = c.exact_div(g2);
      b = b.exact_div(g2);
    }
  }
  num_ = a * c;
  den_ = b * d;
  return *this;
}

RatFuncK RatFuncK::scaled(FqElem c) const {
  if (c.code == 0) return RatFuncK(field());
  RatFuncK r(*this);
  r.num_ = r.num_.scaled(c);
  return r;
}

RatFuncK RatFuncK::inverse() const {
  if (num_.is_zero()) throw DomainError("inverse of zero in K");
  RatFuncK r(*this);
  std::swap(r.num_, r.den_);
  if (!r.den_.is_monic()) {
    const FqElem li = field().inv(r.den_.leading());
    r.num_ = r.num_.scaled(li);
    r.den_ = r.den_.scaled(li);
  }
  return r;
}

RatFuncK RatFuncK::pow(std::int64_t n) const {
  if (n < 0) return inverse().pow(-n);
  RatFuncK r(num_.pow(static_cast<std::uint64_t>(n)), den_.pow(static_cast<std::uint64_t>(n)));
  return r;
}

}  // namespace dmf
