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

#include "dmf/prime.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>

#include "dmf/arith.hpp"
#include "dmf/error.hpp"

namespace dmf {

namespace {

struct RingKey {
  const FqField* field;
  std::vector<std::uint32_t> codes;
  friend bool operator<(const RingKey& a, const RingKey& b) {
    if (a.field != b.field) return a.field < b.field;
    return a.codes < b.codes;
  }
};

}  // namespace

const ResidueRing& ResidueRing::get(const PolyA& pi) {
  static std::mutex mu;
  static std::map<RingKey, std::unique_ptr<ResidueRing>> registry;
  if (pi.degree() < 1 || !pi.is_monic()) {
    throw DomainError("residue ring modulus must be monic of positive degree");
  }
  RingKey key{&pi.field(), {pi.codes().begin(), pi.codes().end()}};
  std::lock_guard<std::mutex> lock(mu);
  auto it = registry.find(key);
  if (it != registry.end()) return *it->second;
  auto ring = std::unique_ptr<ResidueRing>(new ResidueRing(pi));
  auto& ref = *ring;
  registry.emplace(std::move(key), std::move(ring));
  return ref;
}

ResidueRing::ResidueRing(PolyA pi) : pi_(std::move(pi)), size_(1), nonresidue_(pi_.field()) {
  for (int i = 0; i < pi_.degree(); ++i) size_ *= field().q();
  // Euler's criterion needs a field; for reducible moduli no non-square is
  // recorded and the quadratic extension is unavailable.
  if (field().p() == 2 || !is_irreducible(pi_)) return;
  const std::uint64_t half = (size_ - 1) / 2;
  for (std::uint64_t c = 1; c < size_; ++c) {
    const Residue x = from_code(c);
    if (!x.pow(half).is_one()) {
      nonresidue_ = x.value();
      return;
    }
  }
}

Residue ResidueRing::zero() const { return Residue(*this, PolyA(field())); }
Residue ResidueRing::one() const { return Residue(*this, PolyA::from_int(field(), 1)); }

Residue ResidueRing::from_poly(const PolyA& a) const {
  if (a.degree() < pi_.degree()) return Residue(*this, a);
  return Residue(*this, a % pi_);
}

Residue ResidueRing::reduce(const RatFuncK& x) const {
  if (x.is_integral()) return from_poly(x.num());
  const PolyA den = x.den() % pi_;
  if (den.is_zero()) throw DomainError("value is not integral at the prime");
  return from_poly(x.num()) * Residue(*this, den).inverse();
}

Residue ResidueRing::from_code(std::uint64_t code) const {
  std::vector<std::uint32_t> codes;
  const std::uint32_t q = field().q();
  while (code > 0) {
    codes.push_back(static_cast<std::uint32_t>(code % q));
    code /= q;
  }
  return from_poly(PolyA(field(), std::move(codes)));
}

std::vector<Residue> ResidueRing::elements() const {
  std::vector<Residue> out;
  out.reserve(size_);
  for (std::uint64_t c = 0; c < size_; ++c) out.push_back(from_code(c));
  return out;
}

Residue& Residue::operator*=(const Residue& o) {
  v_ = v_ * o.v_;
  if (v_.degree() >= ring_->degree()) v_ = v_ % ring_->pi();
  return *this;
}

Residue Residue::inverse() const {
  if (v_.is_zero()) throw DomainError("inverse of zero in the residue field");
  ExtendedGcd eg = extended_gcd(v_, ring_->pi());
  if (!eg.g.is_one()) throw DomainError("element is not invertible modulo the prime");
  return ring_->from_poly(eg.s);
}

Residue Residue::pow(std::uint64_t n) const {
  Residue result = ring_->one();
  Residue base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

QuadElem::QuadElem(const ResidueRing& ring, PolyA a, PolyA b)
    : ring_(&ring), a_(std::move(a)), b_(std::move(b)) {}

QuadElem::QuadElem(const Residue& a)
    : ring_(&a.ring()), a_(a.value()), b_(PolyA(a.ring().field())) {}

QuadElem& QuadElem::operator*=(const QuadElem& o) {
  if (ring_->nonresidue().is_zero()) throw DomainError("quadratic extension needs a prime modulus");
  const PolyA& pi = ring_->pi();
  PolyA aa = a_ * o.a_;
  PolyA bb = (b_ * o.b_) % pi;
  PolyA na = (aa + bb * ring_->nonresidue()) % pi;
  PolyA nb = (a_ * o.b_ + b_ * o.a_) % pi;
  a_ = std::move(na);
  b_ = std::move(nb);
  return *this;
}

QuadElem QuadElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero in the quadratic extension");
  // (a + b s)^(-1) = (a - b s) / (a^2 - nu b^2)
  const Residue A = a(), B = b();
  const Residue nu(*ring_, ring_->nonresidue());
  const Residue n = (A * A - nu * B * B).inverse();
  const Residue ra = A * n;
  const Residue rb = -(B * n);
  return QuadElem(*ring_, ra.value(), rb.value());
}

QuadElem QuadElem::pow(std::uint64_t n) const {
  QuadElem result = one_like();
  QuadElem base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

std::vector<QuadElem> QuadElem::elements(const ResidueRing& ring) {
  std::vector<QuadElem> out;
  const auto base = ring.elements();
  out.reserve(base.size() * base.size());
  for (const auto& b : base) {
    for (const auto& a : base) out.emplace_back(ring, a.value(), b.value());
  }
  return out;
}

std::int64_t genus(std::int64_t q, int d) {
  if (d < 1) throw DomainError("genus requires d >= 1");
  std::int64_t qd = 1;
  for (int i = 0; i < d; ++i) qd *= q;
  const std::int64_t num = (d % 2 == 1) ? qd - q : qd - q * q;
  return num / (q * q - 1);
}

void require_odd_q(const FqField& field) {
  if (field.p() == 2) throw DomainError("q must be odd");
}

PrimeContext::PrimeContext(const PolyA& pi) {
  require_odd_q(pi.field());
  if (pi.degree() < 1) throw DomainError("prime must have positive degree");
  if (!pi.is_monic()) throw DomainError("prime must be monic");
  if (!is_irreducible(pi)) throw DomainError("polynomial is reducible");
  ring_ = &ResidueRing::get(pi);
  genus_ = dmf::genus(pi.field().q(), pi.degree());
  gamma0_ = pi.degree() % 2;
}

}  // namespace dmf
