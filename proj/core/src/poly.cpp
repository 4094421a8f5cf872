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

#include "dmf/poly.hpp"

#include <algorithm>

#include "dmf/error.hpp"

namespace dmf {

PolyA::PolyA(const FqField& field, std::vector<std::uint32_t> codes)
    : field_(&field), c_(std::move(codes)) {
  for (auto c : c_) {
    if (c >= field.q()) throw DomainError("coefficient code out of range");
  }
  trim();
}

void PolyA::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyA PolyA::constant(const FqField& field, FqElem c) {
  PolyA r(field);
  if (c.code != 0) r.c_.push_back(c.code);
  return r;
}

PolyA PolyA::from_int(const FqField& field, std::int64_t n) {
  return constant(field, field.from_int(n));
}

PolyA PolyA::monomial(const FqField& field, FqElem c, int degree) {
  PolyA r(field);
  if (c.code == 0) return r;
  r.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
  r.c_.back() = c.code;
  return r;
}

std::size_t PolyA::term_count() const {
  return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](auto c) { return c != 0; }));
}

PolyA PolyA::operator-() const {
  PolyA r(*this);
  for (auto& c : r.c_) c = field_->neg(c);
  return r;
}

PolyA& PolyA::operator+=(const PolyA& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->add(c_[i], o.c_[i]);
  trim();
  return *this;
}

PolyA& PolyA::operator-=(const PolyA& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_->sub(c_[i], o.c_[i]);
  trim();
  return *this;
}

void PolyA::accumulate_product(std::vector<std::uint64_t>& acc, const PolyA& a, const PolyA& b) {
  if (a.c_.empty() || b.c_.empty()) return;
  const std::size_t need = a.c_.size() + b.c_.size() - 1;
  if (acc.size() < need) acc.resize(need, 0);
  const std::uint32_t* pb = b.c_.data();
  const std::size_t nb = b.c_.size();
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    const std::uint64_t ai = a.c_[i];
    if (ai == 0) continue;
    std::uint64_t* out = acc.data() + i;
    for (std::size_t j = 0; j < nb; ++j) out[j] += ai * pb[j];
  }
}

PolyA PolyA::from_accumulator(const FqField& field, const std::vector<std::uint64_t>& acc) {
  PolyA r(field);
  r.c_.resize(acc.size());
  const std::uint64_t p = field.p();
  for (std::size_t i = 0; i < acc.size(); ++i) r.c_[i] = static_cast<std::uint32_t>(acc[i] % p);
  r.trim();
  return r;
}

PolyA operator*(const PolyA& a, const PolyA& b) {
  if (a.c_.empty() || b.c_.empty()) return PolyA(*a.field_);
  const FqField& F = *a.field_;
  if (F.is_prime_field()) {
    std::vector<std::uint64_t> acc;
    PolyA::accumulate_product(acc, a, b);
    return PolyA::from_accumulator(F, acc);
  }
  PolyA r(F);
  r.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      r.c_[i + j] = F.add(r.c_[i + j], F.mul(a.c_[i], b.c_[j]));
    }
  }
  r.trim();
  return r;
}

PolyA PolyA::scaled(FqElem c) const {
  if (c.code == 0) return PolyA(*field_);
  PolyA r(*this);
  for (auto& x : r.c_) x = field_->mul(x, c.code);
  return r;
}

PolyA PolyA::shifted(int k) const {
  if (c_.empty() || k == 0) return *this;
  PolyA r(*field_);
  r.c_.assign(static_cast<std::size_t>(k), 0);
  r.c_.insert(r.c_.end(), c_.begin(), c_.end());
  return r;
}

std::pair<PolyA, PolyA> PolyA::divmod(const PolyA& a, const PolyA& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  const FqField& F = *a.field_;
  if (a.c_.size() < b.c_.size()) return {PolyA(F), a};
  PolyA rem(a);
  PolyA quo(F);
  const std::size_t db = b.c_.size() - 1;
  quo.c_.assign(a.c_.size() - db, 0);
  const std::uint32_t lead_inv = F.inv(b.c_.back());
  for (std::size_t i = rem.c_.size(); i-- > db;) {
    std::uint32_t c = rem.c_[i];
    if (c == 0) continue;
    c = F.mul(c, lead_inv);
    quo.c_[i - db] = c;
    const std::uint32_t nc = F.neg(c);
    for (std::size_t j = 0; j <= db; ++j) {
      rem.c_[i - db + j] = F.add(rem.c_[i - db + j], F.mul(nc, b.c_[j]));
    }
  }
  rem.trim();
  quo.trim();
  return {std::move(quo), std::move(rem)};
}

PolyA PolyA::exact_div(const PolyA& b) const {
  auto [q, r] = divmod(*this, b);
  if (!r.is_zero()) throw DomainError("polynomial division is not exact");
  return q;
}

PolyA PolyA::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  return scaled({field_->inv(c_.back())});
}

PolyA PolyA::pow(std::uint64_t n) const {
  PolyA result = PolyA::from_int(*field_, 1);
  PolyA base(*this);
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

PolyA PolyA::powmod(std::uint64_t n, const PolyA& m) const {
  PolyA result = PolyA::from_int(*field_, 1) % m;
  PolyA base = *this % m;
  while (n > 0) {
    if (n & 1) result = (result * base) % m;
    n >>= 1;
    if (n > 0) base = (base * base) % m;
  }
  return result;
}

PolyA PolyA::frobenius(int i) const {
  if (c_.size() <= 1 || i == 0) return *this;
  std::size_t step = 1;
  for (int k = 0; k < i; ++k) step *= field_->q();
  PolyA r(*field_);
  r.c_.assign((c_.size() - 1) * step + 1, 0);
  for (std::size_t j = 0; j < c_.size(); ++j) r.c_[j * step] = c_[j];
  return r;
}

FqElem PolyA::eval(FqElem x) const {
  std::uint32_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_->add(field_->mul(acc, x.code), *it);
  return {acc};
}

bool operator<(const PolyA& a, const PolyA& b) {
  if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

PolyA gcd(PolyA a, PolyA b) {
  while (!b.is_zero()) {
    PolyA r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

ExtendedGcd extended_gcd(const PolyA& a, const PolyA& b) {
  const FqField& F = a.field();
  PolyA r0 = a, r1 = b;
  PolyA s0 = PolyA::from_int(F, 1), s1(F);
  PolyA t0(F), t1 = PolyA::from_int(F, 1);
  while (!r1.is_zero()) {
    auto [qt, r2] = PolyA::divmod(r0, r1);
    PolyA s2 = s0 - qt * s1;
    PolyA t2 = t0 - qt * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const FqElem li = F.inv(r0.leading());
  return {r0.scaled(li), s0.scaled(li), t0.scaled(li)};
}

}  // namespace dmf
