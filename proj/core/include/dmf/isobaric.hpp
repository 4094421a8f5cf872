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

#ifndef DMF_ISOBARIC_HPP
#define DMF_ISOBARIC_HPP

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "dmf/arith.hpp"
#include "dmf/det.hpp"
#include "dmf/error.hpp"
#include "dmf/ratfunc.hpp"
#include "dmf/upoly.hpp"

namespace dmf {

/// Type class l reduced into [0, q-2].
inline int normalize_type(std::int64_t l, int q) {
  const std::int64_t m = q - 1;
  return static_cast<int>(((l % m) + m) % m);
}

struct MuGamma {
  std::int64_t mu;
  int gamma;
};

/// The unique (mu, gamma) with mu = l (mod q-1), 0 <= gamma <= q and
/// k = mu (q+1) + gamma (q-1). Throws DomainError when none exists.
MuGamma mu_gamma(int q, std::int64_t k, std::int64_t l);

// A level-one form as an isobaric polynomial sum c_b g^a h^b of weight k and
// type l, with a(q-1) + b(q+1) = k and b = l (mod q-1). Terms are keyed by b,
// which determines a. The zero form keeps its weight and type, but adding a
// zero form of another weight is allowed and acts as the identity.
template <class C>
class Isobaric {
 public:
  Isobaric(C zero, int q, std::int64_t k, std::int64_t l)
      : zero_(std::move(zero)), q_(q), k_(k), l_(normalize_type(l, q)) {
    if (q < 3) throw DomainError("q must be at least 3");
  }

  static Isobaric monomial(const C& c, int q, std::int64_t a, std::int64_t b) {
    if (a < 0 || b < 0) throw DomainError("negative exponent in a monomial");
    Isobaric f(c.zero_like(), q, a * (q - 1) + b * (q + 1), b);
    if (!c.is_zero()) f.terms_.emplace(b, c);
    return f;
  }
  static Isobaric one(const C& proto, int q) { return monomial(proto.one_like(), q, 0, 0); }

  const C& zero() const { return zero_; }
  int q() const { return q_; }
  std::int64_t weight() const { return k_; }
  int type() const { return l_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<std::int64_t, C>& terms() const { return terms_; }

  std::int64_t a_of(std::int64_t b) const { return (k_ - b * (q_ + 1)) / (q_ - 1); }
  /// Largest h-exponent present; -1 for the zero form.
  std::int64_t max_b() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }
  std::int64_t max_a() const { return terms_.empty() ? -1 : a_of(terms_.begin()->first); }

  C coeff(std::int64_t a, std::int64_t b) const {
    if (a * (q_ - 1) + b * (q_ + 1) != k_) return zero_;
    auto it = terms_.find(b);
    return it == terms_.end() ? zero_ : it->second;
  }

  /// Adds c g^a h^b; the monomial must have this form's weight and type.
  void add_term(std::int64_t a, std::int64_t b, const C& c) {
    if (a < 0 || b < 0) throw DomainError("negative exponent in a form");
    if (a * (q_ - 1) + b * (q_ + 1) != k_ || normalize_type(b, q_) != l_) {
      throw DomainError("monomial does not match the form's weight and type");
    }
    if (c.is_zero()) return;
    auto it = terms_.find(b);
    if (it == terms_.end()) {
      terms_.emplace(b, c);
      return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  Isobaric operator-() const {
    Isobaric r(*this);
    for (auto& [b, c] : r.terms_) c = -c;
    return r;
  }
  Isobaric& operator+=(const Isobaric& o) {
    if (o.is_zero()) return *this;
    if (is_zero() && (k_ != o.k_ || l_ != o.l_)) return *this = o;
    require_same_space(o);
    for (const auto& [b, c] : o.terms_) add_term(a_of(b), b, c);
    return *this;
  }
  Isobaric& operator-=(const Isobaric& o) { return *this += -o; }
  friend Isobaric operator+(Isobaric a, const Isobaric& b) { return a += b; }
  friend Isobaric operator-(Isobaric a, const Isobaric& b) { return a -= b; }
  friend Isobaric operator*(const Isobaric& f, const Isobaric& g) {
    if (f.q_ != g.q_) throw DomainError("forms over different fields");
    Isobaric r(f.zero_, f.q_, f.k_ + g.k_, f.l_ + g.l_);
    for (const auto& [b1, c1] : f.terms_) {
      for (const auto& [b2, c2] : g.terms_) r.add_term(f.a_of(b1) + g.a_of(b2), b1 + b2, c1 * c2);
    }
    return r;
  }
  Isobaric& operator*=(const Isobaric& o) { return *this = *this * o; }

  Isobaric scaled(const C& s) const {
    Isobaric r(zero_, q_, k_, l_);
    if (s.is_zero()) return r;
    for (const auto& [b, c] : terms_) r.terms_.emplace(b, c * s);
    return r;
  }
  Isobaric pow(std::uint64_t n) const {
    Isobaric result = one(zero_, q_);
    Isobaric base = *this;
    while (n > 0) {
      if (n & 1) result *= base;
      n >>= 1;
      if (n > 0) base *= base;
    }
    return result;
  }

  /// Maps every coefficient through fn, keeping exponents.
  template <class D, class Fn>
  Isobaric<D> map(const D& zero, Fn fn) const {
    Isobaric<D> r(zero, q_, k_, l_);
    for (const auto& [b, c] : terms_) r.add_term(a_of(b), b, fn(c));
    return r;
  }

  friend bool operator==(const Isobaric& f, const Isobaric& g) {
    return f.q_ == g.q_ && f.k_ == g.k_ && f.l_ == g.l_ && f.terms_ == g.terms_;
  }

 private:
  void require_same_space(const Isobaric& o) const {
    if (q_ != o.q_ || k_ != o.k_ || l_ != o.l_) throw DomainError("weight/type mismatch in form addition");
  }

  C zero_;
  int q_;
  std::int64_t k_;
  int l_;
  std::map<std::int64_t, C> terms_;
};

using IsobaricForm = Isobaric<RatFuncK>;

/// g, h over K.
IsobaricForm form_g(const FqField& field);
IsobaricForm form_h(const FqField& field);
/// Delta = -h^(q-1).
IsobaricForm form_delta(const FqField& field);

/// The Serre derivation with d(g) = -h, d(h) = 0.
template <class C>
Isobaric<C> serre_del(const Isobaric<C>& f) {
  Isobaric<C> r(f.zero(), f.q(), f.weight() + 2, f.type() + 1);
  for (const auto& [b, c] : f.terms()) {
    const std::int64_t a = f.a_of(b);
    if (a == 0) continue;
    r.add_term(a - 1, b + 1, -(c * c.from_int_like(a)));
  }
  return r;
}

/// d^n / n! for 0 <= n < q: g^a h^b -> (-1)^n C(a, n) g^(a-n) h^(b+n).
template <class C>
Isobaric<C> serre_del_n(const Isobaric<C>& f, int n, std::uint32_t p) {
  if (n < 0 || n >= f.q()) throw DomainError("serre_del_n requires 0 <= n < q");
  if (n == 0) return f;
  Isobaric<C> r(f.zero(), f.q(), f.weight() + 2 * n, f.type() + n);
  for (const auto& [b, c] : f.terms()) {
    const std::int64_t a = f.a_of(b);
    if (a < n) continue;
    std::uint32_t bin = binom_char_p(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(n), p);
    if (bin == 0) continue;
    C t = c * c.from_int_like(bin);
    if (n % 2 == 1) t = -t;
    r.add_term(a - n, b + n, t);
  }
  return r;
}

// P(f, x) with f = g^gamma h^mu P(f, j), j = g^(q+1) / (-h^(q-1)).
template <class C>
struct CompanionPoly {
  UPoly<C> poly;
  std::int64_t mu;
  int gamma;
  std::int64_t k;
  int l;
};

template <class C>
CompanionPoly<C> companion(const Isobaric<C>& f) {
  const int q = f.q();
  const MuGamma mg = mu_gamma(q, f.weight(), f.type());
  std::vector<C> coeffs;
  for (const auto& [b, c] : f.terms()) {
    const std::int64_t a = f.a_of(b);
    const std::int64_t shift = a - mg.gamma;
    if (shift < 0 || shift % (q + 1) != 0) throw DomainError("malformed form: monomial outside the companion progression");
    const std::int64_t m = shift / (q + 1);
    if (b != mg.mu - (q - 1) * m) throw DomainError("malformed form: monomial outside the companion progression");
    if (static_cast<std::int64_t>(coeffs.size()) <= m) coeffs.resize(static_cast<std::size_t>(m) + 1, f.zero());
    coeffs[m] = m % 2 == 0 ? c : -c;
  }
  return {UPoly<C>(f.zero(), std::move(coeffs)), mg.mu, mg.gamma, f.weight(), f.type()};
}

/// Inverse of companion: the form of weight k and type l with P(f, x) = poly.
template <class C>
Isobaric<C> from_companion(const UPoly<C>& poly, int q, std::int64_t k, std::int64_t l) {
  const MuGamma mg = mu_gamma(q, k, l);
  Isobaric<C> f(poly.zero(), q, k, l);
  const auto& c = poly.coeffs();
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (c[m].is_zero()) continue;
    const std::int64_t mm = static_cast<std::int64_t>(m);
    const std::int64_t a = mg.gamma + (q + 1) * mm;
    const std::int64_t b = mg.mu - (q - 1) * mm;
    if (b < 0) throw DomainError("companion polynomial degree too large for this weight");
    f.add_term(a, b, m % 2 == 0 ? c[m] : -c[m]);
  }
  return f;
}

/// Exponent pairs (a, b) of weight k and type l, by increasing b.
std::vector<std::pair<std::int64_t, std::int64_t>> monomial_exponents(int q, std::int64_t k, std::int64_t l);

template <class C>
std::vector<Isobaric<C>> monomial_basis(const C& proto, int q, std::int64_t k, std::int64_t l) {
  std::vector<Isobaric<C>> out;
  for (const auto& [a, b] : monomial_exponents(q, k, l)) {
    out.push_back(Isobaric<C>::monomial(proto.one_like(), q, a, b));
  }
  return out;
}

/// The sublist of monomial_basis with b >= 2.
template <class C>
std::vector<Isobaric<C>> double_cusp_basis(const C& proto, int q, std::int64_t k, std::int64_t l) {
  std::vector<Isobaric<C>> out;
  for (auto& f : monomial_basis(proto, q, k, l)) {
    if (f.terms().begin()->first >= 2) out.push_back(std::move(f));
  }
  return out;
}

/// Exact quotient f / g of isobaric polynomials; throws DomainError when g
/// does not divide f.
template <class C>
Isobaric<C> exact_div(const Isobaric<C>& f, const Isobaric<C>& g) {
  if (g.is_zero()) throw DomainError("division by the zero form");
  const int q = f.q();
  Isobaric<C> quo(f.zero(), q, f.weight() - g.weight(), f.type() - g.type());
  Isobaric<C> rem = f;
  const std::int64_t bg = g.max_b();
  const std::int64_t ag = g.a_of(bg);
  const C lead_inv = g.terms().rbegin()->second.inverse();
  while (!rem.is_zero()) {
    const std::int64_t br = rem.max_b();
    const std::int64_t ar = rem.a_of(br);
    if (br < bg || ar < ag) throw DomainError("inexact division of forms");
    Isobaric<C> t = Isobaric<C>::monomial(rem.terms().rbegin()->second * lead_inv, q, ar - ag, br - bg);
    quo += t;
    rem -= t * g;
  }
  return quo;
}

/// Determinant of a square array of forms. Entry weights must satisfy
/// w[i][j] - w[i][0] - w[0][j] + w[0][0] = 0 (likewise for types), so that
/// every term of the expansion has the same weight.
template <class C>
Isobaric<C> det_isobaric(const Matrix<Isobaric<C>>& m) {
  detail::require_square(m);
  const std::size_t n = m.size();
  if (n == 0) throw DomainError("determinant of an empty array of forms");
  const int q = m[0][0].q();
  std::int64_t k = 0, l = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::int64_t dw = m[i][j].weight() - m[i][0].weight() - m[0][j].weight() + m[0][0].weight();
      const int dl = normalize_type(m[i][j].type() - m[i][0].type() - m[0][j].type() + m[0][0].type(), q);
      if (dw != 0 || dl != 0) throw DomainError("inhomogeneous determinant");
    }
    k += m[i][i].weight();
    l += m[i][i].type();
  }
  const C& z = m[0][0].zero();
  const Isobaric<C> zero(z, q, k, l);
  const Isobaric<C> one = Isobaric<C>::one(z, q);
  Isobaric<C> d = n <= 6 ? det_minor_dp(m, zero, one)
                         : det_bareiss(m, zero, one, [](const Isobaric<C>& a, const Isobaric<C>& b) {
                             return exact_div(a, b);
                           });
  if (d.is_zero()) return zero;
  return d;
}

}  // namespace dmf

#endif  // DMF_ISOBARIC_HPP
