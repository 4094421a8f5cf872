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

#include "dmf/fq.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "dmf/error.hpp"

namespace dmf {

namespace {

using Digits = std::vector<std::uint32_t>;

Digits to_digits(std::uint32_t code, std::uint32_t p, std::uint32_t e) {
  Digits d(e, 0);
  for (std::uint32_t i = 0; i < e; ++i) {
    d[i] = code % p;
    code /= p;
  }
  return d;
}

std::uint32_t from_digits(const Digits& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (auto it = d.rbegin(); it != d.rend(); ++it) code = code * p + *it;
  return code;
}

// Remainder of a (low to high) modulo the monic m, over F_p.
Digits reduce_digits(Digits a, const Digits& m, std::uint32_t p) {
  const std::size_t dm = m.size() - 1;
  for (std::size_t i = a.size(); i-- > dm;) {
    std::uint32_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dm; ++j) {
      a[i - dm + j] = static_cast<std::uint32_t>((a[i - dm + j] + (p - c) * m[j]) % p);
    }
  }
  a.resize(dm);
  return a;
}

bool has_factor_of_degree(const Digits& m, std::uint32_t p, std::uint32_t deg) {
  // Trial division by every monic polynomial of the given degree.
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < deg; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Digits f = to_digits(static_cast<std::uint32_t>(c), p, deg);
    f.push_back(1);
    Digits r = reduce_digits(m, f, p);
    bool zero = true;
    for (auto x : r) zero = zero && (x == 0);
    if (zero) return true;
  }
  return false;
}

Digits least_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Digits m = to_digits(static_cast<std::uint32_t>(c), p, e);
    m.push_back(1);
    bool irreducible = true;
    for (std::uint32_t deg = 1; deg <= e / 2 && irreducible; ++deg) {
      irreducible = !has_factor_of_degree(m, p, deg);
    }
    if (irreducible) return m;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable
}

}  // namespace

bool is_prime_number(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FqField::FqField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
  if (e == 1) {
    inv_table_.assign(p, 0);
    for (std::uint32_t a = 1; a < p; ++a) {
      if (inv_table_[a] != 0) continue;
      std::uint32_t b = pow(a, p - 2);
      inv_table_[a] = b;
      inv_table_[b] = a;
    }
    return;
  }
  modulus_ = least_irreducible(p, e);
  const std::size_t n = std::size_t{q_} * q_;
  add_table_.resize(n);
  mul_table_.resize(n);
  neg_table_.resize(q_);
  inv_table_.assign(q_, 0);
  std::vector<Digits> digits(q_);
  for (std::uint32_t a = 0; a < q_; ++a) digits[a] = to_digits(a, p, e);
  for (std::uint32_t a = 0; a < q_; ++a) {
    Digits ng(e);
    for (std::uint32_t i = 0; i < e; ++i) ng[i] = (p - digits[a][i]) % p;
    neg_table_[a] = from_digits(ng, p);
    for (std::uint32_t b = 0; b < q_; ++b) {
      Digits s(e);
      for (std::uint32_t i = 0; i < e; ++i) s[i] = (digits[a][i] + digits[b][i]) % p;
      add_table_[a * q_ + b] = from_digits(s, p);
      Digits prod(2 * e - 1, 0);
      for (std::uint32_t i = 0; i < e; ++i) {
        for (std::uint32_t j = 0; j < e; ++j) {
          prod[i + j] = (prod[i + j] + digits[a][i] * digits[b][j]) % p;
        }
      }
      mul_table_[a * q_ + b] = from_digits(reduce_digits(prod, modulus_, p), p);
    }
  }
  for (std::uint32_t a = 1; a < q_; ++a) {
    for (std::uint32_t b = 1; b < q_; ++b) {
      if (mul_table_[a * q_ + b] == 1) {
        inv_table_[a] = b;
        break;
      }
    }
  }
}

const FqField& FqField::get(std::uint32_t p, std::uint32_t e) {
  if (!is_prime_number(p) || p >= (1u << 16)) {
    throw DomainError("characteristic must be a prime below 65536, got " + std::to_string(p));
  }
  if (e == 0) throw DomainError("extension degree must be positive");
  if (e > 1) {
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < e; ++i) q *= p;
    if (q > 1024) throw DomainError("non-prime fields are limited to q <= 1024");
  }
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<FqField>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = registry[{p, e}];
  if (!slot) slot.reset(new FqField(p, e));
  return *slot;
}

const FqField& FqField::of_order(std::uint64_t q) {
  if (q < 2) throw DomainError("field order must be at least 2");
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t e = 0;
  std::uint64_t r = q;
  while (r % p == 0) {
    r /= p;
    ++e;
  }
  if (r != 1) throw DomainError("field order " + std::to_string(q) + " is not a prime power");
  return get(static_cast<std::uint32_t>(p), e);
}

FqElem FqField::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return {static_cast<std::uint32_t>(r)};
}

FqElem FqField::from_code(std::uint64_t code) const {
  if (code >= q_) {
    throw DomainError("element code " + std::to_string(code) + " out of range for F_" +
                      std::to_string(q_));
  }
  return {static_cast<std::uint32_t>(code)};
}

std::uint32_t FqField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero in F_q");
  return inv_table_[a];
}

std::uint32_t FqField::pow(std::uint32_t a, std::uint64_t n) const {
  std::uint32_t result = 1;
  std::uint32_t base = a;
  while (n > 0) {
    if (n & 1) result = mul(result, base);
    base = mul(base, base);
    n >>= 1;
  }
  return result;
}

std::vector<FqElem> FqField::elements() const {
  std::vector<FqElem> out(q_);
  for (std::uint32_t i = 0; i < q_; ++i) out[i] = {i};
  return out;
}

}  // namespace dmf
