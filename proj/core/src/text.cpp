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

#include "dmf/text.hpp"

#include <cctype>
#include <map>

#include "dmf/error.hpp"

namespace dmf {

namespace {

std::string power_of(std::string_view var, long long e) {
  std::string s(var);
  if (e != 1) s += "^" + std::to_string(e);
  return s;
}

bool single_term(const RatFuncK& x) { return x.is_integral() && x.num().term_count() == 1; }
bool single_term(const Residue& x) { return x.value().term_count() == 1; }
bool is_one(const RatFuncK& x) { return x.is_one(); }
bool is_one(const Residue& x) { return x.is_one(); }
std::string text_of(const RatFuncK& x) { return format_ratfunc(x); }
std::string text_of(const Residue& x) { return format_residue(x); }

// Coefficient c in front of a monomial `mono`; an empty mono means a
// constant term.
template <class C>
std::string term_text(const C& c, const std::string& mono) {
  const std::string s = text_of(c);
  const bool single = single_term(c);
  if (mono.empty()) return single ? s : "(" + s + ")";
  if (is_one(c)) return mono;
  return (single ? s : "(" + s + ")") + "*" + mono;
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += " + ";
    out += parts[i];
  }
  return out;
}

template <class C>
std::string series_text(const Series<C>& s, std::string_view var) {
  std::vector<std::string> parts;
  for (int i = 0; i < s.prec(); ++i) {
    if (s[i].is_zero()) continue;
    parts.push_back(term_text(s[i], i == 0 ? std::string() : power_of(var, i)));
  }
  parts.push_back("O(" + power_of(var, s.prec()) + ")");
  return join(parts);
}

template <class C>
std::string form_text(const Isobaric<C>& f) {
  if (f.is_zero()) return "0";
  std::vector<std::string> parts;
  for (const auto& [b, c] : f.terms()) {
    const std::int64_t a = f.a_of(b);
    std::string mono;
    if (a > 0) mono = power_of("g", a);
    if (b > 0) mono += (mono.empty() ? "" : "*") + power_of("h", b);
    parts.push_back(term_text(c, mono));
  }
  return join(parts);
}

template <class C>
std::string upoly_text(const UPoly<C>& p, std::string_view var) {
  if (p.is_zero()) return "0";
  std::vector<std::string> parts;
  for (int i = p.degree(); i >= 0; --i) {
    const C& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    parts.push_back(term_text(c, i == 0 ? std::string() : power_of(var, i)));
  }
  return join(parts);
}

// Sparse polynomial in the outer variables with coefficients in K, plus an
// optional O(v^N) bound on the first outer variable.
struct MPoly {
  std::map<std::vector<int>, RatFuncK> terms;
  int bound = kInfinity;
};

class Parser {
 public:
  Parser(const FqField& field, std::string_view text, std::vector<char> vars)
      : field_(field), text_(text), vars_(std::move(vars)) {}

  MPoly parse() {
    MPoly r = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  long long integer() {
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected an integer");
    long long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > (1LL << 40)) fail("integer too large");
      ++pos_;
    }
    return v;
  }
  int var_index(char c) const {
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (vars_[i] == c) return static_cast<int>(i);
    }
    return -1;
  }
  bool starts_primary() {
    const char c = peek();
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || c == 'T' || var_index(c) >= 0;
  }

  MPoly scalar(const RatFuncK& c) const {
    MPoly r;
    if (!c.is_zero()) r.terms.emplace(std::vector<int>(vars_.size(), 0), c);
    return r;
  }
  static bool is_scalar(const MPoly& m) {
    if (m.bound != kInfinity) return false;
    for (const auto& [e, c] : m.terms) {
      for (int x : e) {
        if (x != 0) return false;
      }
    }
    return true;
  }
  RatFuncK scalar_value(const MPoly& m) const {
    return m.terms.empty() ? RatFuncK(field_) : m.terms.begin()->second;
  }

  static void add_into(MPoly& a, const MPoly& b, bool negate) {
    for (const auto& [e, c] : b.terms) {
      auto it = a.terms.find(e);
      const RatFuncK v = negate ? -c : c;
      if (it == a.terms.end()) {
        a.terms.emplace(e, v);
      } else {
        it->second += v;
        if (it->second.is_zero()) a.terms.erase(it);
      }
    }
    a.bound = std::min(a.bound, b.bound);
  }
  MPoly mul(const MPoly& a, const MPoly& b) {
    if (a.bound != kInfinity || b.bound != kInfinity) fail("O-term inside a product");
    MPoly r;
    for (const auto& [ea, ca] : a.terms) {
      for (const auto& [eb, cb] : b.terms) {
        std::vector<int> e(ea);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        MPoly t;
        t.terms.emplace(std::move(e), ca * cb);
        add_into(r, t, false);
      }
    }
    return r;
  }

  MPoly expr() {
    MPoly r;
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    add_into(r, term(), negate);
    while (true) {
      if (accept('+')) {
        add_into(r, term(), false);
      } else if (accept('-')) {
        add_into(r, term(), true);
      } else {
        break;
      }
    }
    return r;
  }

  MPoly term() {
    MPoly r = factor();
    while (true) {
      if (accept('*')) {
        r = mul(r, factor());
      } else if (accept('/')) {
        const MPoly d = factor();
        if (!is_scalar(d)) fail("division by a non-constant");
        const RatFuncK dv = scalar_value(d);
        if (dv.is_zero()) fail("division by zero");
        r = mul(r, scalar(dv.inverse()));
      } else if (starts_primary()) {
        r = mul(r, factor());
      } else {
        break;
      }
    }
    return r;
  }

  MPoly factor() {
    MPoly base = primary();
    if (!accept('^')) return base;
    const long long e = integer();
    MPoly r = scalar(RatFuncK::from_int(field_, 1));
    for (long long i = 0; i < e; ++i) r = mul(r, base);
    return r;
  }

  MPoly primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      MPoly r = expr();
      expect(')');
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long long n = integer();
      if (!field_.is_prime_field() && n >= static_cast<long long>(field_.q())) fail("element code out of range");
      const FqElem v = field_.is_prime_field() ? field_.from_int(n) : field_.from_code(static_cast<std::uint64_t>(n));
      return scalar(RatFuncK(PolyA::constant(field_, v)));
    }
    if (c == 'T') {
      ++pos_;
      return scalar(RatFuncK(PolyA::T(field_)));
    }
    if (c == 'O' && !vars_.empty()) {
      ++pos_;
      expect('(');
      if (peek() != vars_[0]) fail("O-term must be in the series variable");
      ++pos_;
      long long e = 1;
      if (accept('^')) e = integer();
      expect(')');
      MPoly r;
      r.bound = static_cast<int>(e);
      return r;
    }
    const int vi = var_index(c);
    if (vi >= 0) {
      ++pos_;
      std::vector<int> e(vars_.size(), 0);
      e[vi] = 1;
      MPoly r;
      r.terms.emplace(std::move(e), RatFuncK::from_int(field_, 1));
      return r;
    }
    if (c == '\0') fail("unexpected end of input");
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const FqField& field_;
  std::string_view text_;
  std::vector<char> vars_;
  std::size_t pos_ = 0;
};

RatFuncK parse_scalar(const FqField& field, std::string_view text) {
  const MPoly m = Parser(field, text, {}).parse();
  return m.terms.empty() ? RatFuncK(field) : m.terms.begin()->second;
}

}  // namespace

std::string format_poly(const PolyA& a, std::string_view var) {
  if (a.is_zero()) return "0";
  std::vector<std::string> parts;
  const auto codes = a.codes();
  for (int i = a.degree(); i >= 0; --i) {
    const std::uint32_t c = codes[i];
    if (c == 0) continue;
    if (i == 0) {
      parts.push_back(std::to_string(c));
    } else if (c == 1) {
      parts.push_back(power_of(var, i));
    } else {
      parts.push_back(std::to_string(c) + "*" + power_of(var, i));
    }
  }
  return join(parts);
}

std::string format_ratfunc(const RatFuncK& x) {
  if (x.is_integral()) return format_poly(x.num());
  std::string num = format_poly(x.num());
  std::string den = format_poly(x.den());
  if (x.num().term_count() > 1) num = "(" + num + ")";
  if (x.den().term_count() > 1) den = "(" + den + ")";
  return num + "/" + den;
}

std::string format_residue(const Residue& x) { return format_poly(x.value()); }

std::string format_quad(const QuadElem& x) {
  if (x.is_base()) return format_residue(x.a());
  std::string b = x.b().is_one() ? "s" : term_text(x.b(), "s");
  if (x.a().is_zero()) return b;
  return term_text(x.a(), std::string()) + " + " + b;
}

std::string format_series(const USeries& s, std::string_view var) { return series_text(s, var); }
std::string format_series(const ResidueSeries& s, std::string_view var) { return series_text(s, var); }
std::string format_form(const IsobaricForm& f) { return form_text(f); }
std::string format_form(const Isobaric<Residue>& f) { return form_text(f); }
std::string format_upoly(const UPoly<RatFuncK>& p, std::string_view var) { return upoly_text(p, var); }
std::string format_upoly(const UPoly<Residue>& p, std::string_view var) { return upoly_text(p, var); }

PolyA parse_poly(const FqField& field, std::string_view text) {
  const RatFuncK v = parse_scalar(field, text);
  if (!v.is_integral()) throw ParseError("expected a polynomial in T: \"" + std::string(text) + "\"");
  return v.num();
}

RatFuncK parse_ratfunc(const FqField& field, std::string_view text) { return parse_scalar(field, text); }

USeries parse_series(const FqField& field, std::string_view text) {
  const MPoly m = Parser(field, text, {'u'}).parse();
  if (m.bound == kInfinity) throw ParseError("series needs an O(u^N) term: \"" + std::string(text) + "\"");
  USeries s(RatFuncK(field), m.bound);
  for (const auto& [e, c] : m.terms) {
    if (e[0] < m.bound) s.set(e[0], c);
  }
  return s;
}

IsobaricForm parse_form(const FqField& field, std::string_view text) {
  const MPoly m = Parser(field, text, {'g', 'h'}).parse();
  if (m.bound != kInfinity) throw ParseError("O-term in a form");
  const int q = static_cast<int>(field.q());
  if (m.terms.empty()) return IsobaricForm(RatFuncK(field), q, 0, 0);
  const auto& e0 = m.terms.begin()->first;
  IsobaricForm f(RatFuncK(field), q, static_cast<std::int64_t>(e0[0]) * (q - 1) + static_cast<std::int64_t>(e0[1]) * (q + 1),
                 e0[1]);
  for (const auto& [e, c] : m.terms) {
    try {
      f.add_term(e[0], e[1], c);
    } catch (const DomainError&) {
      throw ParseError("form is not homogeneous: \"" + std::string(text) + "\"");
    }
  }
  return f;
}

UPoly<RatFuncK> parse_upoly(const FqField& field, std::string_view text) {
  const MPoly m = Parser(field, text, {'x'}).parse();
  if (m.bound != kInfinity) throw ParseError("O-term in a polynomial");
  UPoly<RatFuncK> p{RatFuncK(field)};
  for (const auto& [e, c] : m.terms) p += UPoly<RatFuncK>::monomial(c, e[0]);
  return p;
}

}  // namespace dmf
