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

#ifndef DMF_ADDITIVE_HPP
#define DMF_ADDITIVE_HPP

#include <cstddef>
#include <vector>

#include "dmf/poly.hpp"

namespace dmf {

// An F_q-linear polynomial sum l_i tau^i with tau(X) = X^q. Frob must map
// (x, i) to x^(q^i).
template <class C>
struct Additive {
  std::vector<C> c;

  int degree() const { return static_cast<int>(c.size()) - 1; }

  /// (phi o psi)_k = sum_i phi_i (psi_{k-i})^(q^i).
  template <class Frob>
  static Additive compose(const Additive& phi, const Additive& psi, const C& zero, Frob frob) {
    Additive r;
    if (phi.c.empty() || psi.c.empty()) return r;
    r.c.assign(phi.c.size() + psi.c.size() - 1, zero);
    for (std::size_t i = 0; i < phi.c.size(); ++i) {
      if (phi.c[i].is_zero()) continue;
      for (std::size_t j = 0; j < psi.c.size(); ++j) {
        if (psi.c[j].is_zero()) continue;
        r.c[i + j] += phi.c[i] * frob(psi.c[j], static_cast<int>(i));
      }
    }
    return r;
  }

  Additive scaled(const C& s) const {
    Additive r{c};
    for (auto& x : r.c) x = x * s;
    return r;
  }

  Additive& operator+=(const Additive& o) {
    if (o.c.size() > c.size()) c.resize(o.c.size(), o.c[0] - o.c[0]);
    for (std::size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
};

using AdditivePoly = Additive<PolyA>;

}  // namespace dmf

#endif  // DMF_ADDITIVE_HPP
