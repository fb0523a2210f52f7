// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef FOCAL_HOMOGENIZE_HPP_
#define FOCAL_HOMOGENIZE_HPP_

#include <stdexcept>
#include <vector>

#include "focal/poly.hpp"

namespace focal {

// Per-variable homogenization into the doubled ring: variable i is paired
// with partner N + i, and every term is completed so that its exponents of
// x_i and x_{N+i} sum to deg_{x_i}(f). Input lives on N variables, output on
// 2N. The zero polynomial maps to zero.
template <ExactField K>
Poly<K> multihomogenize(const Poly<K>& f) {
  const std::size_t n = f.nvars();
  std::vector<unsigned> deg(n, 0);
  for (std::size_t v = 0; v < n; ++v) deg[v] = f.degree_in(v);
  std::vector<typename Poly<K>::Term> terms;
  terms.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    Monomial h(2 * n);
    for (std::size_t v = 0; v < n; ++v) {
      h.set(v, m[v]);
      h.set(n + v, deg[v] - m[v]);
    }
    terms.emplace_back(std::move(h), c);
  }
  return Poly<K>::from_terms(2 * n, std::move(terms));
}

// Sets every partner variable to 1.
template <ExactField K>
Poly<K> dehomogenize(const Poly<K>& fh) {
  if (fh.nvars() % 2 != 0) throw std::invalid_argument("dehomogenize: odd variable count");
  const std::size_t n = fh.nvars() / 2;
  std::vector<typename Poly<K>::Term> terms;
  for (const auto& [m, c] : fh.terms()) {
    Monomial a(n);
    for (std::size_t v = 0; v < n; ++v) a.set(v, m[v]);
    terms.emplace_back(std::move(a), c);
  }
  return Poly<K>::from_terms(n, std::move(terms));
}

}  // namespace focal

#endif  // FOCAL_HOMOGENIZE_HPP_
