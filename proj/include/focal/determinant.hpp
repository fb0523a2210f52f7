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
#ifndef FOCAL_DETERMINANT_HPP_
#define FOCAL_DETERMINANT_HPP_

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "focal/linalg.hpp"
#include "focal/poly.hpp"

namespace focal {

inline constexpr std::size_t kMaxSymbolicDimension = 9;

class UnsupportedError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Determinant of a square polynomial matrix by Laplace expansion, row by
// row, memoizing the minor of the first r rows on every column subset.
// Zero entries and vanishing minors are skipped, so block-sparse matrices
// only touch the subsets their zero pattern allows.
template <ExactField K>
Poly<K> det_symbolic(const Matrix<Poly<K>>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("det_symbolic: matrix not square");
  if (n == 0) throw std::invalid_argument("det_symbolic: empty matrix");
  if (n > kMaxSymbolicDimension) {
    throw UnsupportedError("det_symbolic: dimension " + std::to_string(n) + " exceeds " +
                           std::to_string(kMaxSymbolicDimension));
  }
  const std::size_t nvars = m(0, 0).nvars();

  // minors[S] = det of rows [0, r) restricted to the columns in S, |S| = r.
  std::unordered_map<std::uint32_t, Poly<K>> minors;
  for (std::size_t c = 0; c < n; ++c) {
    if (!m(0, c).is_zero()) minors.emplace(1u << c, m(0, c));
  }
  for (std::size_t r = 1; r < n; ++r) {
    std::unordered_map<std::uint32_t, Poly<K>> next;
    for (const auto& [cols, minor] : minors) {
      for (std::size_t c = 0; c < n; ++c) {
        const std::uint32_t bit = 1u << c;
        if ((cols & bit) != 0 || m(r, c).is_zero()) continue;
        // Expanding the new last row: sign is (-1)^(#chosen columns right of c).
        const std::uint32_t above = cols & ~((bit << 1) - 1);
        Poly<K> term = m(r, c) * minor;
        auto [it, inserted] = next.try_emplace(cols | bit, Poly<K>(nvars));
        if (std::popcount(above) % 2 == 0) {
          it->second += term;
        } else {
          it->second -= term;
        }
      }
    }
    std::erase_if(next, [](const auto& kv) { return kv.second.is_zero(); });
    minors = std::move(next);
  }
  const std::uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
  auto it = minors.find(full);
  return it == minors.end() ? Poly<K>(nvars) : it->second;
}

}  // namespace focal

#endif  // FOCAL_DETERMINANT_HPP_
