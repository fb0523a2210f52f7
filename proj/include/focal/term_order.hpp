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
#ifndef FOCAL_TERM_ORDER_HPP_
#define FOCAL_TERM_ORDER_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "focal/monomial.hpp"
#include "focal/random.hpp"

namespace focal {

// Weight order refined by a lexicographic tie-break. Monomials are compared
// by primary weight, then (product extensions only) by secondary weight,
// then by the exponent of tiebreak[0], tiebreak[1], ... (larger wins).
//
// A product extension lives on a doubled ring of 2N variables: the primary
// weights are positive on the N affine variables and zero on partners, the
// secondary weights are positive on partners and zero on affine variables.
// Every partner is therefore smaller than every affine variable.
class TermOrder {
 public:
  TermOrder(std::vector<std::int64_t> weights, std::vector<std::size_t> tiebreak);

  // Weights uniform in [1, 10^6], fresh uniformly random tie-break permutation.
  static TermOrder sample(std::size_t nvars, Rng& rng);

  // Weights (D^{n-1}, ..., D, 1) with D = max_exponent + 1 and tie-break
  // x0 > x1 > ...; agrees with lex x0 > x1 > ... on monomials whose
  // exponents are all <= max_exponent.
  static TermOrder lex_like(std::size_t nvars, unsigned max_exponent);

  // Extends an affine order on N variables to the doubled ring.
  static TermOrder product_extension(const TermOrder& affine, Rng& rng);

  std::size_t nvars() const { return primary_.size(); }
  bool is_product_extension() const { return !secondary_.empty(); }
  const std::vector<std::int64_t>& weights() const { return primary_; }
  const std::vector<std::int64_t>& secondary_weights() const { return secondary_; }
  const std::vector<std::size_t>& tiebreak() const { return tiebreak_; }

  std::int64_t primary_weight(const Monomial& m) const { return dot(primary_, m); }
  std::int64_t secondary_weight(const Monomial& m) const {
    return secondary_.empty() ? 0 : dot(secondary_, m);
  }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  // Tie-break only; used once weights are known to agree.
  std::strong_ordering compare_tiebreak(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  // Same order with every weight multiplied by factor > 0.
  TermOrder rescaled(std::int64_t factor) const;

 private:
  TermOrder() = default;
  static std::int64_t dot(const std::vector<std::int64_t>& w, const Monomial& m);
  void validate() const;

  std::vector<std::int64_t> primary_;
  std::vector<std::int64_t> secondary_;
  std::vector<std::size_t> tiebreak_;
};

}  // namespace focal

#endif  // FOCAL_TERM_ORDER_HPP_
