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
#include "focal/term_order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace focal {

TermOrder::TermOrder(std::vector<std::int64_t> weights, std::vector<std::size_t> tiebreak)
    : primary_(std::move(weights)), tiebreak_(std::move(tiebreak)) {
  validate();
}

TermOrder TermOrder::sample(std::size_t nvars, Rng& rng) {
  std::vector<std::int64_t> w(nvars);
  for (auto& x : w) x = rng.uniform(1, 1000000);
  std::vector<std::size_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), 0);
  rng.shuffle(perm);
  return TermOrder(std::move(w), std::move(perm));
}

TermOrder TermOrder::lex_like(std::size_t nvars, unsigned max_exponent) {
  const std::int64_t base = static_cast<std::int64_t>(max_exponent) + 1;
  std::vector<std::int64_t> w(nvars);
  // Keep every reachable weighted degree inside int64.
  const __int128 limit = static_cast<__int128>(INT64_MAX) / (static_cast<__int128>(max_exponent) * nvars + 1);
  __int128 cur = 1;
  for (std::size_t i = nvars; i-- > 0;) {
    if (cur > limit) throw std::overflow_error("TermOrder::lex_like: too many variables");
    w[i] = static_cast<std::int64_t>(cur);
    cur *= base;
  }
  std::vector<std::size_t> perm(nvars);
  std::iota(perm.begin(), perm.end(), 0);
  return TermOrder(std::move(w), std::move(perm));
}

TermOrder TermOrder::product_extension(const TermOrder& affine, Rng& rng) {
  if (affine.is_product_extension()) throw std::invalid_argument("product_extension: already extended");
  const std::size_t n = affine.nvars();
  TermOrder out;
  out.primary_.assign(2 * n, 0);
  out.secondary_.assign(2 * n, 0);
  std::copy(affine.primary_.begin(), affine.primary_.end(), out.primary_.begin());
  for (std::size_t i = 0; i < n; ++i) out.secondary_[n + i] = rng.uniform(1, 1000000);
  std::vector<std::size_t> partner_perm(n);
  std::iota(partner_perm.begin(), partner_perm.end(), n);
  rng.shuffle(partner_perm);
  out.tiebreak_ = affine.tiebreak_;
  out.tiebreak_.insert(out.tiebreak_.end(), partner_perm.begin(), partner_perm.end());
  out.validate();
  return out;
}

std::int64_t TermOrder::dot(const std::vector<std::int64_t>& w, const Monomial& m) {
  if (m.nvars() != w.size()) throw std::invalid_argument("TermOrder: monomial has wrong variable count");
  std::int64_t s = 0;
  const auto e = m.exponents();
  for (std::size_t i = 0; i < w.size(); ++i) s += w[i] * e[i];
  return s;
}

std::strong_ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
  if (auto c = dot(primary_, a) <=> dot(primary_, b); c != 0) return c;
  if (!secondary_.empty()) {
    if (auto c = dot(secondary_, a) <=> dot(secondary_, b); c != 0) return c;
  }
  return compare_tiebreak(a, b);
}

std::strong_ordering TermOrder::compare_tiebreak(const Monomial& a, const Monomial& b) const {
  for (std::size_t v : tiebreak_) {
    if (auto c = a[v] <=> b[v]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

TermOrder TermOrder::rescaled(std::int64_t factor) const {
  if (factor <= 0) throw std::invalid_argument("TermOrder::rescaled: factor must be positive");
  TermOrder out = *this;
  for (auto& w : out.primary_) w *= factor;
  for (auto& w : out.secondary_) w *= factor;
  return out;
}

void TermOrder::validate() const {
  const std::size_t n = primary_.size();
  if (tiebreak_.size() != n) throw std::invalid_argument("TermOrder: tie-break length mismatch");
  std::vector<bool> seen(n, false);
  for (std::size_t v : tiebreak_) {
    if (v >= n || seen[v]) throw std::invalid_argument("TermOrder: tie-break is not a permutation");
    seen[v] = true;
  }
  if (secondary_.empty()) {
    for (auto w : primary_) {
      if (w <= 0) throw std::invalid_argument("TermOrder: weights must be strictly positive");
    }
    return;
  }
  if (secondary_.size() != n || n % 2 != 0) throw std::invalid_argument("TermOrder: malformed product extension");
  const std::size_t half = n / 2;
  for (std::size_t i = 0; i < n; ++i) {
    const bool affine = i < half;
    if (affine && (primary_[i] <= 0 || secondary_[i] != 0)) {
      throw std::invalid_argument("TermOrder: affine tier must be positive");
    }
    if (!affine && (primary_[i] != 0 || secondary_[i] <= 0)) {
      throw std::invalid_argument("TermOrder: partner tier must be positive");
    }
  }
}

}  // namespace focal
