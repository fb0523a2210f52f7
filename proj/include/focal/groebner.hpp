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
#ifndef FOCAL_GROEBNER_HPP_
#define FOCAL_GROEBNER_HPP_

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "focal/poly.hpp"
#include "focal/term_order.hpp"

namespace focal {

template <ExactField K>
Monomial initial_monomial(const Poly<K>& f, const TermOrder& ord) {
  if (f.is_zero()) throw std::invalid_argument("initial_monomial: zero polynomial");
  const Monomial* best = &f.terms().front().first;
  for (const auto& t : f.terms()) {
    if (ord.less(*best, t.first)) best = &t.first;
  }
  return *best;
}

namespace detail {

template <ExactField K>
struct OrderedTerm {
  Monomial mono;
  K coeff;
  std::int64_t w1;
  std::int64_t w2;
};

template <ExactField K>
using OrderedPoly = std::vector<OrderedTerm<K>>;

// Descending order comparison using cached weights.
template <ExactField K>
std::strong_ordering compare_terms(const OrderedTerm<K>& a, const OrderedTerm<K>& b, const TermOrder& ord) {
  if (auto c = a.w1 <=> b.w1; c != 0) return c;
  if (auto c = a.w2 <=> b.w2; c != 0) return c;
  return ord.compare_tiebreak(a.mono, b.mono);
}

template <ExactField K>
OrderedPoly<K> to_ordered(const Poly<K>& f, const TermOrder& ord) {
  if (f.nvars() != ord.nvars()) throw std::invalid_argument("term order / polynomial variable count mismatch");
  OrderedPoly<K> out;
  out.reserve(f.size());
  for (const auto& [m, c] : f.terms()) {
    out.push_back({m, c, ord.primary_weight(m), ord.secondary_weight(m)});
  }
  std::sort(out.begin(), out.end(),
            [&](const auto& a, const auto& b) { return compare_terms(a, b, ord) > 0; });
  return out;
}

template <ExactField K>
Poly<K> from_ordered(std::size_t nvars, const OrderedPoly<K>& p) {
  std::vector<typename Poly<K>::Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.emplace_back(t.mono, t.coeff);
  return Poly<K>::from_terms(nvars, std::move(terms));
}

inline std::uint64_t support_mask(const Monomial& m) {
  std::uint64_t mask = 0;
  const auto e = m.exponents();
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] != 0) mask |= 1ULL << (i % 64);
  }
  return mask;
}

// Returns a[a_from..] + scale * shift * b[b_from..], all in descending order.
// Multiplying by a monomial preserves a monomial order, so this is a merge.
template <ExactField K>
OrderedPoly<K> merge_scaled(const OrderedPoly<K>& a, std::size_t a_from, const OrderedPoly<K>& b, std::size_t b_from,
                            const K& scale, const Monomial& shift, const TermOrder& ord) {
  const std::int64_t sw1 = ord.primary_weight(shift);
  const std::int64_t sw2 = ord.secondary_weight(shift);
  OrderedPoly<K> out;
  out.reserve((a.size() - a_from) + (b.size() - b_from));
  std::size_t i = a_from, j = b_from;
  std::optional<OrderedTerm<K>> pending;
  auto shifted = [&](std::size_t idx) {
    K c = b[idx].coeff * scale;
    return OrderedTerm<K>{b[idx].mono * shift, std::move(c), b[idx].w1 + sw1, b[idx].w2 + sw2};
  };
  if (j < b.size()) pending = shifted(j);
  while (i < a.size() || pending) {
    if (!pending) {
      out.push_back(a[i++]);
      continue;
    }
    if (i == a.size()) {
      out.push_back(std::move(*pending));
      pending.reset();
    } else {
      const auto c = compare_terms(a[i], *pending, ord);
      if (c > 0) {
        out.push_back(a[i++]);
        continue;
      }
      if (c < 0) {
        out.push_back(std::move(*pending));
      } else {
        K sum = a[i].coeff + pending->coeff;
        if (!is_zero(sum)) out.push_back({a[i].mono, std::move(sum), a[i].w1, a[i].w2});
        ++i;
      }
      pending.reset();
    }
    if (++j < b.size()) pending = shifted(j);
  }
  return out;
}

template <ExactField K>
class Reducer {
 public:
  Reducer(const std::vector<Poly<K>>& basis, const TermOrder& ord) : ord_(ord) {
    for (const auto& g : basis) {
      if (g.is_zero()) throw std::invalid_argument("reduce: zero polynomial in divisor list");
      basis_.push_back(to_ordered(g, ord));
      masks_.push_back(support_mask(basis_.back().front().mono));
    }
  }

  const OrderedPoly<K>& element(std::size_t i) const { return basis_[i]; }
  std::size_t size() const { return basis_.size(); }

  // Full normal form: no term of the result is divisible by a leading monomial.
  OrderedPoly<K> normal_form(OrderedPoly<K> p) const {
    OrderedPoly<K> rem;
    std::size_t pos = 0;
    while (pos < p.size()) {
      const auto& lead = p[pos];
      const std::uint64_t mask = support_mask(lead.mono);
      std::size_t div = basis_.size();
      for (std::size_t k = 0; k < basis_.size(); ++k) {
        if ((masks_[k] & ~mask) != 0) continue;
        if (basis_[k].front().mono.divides(lead.mono)) {
          div = k;
          break;
        }
      }
      if (div == basis_.size()) {
        rem.push_back(lead);
        ++pos;
        continue;
      }
      const auto& g = basis_[div];
      const K factor = -(lead.coeff / g.front().coeff);
      const Monomial shift = lead.mono / g.front().mono;
      p = merge_scaled(p, pos + 1, g, 1, factor, shift, ord_);
      pos = 0;
    }
    return rem;
  }

 private:
  const TermOrder& ord_;
  std::vector<OrderedPoly<K>> basis_;
  std::vector<std::uint64_t> masks_;
};

template <ExactField K>
OrderedPoly<K> s_polynomial_ordered(const OrderedPoly<K>& f, const OrderedPoly<K>& g, const TermOrder& ord) {
  const Monomial l = f.front().mono.lcm(g.front().mono);
  const K one = from_int(1, f.front().coeff);
  const K cf = one / f.front().coeff;
  const K cg = -(one / g.front().coeff);
  const OrderedPoly<K> left = merge_scaled(OrderedPoly<K>{}, 0, f, 1, cf, l / f.front().mono, ord);
  return merge_scaled(left, 0, g, 1, cg, l / g.front().mono, ord);
}

}  // namespace detail

// Multivariate division remainder of f by G.
template <ExactField K>
Poly<K> reduce(const Poly<K>& f, const std::vector<Poly<K>>& G, const TermOrder& ord) {
  detail::Reducer<K> reducer(G, ord);
  return detail::from_ordered(f.nvars(), reducer.normal_form(detail::to_ordered(f, ord)));
}

// S(f, g) = (L / lt(f)) f - (L / lt(g)) g with L = lcm of the leading monomials.
template <ExactField K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g, const TermOrder& ord) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("s_polynomial: zero polynomial");
  return detail::from_ordered(
      f.nvars(), detail::s_polynomial_ordered(detail::to_ordered(f, ord), detail::to_ordered(g, ord), ord));
}

template <ExactField K>
struct GroebnerCheckResult {
  bool is_groebner = true;
  std::size_t pairs = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
  std::size_t reduced_to_zero = 0;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::optional<Poly<K>> remainder;
};

struct GroebnerCheckOptions {
  // Buchberger's chain criterion: skip (i, j) when some lt(g_k) divides
  // L_ij and both L_ik and L_jk are proper divisors of L_ij. Sound because
  // strict divisibility of lcms is well-founded.
  bool chain_criterion = true;
  // Stop at the first S-pair with nonzero remainder.
  bool stop_at_first_failure = true;
};

// Checks Buchberger's criterion: every S-pair of G reduces to zero modulo G.
template <ExactField K>
GroebnerCheckResult<K> buchberger_report(const std::vector<Poly<K>>& G, const TermOrder& ord,
                                         GroebnerCheckOptions options = {}) {
  detail::Reducer<K> reducer(G, ord);
  GroebnerCheckResult<K> result;
  std::vector<Monomial> lead;
  for (std::size_t i = 0; i < reducer.size(); ++i) lead.push_back(reducer.element(i).front().mono);
  for (std::size_t i = 0; i < lead.size(); ++i) {
    for (std::size_t j = i + 1; j < lead.size(); ++j) {
      ++result.pairs;
      if (lead[i].coprime(lead[j])) {
        ++result.coprime_skipped;
        continue;
      }
      const Monomial lij = lead[i].lcm(lead[j]);
      if (options.chain_criterion) {
        bool skip = false;
        for (std::size_t k = 0; k < lead.size() && !skip; ++k) {
          if (k == i || k == j || !lead[k].divides(lij)) continue;
          skip = !(lead[i].lcm(lead[k]) == lij) && !(lead[j].lcm(lead[k]) == lij);
        }
        if (skip) {
          ++result.chain_skipped;
          continue;
        }
      }
      auto rem = reducer.normal_form(detail::s_polynomial_ordered(reducer.element(i), reducer.element(j), ord));
      if (rem.empty()) {
        ++result.reduced_to_zero;
        continue;
      }
      if (result.is_groebner) {
        result.is_groebner = false;
        result.failing_pair = {i, j};
        result.remainder = detail::from_ordered(G[i].nvars(), rem);
      }
      if (options.stop_at_first_failure) return result;
    }
  }
  return result;
}

template <ExactField K>
bool buchberger_check(const std::vector<Poly<K>>& G, const TermOrder& ord) {
  return buchberger_report(G, ord).is_groebner;
}

}  // namespace focal

#endif  // FOCAL_GROEBNER_HPP_
