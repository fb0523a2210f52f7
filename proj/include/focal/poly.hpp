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
#ifndef FOCAL_POLY_HPP_
#define FOCAL_POLY_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <string>
#include <utility>
#include <vector>

#include "focal/monomial.hpp"
#include "focal/scalar.hpp"

namespace focal {

// Sparse multivariate polynomial. Terms are kept sorted by ascending
// exponent vector (lexicographic on the dense vector), exponent vectors are
// unique and no stored coefficient is zero, so structural equality is
// polynomial equality.
template <ExactField K>
class Poly {
 public:
  using Term = std::pair<Monomial, K>;

  Poly() = default;
  explicit Poly(std::size_t nvars) : nvars_(nvars) {}

  static Poly constant(std::size_t nvars, const K& c) {
    Poly p(nvars);
    if (!focal::is_zero(c)) p.terms_.emplace_back(Monomial(nvars), c);
    return p;
  }

  static Poly variable(std::size_t nvars, std::size_t v, const K& one) {
    return monomial(Monomial::variable(nvars, v), one);
  }

  static Poly monomial(Monomial m, const K& c) {
    Poly p(m.nvars());
    if (!focal::is_zero(c)) p.terms_.emplace_back(std::move(m), c);
    return p;
  }

  // Builds a polynomial from arbitrary terms, combining duplicates.
  static Poly from_terms(std::size_t nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    Poly p(nvars);
    for (auto& t : terms) {
      if (t.first.nvars() != nvars) throw std::invalid_argument("Poly: variable count mismatch");
      if (!p.terms_.empty() && p.terms_.back().first == t.first) {
        K sum = p.terms_.back().second + t.second;
        p.terms_.back().second = sum;
      } else {
        p.terms_.push_back(std::move(t));
      }
    }
    std::erase_if(p.terms_, [](const Term& t) { return focal::is_zero(t.second); });
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_monomial() const { return terms_.size() == 1; }

  Poly operator+(const Poly& o) const { return merge(o, false); }
  Poly operator-(const Poly& o) const { return merge(o, true); }
  Poly operator-() const {
    Poly p = *this;
    for (auto& t : p.terms_) {
      K neg = -t.second;
      t.second = neg;
    }
    return p;
  }

  Poly operator*(const Poly& o) const {
    check_compatible(o);
    if (is_zero() || o.is_zero()) return Poly(nvars_);
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const auto& a : terms_) {
      for (const auto& b : o.terms_) {
        K c = a.second * b.second;
        out.emplace_back(a.first * b.first, std::move(c));
      }
    }
    return from_terms(nvars_, std::move(out));
  }

  Poly scaled(const K& c) const {
    if (focal::is_zero(c)) return Poly(nvars_);
    Poly p = *this;
    for (auto& t : p.terms_) {
      K prod = t.second * c;
      t.second = prod;
    }
    return p;
  }

  // Multiplying by a monomial preserves the term order, so no re-sort.
  Poly times(const Monomial& m) const {
    Poly p = *this;
    for (auto& t : p.terms_) t.first = t.first * m;
    std::sort(p.terms_.begin(), p.terms_.end(),
              [](const Term& a, const Term& b) { return a.first < b.first; });
    return p;
  }

  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }

  bool operator==(const Poly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
      if (!(terms_[i].first == o.terms_[i].first)) return false;
      if (!(terms_[i].second == o.terms_[i].second)) return false;
    }
    return true;
  }

  // Variables with positive exponent in some term, ascending.
  std::vector<std::size_t> support() const {
    std::vector<bool> seen(nvars_, false);
    for (const auto& t : terms_) {
      for (std::size_t v = 0; v < nvars_; ++v) {
        if (t.first[v] != 0) seen[v] = true;
      }
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < nvars_; ++v) {
      if (seen[v]) out.push_back(v);
    }
    return out;
  }

  unsigned degree_in(std::size_t v) const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first[v]);
    return d;
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
  }

  K evaluate(std::span<const K> point) const {
    if (point.size() != nvars_) throw std::invalid_argument("Poly::evaluate: point dimension");
    if (terms_.empty()) {
      if (point.empty()) throw std::invalid_argument("Poly::evaluate: cannot type zero without a point");
      return from_int(0, point.front());
    }
    if constexpr (std::is_same_v<K, Rational>) {
      if (integral(point)) return evaluate_integral(point);
    }
    K acc = from_int(0, terms_.front().second);
    for (const auto& t : terms_) {
      K v = t.second;
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (unsigned e = t.first[i]; e > 0; --e) v *= point[i];
      }
      acc += v;
    }
    return acc;
  }

  template <class F>
  auto map_coefficients(F f) const -> Poly<std::decay_t<decltype(f(std::declval<const K&>()))>> {
    using K2 = std::decay_t<decltype(f(std::declval<const K&>()))>;
    std::vector<typename Poly<K2>::Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) out.emplace_back(t.first, f(t.second));
    return Poly<K2>::from_terms(nvars_, std::move(out));
  }

  std::string to_string(const std::function<std::string(std::size_t)>& name) const {
    if (terms_.empty()) return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      if (!out.empty()) out += " + ";
      out += "(" + focal::to_string(it->second) + ")";
      for (std::size_t v = 0; v < nvars_; ++v) {
        const unsigned e = it->first[v];
        if (e == 0) continue;
        out += "*" + name(v);
        if (e > 1) out += "^" + std::to_string(e);
      }
    }
    return out;
  }

 private:
  bool integral(std::span<const K> point) const requires std::is_same_v<K, Rational> {
    for (const auto& x : point) {
      if (x.get_den() != 1) return false;
    }
    for (const auto& t : terms_) {
      if (t.second.get_den() != 1) return false;
    }
    return true;
  }

  // Same sum in mpz arithmetic, which skips the gcd of every rational step.
  Rational evaluate_integral(std::span<const K> point) const requires std::is_same_v<K, Rational> {
    mpz_class acc = 0, v;
    for (const auto& t : terms_) {
      v = t.second.get_num();
      for (std::size_t i = 0; i < nvars_; ++i) {
        for (unsigned e = t.first[i]; e > 0; --e) v *= point[i].get_num();
      }
      acc += v;
    }
    return Rational(acc);
  }
  void check_compatible(const Poly& o) const {
    if (nvars_ != o.nvars_) throw std::invalid_argument("Poly: variable count mismatch");
  }

  Poly merge(const Poly& o, bool subtract) const {
    check_compatible(o);
    Poly p(nvars_);
    p.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        p.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        K c = subtract ? K(-o.terms_[j].second) : o.terms_[j].second;
        p.terms_.emplace_back(o.terms_[j].first, std::move(c));
        ++j;
      } else {
        K c = subtract ? K(terms_[i].second - o.terms_[j].second)
                       : K(terms_[i].second + o.terms_[j].second);
        if (!focal::is_zero(c)) p.terms_.emplace_back(terms_[i].first, std::move(c));
        ++i;
        ++j;
      }
    }
    return p;
  }

  std::size_t nvars_ = 0;
  std::vector<Term> terms_;
};

}  // namespace focal

#endif  // FOCAL_POLY_HPP_
