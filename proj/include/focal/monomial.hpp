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
#ifndef FOCAL_MONOMIAL_HPP_
#define FOCAL_MONOMIAL_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <vector>

namespace focal {

// Dense exponent vector. Exponents are capped at 255; products that would
// exceed the cap throw std::overflow_error.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<std::uint8_t> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t v, unsigned e = 1) {
    Monomial m(nvars);
    m.set(v, e);
    return m;
  }

  std::size_t nvars() const { return exps_.size(); }
  unsigned operator[](std::size_t v) const { return exps_[v]; }
  std::span<const std::uint8_t> exponents() const { return exps_; }

  void set(std::size_t v, unsigned e) {
    if (e > 255) throw std::overflow_error("Monomial: exponent exceeds 255");
    exps_.at(v) = static_cast<std::uint8_t>(e);
  }

  unsigned degree() const {
    unsigned d = 0;
    for (auto e : exps_) d += e;
    return d;
  }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
  }

  // True when *this divides other.
  bool divides(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime(const Monomial& other) const {
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] != 0 && other.exps_[i] != 0) return false;
    }
    return true;
  }

  bool is_squarefree() const {
    return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e <= 1; });
  }

  Monomial operator*(const Monomial& other) const {
    Monomial out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      const unsigned e = unsigned{exps_[i]} + other.exps_[i];
      if (e > 255) throw std::overflow_error("Monomial: exponent exceeds 255");
      out.exps_[i] = static_cast<std::uint8_t>(e);
    }
    return out;
  }

  // Exact quotient; other must divide *this.
  Monomial operator/(const Monomial& other) const {
    Monomial out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (other.exps_[i] > exps_[i]) throw std::domain_error("Monomial: inexact division");
      out.exps_[i] = static_cast<std::uint8_t>(exps_[i] - other.exps_[i]);
    }
    return out;
  }

  Monomial lcm(const Monomial& other) const {
    Monomial out(exps_.size());
    for (std::size_t i = 0; i < exps_.size(); ++i) out.exps_[i] = std::max(exps_[i], other.exps_[i]);
    return out;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
      if (exps_[i] != 0) out.push_back(i);
    }
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 1469598103934665603ULL;
    for (auto e : exps_) h = (h ^ e) * 1099511628211ULL;
    return h;
  }

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;

 private:
  std::vector<std::uint8_t> exps_;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

}  // namespace focal

#endif  // FOCAL_MONOMIAL_HPP_
