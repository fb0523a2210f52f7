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

#ifndef FOCAL_SCALAR_HPP_
#define FOCAL_SCALAR_HPP_

// Exact scalars. Two field modes are supported:
//   Rational  - arbitrary precision rationals (GMP mpq), always canonical.
//   ModP      - residues modulo a prime p with 2^50 < p < 2^63.
// Generic code uses is_zero(), from_int(v, like), to_string() and the
// arithmetic operators, so both types can be used as polynomial coefficients.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace focal {

using Rational = mpq_class;

// 2^62 - 57, the largest prime below 2^62.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;
// 2^61 - 1, offered for cross-check reruns.
inline constexpr std::uint64_t kCrossCheckPrime = 2305843009213693951ULL;

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

// Throws std::invalid_argument unless p is prime and 2^50 < p < 2^63.
void validate_prime(std::uint64_t p);

// Reads FOCAL_UGB_PRIME if set, otherwise returns kDefaultPrime.
std::uint64_t prime_from_environment();

class ModP {
 public:
  ModP() = default;
  ModP(std::int64_t v, std::uint64_t p) : p_(p) {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    v_ = static_cast<std::uint64_t>(r);
  }
  static ModP from_residue(std::uint64_t r, std::uint64_t p) {
    ModP out;
    out.p_ = p;
    out.v_ = r % p;
    return out;
  }
  static ModP from_rational(const Rational& q, std::uint64_t p);

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }
  bool is_zero() const { return v_ == 0; }

  ModP operator+(const ModP& o) const {
    std::uint64_t s = v_ + o.v_;
    if (s >= p_) s -= p_;
    return from_residue_unchecked(s, p_);
  }
  ModP operator-(const ModP& o) const {
    return from_residue_unchecked(v_ >= o.v_ ? v_ - o.v_ : v_ + p_ - o.v_, p_);
  }
  ModP operator-() const { return from_residue_unchecked(v_ == 0 ? 0 : p_ - v_, p_); }
  ModP operator*(const ModP& o) const {
    unsigned __int128 prod = static_cast<unsigned __int128>(v_) * o.v_;
    return from_residue_unchecked(static_cast<std::uint64_t>(prod % p_), p_);
  }
  ModP inverse() const;
  ModP operator/(const ModP& o) const { return *this * o.inverse(); }
  ModP& operator+=(const ModP& o) { return *this = *this + o; }
  ModP& operator-=(const ModP& o) { return *this = *this - o; }
  ModP& operator*=(const ModP& o) { return *this = *this * o; }
  ModP& operator/=(const ModP& o) { return *this = *this / o; }

  bool operator==(const ModP& o) const { return v_ == o.v_ && p_ == o.p_; }

 private:
  static ModP from_residue_unchecked(std::uint64_t r, std::uint64_t p) {
    ModP out;
    out.p_ = p;
    out.v_ = r;
    return out;
  }

  std::uint64_t v_ = 0;
  std::uint64_t p_ = kDefaultPrime;
};

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }
inline bool is_zero(const ModP& x) { return x.is_zero(); }

inline Rational from_int(std::int64_t v, const Rational&) {
  return Rational(static_cast<long>(v));
}
inline ModP from_int(std::int64_t v, const ModP& like) { return ModP(v, like.modulus()); }

std::string to_string(const Rational& q);
std::string to_string(const ModP& x);

// Parses "a" or "a/b" into a canonical rational.
Rational parse_rational(const std::string& s);

template <class K>
concept ExactField = requires(const K& a, const K& b) {
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { is_zero(a) } -> std::convertible_to<bool>;
  { from_int(1, a) } -> std::convertible_to<K>;
};

}  // namespace focal

#endif  // FOCAL_SCALAR_HPP_
