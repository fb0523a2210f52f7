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
#include "focal/scalar.hpp"

#include <cstdlib>
#include <stdexcept>

namespace focal {
namespace {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

void validate_prime(std::uint64_t p) {
  if (p <= (1ULL << 50) || p >= (1ULL << 63)) {
    throw std::invalid_argument("prime must lie in (2^50, 2^63): " + std::to_string(p));
  }
  if (!is_prime_u64(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
}

std::uint64_t prime_from_environment() {
  const char* env = std::getenv("FOCAL_UGB_PRIME");
  if (env == nullptr || *env == '\0') return kDefaultPrime;
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(env, &used);
    if (env[used] != '\0') throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("FOCAL_UGB_PRIME is not an integer: ") + env);
  }
  validate_prime(p);
  return p;
}

ModP ModP::inverse() const {
  if (v_ == 0) throw std::domain_error("ModP: division by zero");
  // Fermat: p is prime.
  return from_residue_unchecked(pow_mod(v_, p_ - 2, p_), p_);
}

ModP ModP::from_rational(const Rational& q, std::uint64_t p) {
  mpz_class m(std::to_string(p));
  mpz_class num = q.get_num() % m;
  if (num < 0) num += m;
  mpz_class den = q.get_den() % m;
  if (den == 0) throw std::domain_error("ModP: denominator divisible by p");
  ModP n = from_residue(std::stoull(num.get_str()), p);
  ModP d = from_residue(std::stoull(den.get_str()), p);
  return n / d;
}

std::string to_string(const Rational& q) { return q.get_str(); }
std::string to_string(const ModP& x) { return std::to_string(x.value()); }

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

}  // namespace focal
