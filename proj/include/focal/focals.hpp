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
#ifndef FOCAL_FOCALS_HPP_
#define FOCAL_FOCALS_HPP_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "focal/camera.hpp"
#include "focal/linalg.hpp"
#include "focal/poly.hpp"
#include "focal/varset.hpp"
#include "focal/varspace.hpp"

namespace focal {

enum class FocalMode { kNumeric, kSymbolic };

// Per-camera count of image variables. Camera variables never count.
class Profile {
 public:
  Profile() = default;
  explicit Profile(std::vector<int> counts) : counts_(std::move(counts)) {}

  const std::vector<int>& counts() const { return counts_; }
  int operator[](std::size_t i) const { return counts_[i]; }
  std::size_t size() const { return counts_.size(); }
  int total() const;
  // Counts sorted in descending order, i.e. the profile up to camera permutation.
  std::vector<int> sorted_descending() const;
  std::string to_string() const;

  bool operator==(const Profile&) const = default;

 private:
  std::vector<int> counts_;
};

Profile profile_of(const VarSet& vars, const VarSpace& space);

struct Focal {
  std::vector<int> sigma;          // ascending camera indices, |sigma| = k
  std::vector<std::size_t> rows;   // ascending rows of the 3k x (4+k) matrix
  Poly<Rational> poly;
  VarSet spread;
  Profile profile;

  std::size_t k() const { return sigma.size(); }
};

// The 3k x (4+k) matrix with camera blocks in the first four columns and
// image vector x_{sigma_t} in column 4+t, rows 3t..3t+2.
Matrix<Poly<Rational>> focal_matrix(const std::vector<int>& sigma, const CameraConfig& cameras);
// Same layout with camera entries replaced by the variables a_{ijk}.
Matrix<Poly<Rational>> focal_matrix_symbolic(const std::vector<int>& sigma, int n);

// Row selections of size 4+k whose per-camera counts all lie in {2, 3},
// in lexicographic order. Selections with a count of 1 give monomial
// multiples of lower focals; a count of 0 leaves an all-zero column.
std::vector<std::vector<std::size_t>> focal_row_selections(int k);

// All 2-, 3- and 4-focals: k ascending, then sigma lex, then rows lex.
std::vector<Focal> enumerate_focals(const CameraConfig& cameras);
std::vector<Focal> enumerate_focals_symbolic(int n);

// C(n,2) + 27 C(n,3) + 81 C(n,4).
std::size_t expected_focal_count(int n);

std::pair<VarSet, Profile> spread_and_profile(const Poly<Rational>& f, const VarSpace& space);

nlohmann::ordered_json focals_to_json(const std::vector<Focal>& focals, const VarSpace& space);

// Evaluates a fixed list of focals at many points. Monomials shared
// between focals are computed once per point.
class FocalEvaluator {
 public:
  explicit FocalEvaluator(const std::vector<Focal>& focals);

  std::size_t size() const { return offsets_.size() - 1; }
  std::size_t monomial_count() const { return monomials_.size(); }
  std::vector<Rational> operator()(const std::vector<Rational>& point) const;

 private:
  template <class Num>
  std::vector<Rational> run(const std::vector<Num>& point, const std::vector<Num>& coeffs) const;

  std::size_t nvars_ = 0;
  std::vector<std::vector<std::size_t>> monomials_;  // variables with multiplicity
  std::vector<std::size_t> term_monomial_;
  std::vector<Rational> coeffs_;
  std::vector<mpz_class> int_coeffs_;  // filled when every coefficient is an integer
  std::vector<std::size_t> offsets_;  // terms of focal f: [offsets_[f], offsets_[f+1])
};

std::vector<std::vector<int>> combinations(int n, int k);
std::size_t binomial(std::size_t n, std::size_t k);

}  // namespace focal

#endif  // FOCAL_FOCALS_HPP_
