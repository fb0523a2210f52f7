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
#ifndef FOCAL_BASE_CASE_HPP_
#define FOCAL_BASE_CASE_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "focal/camera.hpp"
#include "focal/scalar.hpp"
#include "focal/term_order.hpp"

namespace focal {

struct BaseCaseOptions {
  int orders = 20;
  std::uint64_t prime = kDefaultPrime;
  bool chain_criterion = true;
};

struct GroebnerStats {
  bool is_groebner = false;
  std::size_t pairs = 0;
  std::size_t coprime_skipped = 0;
  std::size_t chain_skipped = 0;
  std::size_t reduced_to_zero = 0;
  std::optional<std::pair<std::size_t, std::size_t>> failing_pair;
  std::string remainder;  // empty unless a pair failed
};

struct OrderCheck {
  std::uint64_t seed = 0;
  std::vector<std::int64_t> weights;  // affine weights
  std::vector<std::size_t> tiebreak;  // affine tie-break
  GroebnerStats affine;               // focals under the affine order
  GroebnerStats homogenized;          // f^h under the product extension
  bool squarefree = false;            // every init(f^h) square-free
  bool supports_in_spread = false;    // init(f^h) meets [N] inside spr f
  std::size_t doubled_facets = 0;
  std::size_t min_facet_size = 0;
  std::size_t max_facet_size = 0;
  bool pure = false;                  // all doubled facets of size N + n + 3
  bool shadow_matches = false;        // {i : i, i+N in facet} gives Delta_n

  bool verdict(std::size_t expected_facets) const;
};

struct BaseCaseReport {
  int n = 4;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  CameraConfig cameras;
  std::size_t focal_count = 0;
  std::size_t delta_facets = 0;  // facets of Delta_n, closed form
  std::size_t matroid_bases = 0;  // bases of the transversal matroid
  std::vector<OrderCheck> orders;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
};

// Gröbner base case on the focals of the given cameras (n = 4). Each order
// is replayable from its recorded seed: the affine order is
// TermOrder::sample(3n, rng) and its extension
// TermOrder::product_extension(affine, rng) with Rng rng(seed).
BaseCaseReport base_case_groebner(const CameraConfig& cameras, std::uint64_t seed, const BaseCaseOptions& options = {});

}  // namespace focal

#endif  // FOCAL_BASE_CASE_HPP_
