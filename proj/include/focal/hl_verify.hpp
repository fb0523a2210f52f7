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
#ifndef FOCAL_HL_VERIFY_HPP_
#define FOCAL_HL_VERIFY_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "focal/camera.hpp"
#include "focal/linalg.hpp"
#include "focal/random.hpp"
#include "focal/scalar.hpp"
#include "focal/varset.hpp"
#include "focal/varspace.hpp"

namespace focal {

// The cone maps whose images are the multiview and universal varieties.
//   multiview: (q, lambda) -> (lambda_i A_i q)_i              params 4 + n
//   universal: (A, q, lambda) -> (A, (lambda_i A_i q)_i)      params 12n + 4 + n
// Parameter layout: camera entries first (index 12i + 4j + k), then q,
// then lambda.
class Parametrization {
 public:
  static Parametrization multiview(CameraConfig cameras);
  static Parametrization universal(int n);

  int n() const { return n_; }
  bool is_universal() const { return !cameras_.has_value(); }
  VarSpace space() const { return is_universal() ? VarSpace::universal(n_) : VarSpace::multiview(n_); }
  std::size_t parameter_count() const;
  // n + 3, resp. 13n + 3.
  std::size_t expected_dimension() const;
  const std::optional<CameraConfig>& cameras() const { return cameras_; }

  std::vector<ModP> evaluate(const std::vector<ModP>& params) const;
  // Rows: ambient coordinates. Columns: parameters.
  Matrix<ModP> jacobian(const std::vector<ModP>& params) const;

 private:
  Parametrization(int n, std::optional<CameraConfig> cameras) : n_(n), cameras_(std::move(cameras)) {}

  int n_;
  std::optional<CameraConfig> cameras_;
};

struct DominanceCertificate {
  VarSet facet;
  std::uint64_t prime = 0;
  std::uint64_t seed = 0;
  std::size_t rank = 0;
  bool verdict = false;
  // One parameter point per attempt, with the rank found there.
  std::vector<std::vector<std::uint64_t>> points;
  std::vector<std::size_t> ranks;

  nlohmann::ordered_json to_json(const VarSpace& space) const;
};

// Rank over F_p of the Jacobian rows indexed by U at a random parameter
// point; one retry at a fresh point before giving up.
DominanceCertificate jacobian_dominance(const Parametrization& p, const VarSet& facet, std::uint64_t seed,
                                        std::uint64_t prime = kDefaultPrime);

std::size_t full_jacobian_rank(const Parametrization& p, std::uint64_t seed, std::uint64_t prime = kDefaultPrime);

// Raised when a lift hits a non-generic value (a vanishing pivot or a
// kernel of the wrong dimension). Callers resample.
class DegenerateTarget : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LiftedPoint {
  std::vector<CameraMatrix> cameras;
  std::vector<Rational> q;       // world point, length 4
  std::vector<Rational> lambda;  // per-camera scale, x_i = lambda_i A_i q
  std::vector<Rational> coords;  // full ambient point (3n or 15n entries)
};

// Target values in the order of U.elements().
using Target = std::vector<Rational>;

Target project(const std::vector<Rational>& coords, const VarSet& facet);

// Nonzero integers in [-bound, bound], one per element of U.
Target random_target(const VarSet& facet, Rng& rng, int bound = 1000);

// Lift for a facet of Delta_n. With four cameras the world point is the
// kernel of the ratio equations; with more, a camera contributing one
// coordinate (the last such) is split off, the rest is lifted
// recursively and the camera's scale is read off from (A_i q)_j.
LiftedPoint lift_preimage_multiview(const VarSet& facet, const Target& target, const CameraConfig& cameras);

// Lift for U = W + all camera variables: the target's cameras are reused
// as they are and W is lifted as in the multiview case.
LiftedPoint lift_preimage_universal(const VarSet& facet, const Target& target, int n);

// Lift for an arbitrary facet of the universal complex: each image
// variable whose row lacks a_{ijk} is first dropped (a_{ijk} gets a random
// value), the result is lifted, then a_{ijk} is rewritten so that x_{ij}
// takes its target value.
LiftedPoint lift_preimage_universal_any(const VarSet& facet, const Target& target, int n, Rng& rng);

// Sets entry (row, col) of camera cam so that x_{cam,row} becomes value;
// every other coordinate is unchanged. Throws DegenerateTarget if q_col = 0.
void apply_camera_change(LiftedPoint& point, const VarSpace& space, int cam, int row, int col, const Rational& value);

struct FocalResidual {
  std::size_t evaluated = 0;
  std::size_t nonzero = 0;
};

// Evaluates every 2-, 3- and 4-focal at (cameras, x) as a numeric
// determinant.
FocalResidual focal_residuals(const std::vector<CameraMatrix>& cameras, const std::vector<Rational>& image);

struct VerifyOptions {
  bool exhaustive = false;
  std::uint64_t prime = kDefaultPrime;
  int lift_attempts = 8;
};

struct FacetCheck {
  VarSet facet;
  std::vector<int> profile;
  std::size_t rank = 0;
  bool dominant = false;
  bool lifted = false;
  bool projection_exact = false;
  std::size_t focals_checked = 0;
  std::size_t focals_nonzero = 0;
  int lift_attempts = 0;
  DominanceCertificate certificate;

  bool verdict() const { return dominant && lifted && projection_exact && focals_nonzero == 0; }
};

struct HlReport {
  int n = 0;
  bool universal = false;
  std::uint64_t seed = 0;
  std::uint64_t prime = 0;
  bool exhaustive = false;
  std::optional<CameraConfig> cameras;
  std::vector<FacetCheck> checks;

  bool all_pass() const;
  nlohmann::ordered_json to_json() const;
};

// The facets examined by verify_hl: the two profile representatives, or
// every facet of Delta_n in exhaustive mode; in the universal case each is
// joined with all camera variables.
std::vector<VarSet> facets_to_check(int n, bool universal, bool exhaustive);

HlReport verify_hl(int n, bool universal, std::uint64_t seed, const VerifyOptions& options = {});

}  // namespace focal

#endif  // FOCAL_HL_VERIFY_HPP_
