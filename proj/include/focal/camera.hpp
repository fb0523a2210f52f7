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
#ifndef FOCAL_CAMERA_HPP_
#define FOCAL_CAMERA_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "focal/linalg.hpp"
#include "focal/scalar.hpp"

namespace focal {

using CameraMatrix = Matrix<Rational>;  // 3 x 4

struct GenericityCertificate {
  bool generic = false;
  bool all_rank_three = false;
  std::size_t minors_checked = 0;
  std::size_t zero_minors = 0;
  // First vanishing 4x4 minor, as rows of the stacked 3n x 4 matrix.
  std::optional<std::array<std::size_t, 4>> zero_minor_rows;
};

struct CameraConfig {
  int n = 0;
  std::vector<CameraMatrix> cameras;
  std::uint64_t seed = 0;
  GenericityCertificate certificate;
};

// Generic means: every A_i has rank 3 and every 4x4 minor of the stacked
// 4 x 3n matrix [A_1^T ... A_n^T] is nonzero. All C(3n, 4) minors are
// evaluated so the certificate records the full count.
GenericityCertificate certify_genericity(const std::vector<CameraMatrix>& cameras);

CameraConfig make_camera_config(std::vector<CameraMatrix> cameras, std::uint64_t seed = 0);

// Integer entries uniform in [-1000, 1000]; resampled until generic.
// Throws std::runtime_error once max_attempts samples have failed.
CameraConfig sample_generic_cameras(int n, std::uint64_t seed, int max_attempts = 64);

nlohmann::ordered_json cameras_to_json(const CameraConfig& config);

}  // namespace focal

#endif  // FOCAL_CAMERA_HPP_
