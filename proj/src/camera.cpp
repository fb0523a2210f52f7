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
#include "focal/camera.hpp"

#include <stdexcept>

#include "focal/random.hpp"

namespace focal {

GenericityCertificate certify_genericity(const std::vector<CameraMatrix>& cameras) {
  GenericityCertificate cert;
  cert.all_rank_three = true;
  std::vector<std::array<Rational, 4>> rows;
  for (const auto& a : cameras) {
    if (a.rows() != 3 || a.cols() != 4) throw std::invalid_argument("camera matrices must be 3x4");
    if (matrix_rank(a) != 3) cert.all_rank_three = false;
    for (std::size_t r = 0; r < 3; ++r) rows.push_back({a(r, 0), a(r, 1), a(r, 2), a(r, 3)});
  }
  const std::size_t m = rows.size();
  Matrix<Rational> minor(4, 4, Rational(0));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        for (std::size_t d = c + 1; d < m; ++d) {
          const std::array<std::size_t, 4> pick{a, b, c, d};
          for (std::size_t r = 0; r < 4; ++r) {
            for (std::size_t col = 0; col < 4; ++col) minor(r, col) = rows[pick[r]][col];
          }
          ++cert.minors_checked;
          if (is_zero(det_bareiss(minor))) {
            ++cert.zero_minors;
            if (!cert.zero_minor_rows) cert.zero_minor_rows = pick;
          }
        }
      }
    }
  }
  cert.generic = cert.all_rank_three && cert.zero_minors == 0;
  return cert;
}

CameraConfig make_camera_config(std::vector<CameraMatrix> cameras, std::uint64_t seed) {
  CameraConfig config;
  config.n = static_cast<int>(cameras.size());
  config.certificate = certify_genericity(cameras);
  config.cameras = std::move(cameras);
  config.seed = seed;
  return config;
}

CameraConfig sample_generic_cameras(int n, std::uint64_t seed, int max_attempts) {
  if (n < 2) throw std::invalid_argument("sample_generic_cameras: need n >= 2");
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<CameraMatrix> cams;
    for (int i = 0; i < n; ++i) {
      CameraMatrix a(3, 4, Rational(0));
      for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 4; ++c) a(r, c) = Rational(static_cast<long>(rng.uniform(-1000, 1000)));
      }
      cams.push_back(std::move(a));
    }
    auto config = make_camera_config(std::move(cams), seed);
    if (config.certificate.generic) return config;
  }
  throw std::runtime_error("sample_generic_cameras: retry budget exhausted");
}

nlohmann::ordered_json cameras_to_json(const CameraConfig& config) {
  nlohmann::ordered_json cams = nlohmann::ordered_json::array();
  for (const auto& a : config.cameras) {
    nlohmann::ordered_json m = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < 3; ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (std::size_t c = 0; c < 4; ++c) row.push_back(to_string(a(r, c)));
      m.push_back(std::move(row));
    }
    cams.push_back(std::move(m));
  }
  const auto& cert = config.certificate;
  nlohmann::ordered_json out;
  out["n"] = config.n;
  out["seed"] = config.seed;
  out["cameras"] = std::move(cams);
  out["genericity"] = {{"generic", cert.generic},
                       {"all_rank_three", cert.all_rank_three},
                       {"minors_checked", cert.minors_checked},
                       {"zero_minors", cert.zero_minors}};
  return out;
}

}  // namespace focal
