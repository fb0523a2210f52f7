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
#include "focal/focals.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "focal/determinant.hpp"
#include "focal/poly_json.hpp"

namespace focal {

int Profile::total() const { return std::accumulate(counts_.begin(), counts_.end(), 0); }

std::vector<int> Profile::sorted_descending() const {
  auto out = counts_;
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::string Profile::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) os << (i ? "," : "") << counts_[i];
  os << ")";
  return os.str();
}

Profile profile_of(const VarSet& vars, const VarSpace& space) {
  std::vector<int> counts(static_cast<std::size_t>(space.n()), 0);
  for (auto v : vars.elements()) {
    if (v < space.image_count()) ++counts[static_cast<std::size_t>(space.camera_of(v))];
  }
  return Profile(std::move(counts));
}

std::vector<std::vector<int>> combinations(int n, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > n) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  std::iota(cur.begin(), cur.end(), 0);
  while (true) {
    out.push_back(cur);
    int i = k - 1;
    while (i >= 0 && cur[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) break;
    ++cur[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

namespace {

using EntryFn = std::function<Poly<Rational>(int cam, int row, int col)>;

Matrix<Poly<Rational>> build_focal_matrix(const std::vector<int>& sigma, std::size_t nvars, const EntryFn& entry) {
  const int k = static_cast<int>(sigma.size());
  if (k < 2 || k > 4) throw std::invalid_argument("focal_matrix: |sigma| must be 2, 3 or 4");
  for (std::size_t t = 1; t < sigma.size(); ++t) {
    if (sigma[t] <= sigma[t - 1]) throw std::invalid_argument("focal_matrix: sigma must be strictly increasing");
  }
  const Rational one(1);
  Matrix<Poly<Rational>> m(static_cast<std::size_t>(3 * k), static_cast<std::size_t>(4 + k), Poly<Rational>(nvars));
  for (int t = 0; t < k; ++t) {
    for (int j = 0; j < 3; ++j) {
      const auto r = static_cast<std::size_t>(3 * t + j);
      for (int c = 0; c < 4; ++c) m(r, static_cast<std::size_t>(c)) = entry(sigma[static_cast<std::size_t>(t)], j, c);
      m(r, static_cast<std::size_t>(4 + t)) =
          Poly<Rational>::variable(nvars, static_cast<std::size_t>(3 * sigma[static_cast<std::size_t>(t)] + j), one);
    }
  }
  return m;
}

std::vector<Focal> enumerate(int n, const VarSpace& space, const std::function<Matrix<Poly<Rational>>(const std::vector<int>&)>& matrix) {
  std::vector<Focal> out;
  for (int k = 2; k <= 4; ++k) {
    const auto selections = focal_row_selections(k);
    for (const auto& sigma : combinations(n, k)) {
      const auto full = matrix(sigma);
      for (const auto& rows : selections) {
        Focal f;
        f.sigma = sigma;
        f.rows = rows;
        f.poly = det_symbolic(full.select_rows(rows));
        if (f.poly.is_zero()) throw std::runtime_error("enumerate_focals: vanishing focal (non-generic cameras?)");
        std::tie(f.spread, f.profile) = spread_and_profile(f.poly, space);
        out.push_back(std::move(f));
      }
    }
  }
  return out;
}

}  // namespace

Matrix<Poly<Rational>> focal_matrix(const std::vector<int>& sigma, const CameraConfig& cameras) {
  const std::size_t nvars = static_cast<std::size_t>(3 * cameras.n);
  for (int s : sigma) {
    if (s < 0 || s >= cameras.n) throw std::out_of_range("focal_matrix: camera index");
  }
  return build_focal_matrix(sigma, nvars, [&](int cam, int row, int col) {
    return Poly<Rational>::constant(nvars, cameras.cameras[static_cast<std::size_t>(cam)](
                                               static_cast<std::size_t>(row), static_cast<std::size_t>(col)));
  });
}

Matrix<Poly<Rational>> focal_matrix_symbolic(const std::vector<int>& sigma, int n) {
  const auto space = VarSpace::universal(n);
  for (int s : sigma) {
    if (s < 0 || s >= n) throw std::out_of_range("focal_matrix_symbolic: camera index");
  }
  const Rational one(1);
  return build_focal_matrix(sigma, space.affine_size(), [&](int cam, int row, int col) {
    return Poly<Rational>::variable(space.affine_size(), space.camera(cam, row, col), one);
  });
}

std::vector<std::vector<std::size_t>> focal_row_selections(int k) {
  if (k < 2 || k > 4) throw std::invalid_argument("focal_row_selections: k must be 2, 3 or 4");
  std::vector<std::vector<std::size_t>> out;
  for (const auto& pick : combinations(3 * k, 4 + k)) {
    std::vector<int> counts(static_cast<std::size_t>(k), 0);
    for (int r : pick) ++counts[static_cast<std::size_t>(r / 3)];
    if (std::all_of(counts.begin(), counts.end(), [](int c) { return c >= 2; })) {
      out.emplace_back(pick.begin(), pick.end());
    }
  }
  return out;
}

std::vector<Focal> enumerate_focals(const CameraConfig& cameras) {
  const auto space = VarSpace::multiview(cameras.n);
  return enumerate(cameras.n, space, [&](const std::vector<int>& sigma) { return focal_matrix(sigma, cameras); });
}

std::vector<Focal> enumerate_focals_symbolic(int n) {
  const auto space = VarSpace::universal(n);
  return enumerate(n, space, [&](const std::vector<int>& sigma) { return focal_matrix_symbolic(sigma, n); });
}

std::size_t expected_focal_count(int n) {
  const auto m = static_cast<std::size_t>(n);
  return binomial(m, 2) + 27 * binomial(m, 3) + 81 * binomial(m, 4);
}

std::pair<VarSet, Profile> spread_and_profile(const Poly<Rational>& f, const VarSpace& space) {
  if (f.is_zero()) throw std::invalid_argument("spread_and_profile: zero polynomial");
  if (f.nvars() != space.affine_size()) throw std::invalid_argument("spread_and_profile: variable space mismatch");
  VarSet spread = VarSet::of(space.affine_size(), f.support());
  Profile profile = profile_of(spread, space);
  return {std::move(spread), std::move(profile)};
}

nlohmann::ordered_json focals_to_json(const std::vector<Focal>& focals, const VarSpace& space) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& f : focals) {
    nlohmann::ordered_json sigma = nlohmann::ordered_json::array();
    for (int s : f.sigma) sigma.push_back(s + 1);
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (auto r : f.rows) rows.push_back(r + 1);
    nlohmann::ordered_json spread = nlohmann::ordered_json::array();
    for (auto v : f.spread.elements()) spread.push_back(space.name(v));
    out.push_back({{"sigma", std::move(sigma)},
                   {"rows", std::move(rows)},
                   {"profile", f.profile.counts()},
                   {"spread", std::move(spread)},
                   {"poly", poly_to_json(f.poly, space)}});
  }
  return out;
}

FocalEvaluator::FocalEvaluator(const std::vector<Focal>& focals) {
  std::map<std::vector<std::uint8_t>, std::size_t> index;
  offsets_.push_back(0);
  bool integral = true;
  for (const auto& f : focals) {
    if (nvars_ == 0) nvars_ = f.poly.nvars();
    if (f.poly.nvars() != nvars_) throw std::invalid_argument("FocalEvaluator: mixed variable counts");
    for (const auto& [mono, c] : f.poly.terms()) {
      const auto e = mono.exponents();
      const auto [it, fresh] = index.try_emplace(std::vector<std::uint8_t>(e.begin(), e.end()), monomials_.size());
      if (fresh) {
        std::vector<std::size_t> vars;
        for (std::size_t v = 0; v < e.size(); ++v) vars.insert(vars.end(), e[v], v);
        monomials_.push_back(std::move(vars));
      }
      term_monomial_.push_back(it->second);
      coeffs_.push_back(c);
      integral = integral && c.get_den() == 1;
    }
    offsets_.push_back(coeffs_.size());
  }
  if (integral) {
    for (const auto& c : coeffs_) int_coeffs_.push_back(c.get_num());
  }
}

template <class Num>
std::vector<Rational> FocalEvaluator::run(const std::vector<Num>& point, const std::vector<Num>& coeffs) const {
  std::vector<Num> mono(monomials_.size());
  for (std::size_t m = 0; m < monomials_.size(); ++m) {
    mono[m] = 1;
    for (auto v : monomials_[m]) mono[m] *= point[v];
  }
  std::vector<Rational> out;
  out.reserve(size());
  Num acc;
  for (std::size_t f = 0; f + 1 < offsets_.size(); ++f) {
    acc = 0;
    for (std::size_t t = offsets_[f]; t < offsets_[f + 1]; ++t) acc += coeffs[t] * mono[term_monomial_[t]];
    out.emplace_back(acc);
  }
  return out;
}

std::vector<Rational> FocalEvaluator::operator()(const std::vector<Rational>& point) const {
  if (point.size() != nvars_ && !coeffs_.empty()) throw std::invalid_argument("FocalEvaluator: point dimension");
  const bool integral =
      !int_coeffs_.empty() && std::all_of(point.begin(), point.end(), [](const Rational& x) { return x.get_den() == 1; });
  if (integral) {
    std::vector<mpz_class> z;
    z.reserve(point.size());
    for (const auto& x : point) z.push_back(x.get_num());
    return run(z, int_coeffs_);
  }
  return run(point, coeffs_);
}

}  // namespace focal
