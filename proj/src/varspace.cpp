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
#include "focal/varspace.hpp"

#include <cctype>
#include <stdexcept>

namespace focal {

VarSpace::VarSpace(int n, bool universal) : n_(n), universal_(universal) {
  if (n < 1) throw std::invalid_argument("VarSpace: n must be positive");
}

std::size_t VarSpace::image(int cam, int coord) const {
  if (cam < 0 || cam >= n_ || coord < 0 || coord > 2) throw std::out_of_range("VarSpace::image");
  return static_cast<std::size_t>(3 * cam + coord);
}

std::size_t VarSpace::camera(int cam, int row, int col) const {
  if (!universal_) throw std::logic_error("VarSpace::camera: multiview space has no camera variables");
  if (cam < 0 || cam >= n_ || row < 0 || row > 2 || col < 0 || col > 3) {
    throw std::out_of_range("VarSpace::camera");
  }
  return static_cast<std::size_t>(3 * n_ + 12 * cam + 4 * row + col);
}

std::size_t VarSpace::partner(std::size_t v) const {
  if (v >= affine_size()) throw std::out_of_range("VarSpace::partner: not an affine variable");
  return affine_size() + v;
}

VarKind VarSpace::kind(std::size_t v) const {
  if (v >= doubled_size()) throw std::out_of_range("VarSpace::kind");
  if (v >= affine_size()) return VarKind::kPartner;
  return v < image_count() ? VarKind::kImage : VarKind::kCamera;
}

int VarSpace::camera_of(std::size_t v) const {
  if (kind(v) == VarKind::kPartner) v -= affine_size();
  if (v < image_count()) return static_cast<int>(v / 3);
  return static_cast<int>((v - image_count()) / 12);
}

int VarSpace::coord_of(std::size_t v) const {
  if (kind(v) == VarKind::kPartner) v -= affine_size();
  if (v < image_count()) return static_cast<int>(v % 3);
  return static_cast<int>(((v - image_count()) % 12) / 4);
}

int VarSpace::column_of(std::size_t v) const {
  if (kind(v) == VarKind::kPartner) v -= affine_size();
  if (v < image_count()) throw std::logic_error("VarSpace::column_of: image variable");
  return static_cast<int>((v - image_count()) % 4);
}

std::string VarSpace::name(std::size_t v) const {
  if (kind(v) == VarKind::kPartner) return name(v - affine_size()) + "h";
  const std::string cam = std::to_string(camera_of(v) + 1);
  const std::string row = std::to_string(coord_of(v) + 1);
  if (v < image_count()) return "x" + cam + row;
  return "a" + cam + row + std::to_string(column_of(v) + 1);
}

std::optional<std::size_t> VarSpace::parse(const std::string& name) const {
  std::string s = name;
  bool partner_var = false;
  if (!s.empty() && s.back() == 'h') {
    partner_var = true;
    s.pop_back();
  }
  if (s.size() < 3) return std::nullopt;
  const char head = s.front();
  std::string digits = s.substr(1);
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
  }
  std::optional<std::size_t> v;
  try {
    if (head == 'x') {
      const int coord = digits.back() - '1';
      const int cam = std::stoi(digits.substr(0, digits.size() - 1)) - 1;
      v = image(cam, coord);
    } else if (head == 'a' && universal_ && digits.size() >= 3) {
      const int col = digits.back() - '1';
      const int row = digits[digits.size() - 2] - '1';
      const int cam = std::stoi(digits.substr(0, digits.size() - 2)) - 1;
      v = camera(cam, row, col);
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (!v) return std::nullopt;
  if (name != this->name(*v) && name != this->name(*v) + "h") return std::nullopt;
  return partner_var ? partner(*v) : *v;
}

}  // namespace focal
