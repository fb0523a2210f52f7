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
#ifndef FOCAL_VARSPACE_HPP_
#define FOCAL_VARSPACE_HPP_

#include <cstddef>
#include <optional>
#include <string>

namespace focal {

enum class VarKind { kImage, kCamera, kPartner };

// Indexing of the variables of a multiview (3n image variables) or universal
// (3n image + 12n camera variables) ring, optionally doubled by one
// homogenizing partner per affine variable. Cameras, image coordinates, and
// camera matrix rows/columns are 0-based in the API; names are 1-based:
//   x_{ij}   -> "x" i j          index 3i + j
//   a_{ijk}  -> "a" i j k        index 3n + 12i + 4j + k
//   partner  -> name + "h"       index N + v
// Since j and k are single digits, names stay unambiguous for any n.
class VarSpace {
 public:
  static VarSpace multiview(int n) { return VarSpace(n, false); }
  static VarSpace universal(int n) { return VarSpace(n, true); }

  int n() const { return n_; }
  bool is_universal() const { return universal_; }

  // N: number of affine variables.
  std::size_t affine_size() const { return static_cast<std::size_t>(universal_ ? 15 * n_ : 3 * n_); }
  std::size_t doubled_size() const { return 2 * affine_size(); }
  std::size_t image_count() const { return static_cast<std::size_t>(3 * n_); }

  std::size_t image(int cam, int coord) const;
  std::size_t camera(int cam, int row, int col) const;
  std::size_t partner(std::size_t v) const;

  VarKind kind(std::size_t v) const;
  // Camera index of an image or camera variable (partners resolve to their
  // affine variable's camera).
  int camera_of(std::size_t v) const;
  // Row j of x_{ij} or a_{ijk}.
  int coord_of(std::size_t v) const;
  // Column k of a_{ijk}.
  int column_of(std::size_t v) const;

  std::string name(std::size_t v) const;
  std::optional<std::size_t> parse(const std::string& name) const;

  bool operator==(const VarSpace&) const = default;

 private:
  VarSpace(int n, bool universal);

  int n_;
  bool universal_;
};

}  // namespace focal

#endif  // FOCAL_VARSPACE_HPP_
