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
#ifndef FOCAL_COMPLEX_HPP_
#define FOCAL_COMPLEX_HPP_

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "focal/focals.hpp"
#include "focal/varset.hpp"
#include "focal/varspace.hpp"

namespace focal {

using FacetSet = std::vector<VarSet>;

// True when x contains none of the nonface generators.
bool is_face(const VarSet& x, const std::vector<VarSet>& nonfaces);

// Drops duplicates and every generator containing another one.
std::vector<VarSet> minimal_nonfaces(std::vector<VarSet> generators);

// Spreads of the given focals, minimalized.
std::vector<VarSet> nonfaces_from_focals(const std::vector<Focal>& focals);

// n(n-1) 3^(n-1) + C(n,3) 3^n.
std::uint64_t delta_n_facet_count(int n);

// Facets of the multiview complex, generated from the two facet profiles
// (3,2,1,...,1) and (2,2,2,1,...,1) over all camera permutations and all
// per-camera variable choices. Sorted. Requires n >= 4.
FacetSet facets_delta_n(int n);

// Maximal subsets of [0, ground_size) containing no nonface generator, by
// depth-first search with pruning. Sorted. Refuses ground_size > 21.
FacetSet facets_bruteforce(const std::vector<VarSet>& nonfaces, std::size_t ground_size);

// Same facets, found as complements of the minimal hitting sets of the
// generators. Needs ground_size <= 64 and scales with the facet
// co-size rather than the number of faces. Sorted.
FacetSet facets_by_hitting_sets(const std::vector<VarSet>& nonfaces, std::size_t ground_size);

// |facets(Delta_n)| * 5^(2n-3): every image variable outside the base
// facet is either absent or present with exactly one of its four camera
// variables removed.
mpz_class delta_tilde_facet_count(int n);

// Streams every facet of the universal complex exactly once: base facet
// U of Delta_n plus all 12n camera variables, then for each absent image
// variable in index order either skip it or adjoin it while removing one
// of a_{ij1..4}. Refused for n > 4 (the n = 4 stream has 2,025,000 facets).
void for_each_delta_tilde_facet(int n, const std::function<void(const VarSet&)>& visit);

// The image variables of a universal face whose four camera variables are
// all present; for a facet these form a facet of Delta_n.
VarSet fully_covered_image_variables(const VarSet& face, const VarSpace& space);

// Applies a camera permutation: x_{ij} -> x_{tau(i) j}, a_{ijk} -> a_{tau(i) jk}.
VarSet permute_cameras(const VarSet& face, const std::vector<int>& tau, const VarSpace& space);

// Canonical representative of the camera-permutation orbit. Faces are
// compared camera by camera on the key (image count, image pattern,
// camera-variable pattern), larger first, where a pattern is read with
// coordinate 1 as the most significant bit; the canonical face is the
// minimum under that comparison. Its profile is sorted descending.
struct CanonicalForm {
  VarSet face;
  std::vector<int> tau;  // camera i of the input goes to position tau[i]
};
CanonicalForm canonical_facet(const VarSet& face, const VarSpace& space);

// The symmetry-reduced representatives: profiles (3,2,1,...,1) and
// (2,2,2,1,...,1) in canonical form, using coordinate 1 for singletons.
VarSet representative_facet_3211(int n);
VarSet representative_facet_2221(int n);

// Union with all 12n camera variables (universal space).
VarSet with_all_camera_variables(const VarSet& image_face, int n);

std::string face_to_string(const VarSet& face, const VarSpace& space);

}  // namespace focal

#endif  // FOCAL_COMPLEX_HPP_
