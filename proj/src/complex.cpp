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
#include "focal/complex.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace focal {

bool is_face(const VarSet& x, const std::vector<VarSet>& nonfaces) {
  return std::none_of(nonfaces.begin(), nonfaces.end(), [&](const VarSet& g) { return g.is_subset_of(x); });
}

std::vector<VarSet> minimal_nonfaces(std::vector<VarSet> generators) {
  std::sort(generators.begin(), generators.end(),
            [](const VarSet& a, const VarSet& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  std::vector<VarSet> out;
  for (const auto& g : generators) {
    const bool redundant = std::any_of(out.begin(), out.end(), [&](const VarSet& h) { return h.is_subset_of(g); });
    if (!redundant) out.push_back(g);
  }
  return out;
}

std::vector<VarSet> nonfaces_from_focals(const std::vector<Focal>& focals) {
  std::vector<VarSet> spreads;
  spreads.reserve(focals.size());
  for (const auto& f : focals) spreads.push_back(f.spread);
  return minimal_nonfaces(std::move(spreads));
}

std::uint64_t delta_n_facet_count(int n) {
  if (n < 4) throw std::invalid_argument("Delta_n is defined for n >= 4");
  std::uint64_t p3 = 1;
  for (int i = 0; i < n - 1; ++i) p3 *= 3;
  const auto m = static_cast<std::uint64_t>(n);
  return m * (m - 1) * p3 + binomial(m, 3) * p3 * 3;
}

namespace {

// Coordinate subsets of one camera with the given size, lexicographic.
std::vector<std::vector<int>> coordinate_choices(int size) {
  std::vector<std::vector<int>> out;
  for (const auto& c : combinations(3, size)) out.push_back(c);
  return out;
}

void expand_profile(const std::vector<int>& counts, std::size_t cam, VarSet& cur, FacetSet& out) {
  if (cam == counts.size()) {
    out.push_back(cur);
    return;
  }
  for (const auto& choice : coordinate_choices(counts[cam])) {
    for (int j : choice) cur.insert(3 * cam + static_cast<std::size_t>(j));
    expand_profile(counts, cam + 1, cur, out);
    for (int j : choice) cur.erase(3 * cam + static_cast<std::size_t>(j));
  }
}

}  // namespace

FacetSet facets_delta_n(int n) {
  if (n < 4) throw std::invalid_argument("facets_delta_n: n must be >= 4");
  const auto un = static_cast<std::size_t>(n);
  FacetSet out;
  out.reserve(delta_n_facet_count(n));
  VarSet cur(3 * un);
  for (int three = 0; three < n; ++three) {
    for (int two = 0; two < n; ++two) {
      if (two == three) continue;
      std::vector<int> counts(un, 1);
      counts[static_cast<std::size_t>(three)] = 3;
      counts[static_cast<std::size_t>(two)] = 2;
      expand_profile(counts, 0, cur, out);
    }
  }
  for (const auto& twos : combinations(n, 3)) {
    std::vector<int> counts(un, 1);
    for (int c : twos) counts[static_cast<std::size_t>(c)] = 2;
    expand_profile(counts, 0, cur, out);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FacetSet facets_bruteforce(const std::vector<VarSet>& nonfaces, std::size_t ground_size) {
  if (ground_size > 21) throw std::invalid_argument("facets_bruteforce: ground set larger than 21 elements");
  std::vector<std::uint32_t> gens;
  for (const auto& g : nonfaces) {
    if (g.universe() != ground_size) throw std::invalid_argument("facets_bruteforce: universe mismatch");
    gens.push_back(static_cast<std::uint32_t>(g.low_word()));
  }
  // by_element[e]: generators containing e, so adding e only rechecks those.
  std::vector<std::vector<std::uint32_t>> by_element(ground_size);
  for (auto g : gens) {
    for (std::size_t e = 0; e < ground_size; ++e) {
      if ((g >> e) & 1U) by_element[e].push_back(g);
    }
  }
  auto can_add = [&](std::uint32_t mask, std::size_t e) {
    const std::uint32_t next = mask | (1U << e);
    return std::none_of(by_element[e].begin(), by_element[e].end(),
                        [&](std::uint32_t g) { return (g & ~next) == 0; });
  };
  std::vector<std::uint32_t> found;
  std::function<void(std::size_t, std::uint32_t)> dfs = [&](std::size_t e, std::uint32_t mask) {
    if (e == ground_size) {
      for (std::size_t f = 0; f < ground_size; ++f) {
        if (((mask >> f) & 1U) == 0 && can_add(mask, f)) return;
      }
      found.push_back(mask);
      return;
    }
    if (can_add(mask, e)) dfs(e + 1, mask | (1U << e));
    dfs(e + 1, mask);
  };
  dfs(0, 0);
  FacetSet out;
  out.reserve(found.size());
  for (auto mask : found) {
    VarSet s(ground_size);
    for (std::size_t e = 0; e < ground_size; ++e) {
      if ((mask >> e) & 1U) s.insert(e);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

FacetSet facets_by_hitting_sets(const std::vector<VarSet>& nonfaces, std::size_t ground_size) {
  if (ground_size > 64) throw std::invalid_argument("facets_by_hitting_sets: ground set larger than 64 elements");
  std::vector<std::uint64_t> edges;
  for (const auto& g : nonfaces) {
    if (g.universe() != ground_size) throw std::invalid_argument("facets_by_hitting_sets: universe mismatch");
    if (g.empty()) return {};
    edges.push_back(g.low_word());
  }
  auto hits_all = [&](std::uint64_t s) {
    return std::all_of(edges.begin(), edges.end(), [&](std::uint64_t e) { return (e & s) != 0; });
  };
  std::unordered_set<std::uint64_t> minimal;
  std::unordered_set<std::uint64_t> visited;
  std::function<void(std::uint64_t)> dfs = [&](std::uint64_t s) {
    if (!visited.insert(s).second) return;
    // Every element of s needs a private edge among the edges hit so far,
    // otherwise no extension of s is a minimal hitting set.
    const std::uint64_t* smallest = nullptr;
    int best = 65;
    for (const auto& e : edges) {
      if ((e & s) != 0) continue;
      const int size = std::popcount(e);
      if (size < best) {
        best = size;
        smallest = &e;
      }
    }
    if (smallest == nullptr) {
      for (std::uint64_t bits = s; bits != 0; bits &= bits - 1) {
        const std::uint64_t v = bits & (~bits + 1);
        if (hits_all(s & ~v)) return;
      }
      minimal.insert(s);
      return;
    }
    for (std::uint64_t bits = *smallest; bits != 0; bits &= bits - 1) {
      const std::uint64_t v = bits & (~bits + 1);
      const std::uint64_t next = s | v;
      bool prunable = false;
      for (std::uint64_t rest = s; rest != 0 && !prunable; rest &= rest - 1) {
        const std::uint64_t u = rest & (~rest + 1);
        const bool has_private = std::any_of(edges.begin(), edges.end(), [&](std::uint64_t e) {
          return (e & next) == u;
        });
        prunable = !has_private;
      }
      if (!prunable) dfs(next);
    }
  };
  dfs(0);
  const std::uint64_t all = ground_size == 64 ? ~0ULL : ((1ULL << ground_size) - 1);
  FacetSet out;
  for (auto t : minimal) {
    const std::uint64_t facet = all & ~t;
    VarSet s(ground_size);
    for (std::size_t e = 0; e < ground_size; ++e) {
      if ((facet >> e) & 1ULL) s.insert(e);
    }
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class delta_tilde_facet_count(int n) {
  mpz_class five_pow;
  mpz_ui_pow_ui(five_pow.get_mpz_t(), 5, static_cast<unsigned long>(2 * n - 3));
  return mpz_class(std::to_string(delta_n_facet_count(n))) * five_pow;
}

VarSet with_all_camera_variables(const VarSet& image_face, int n) {
  const auto space = VarSpace::universal(n);
  VarSet out(space.affine_size());
  for (auto v : image_face.elements()) {
    if (v >= space.image_count()) throw std::invalid_argument("with_all_camera_variables: not an image variable");
    out.insert(v);
  }
  for (std::size_t v = space.image_count(); v < space.affine_size(); ++v) out.insert(v);
  return out;
}

void for_each_delta_tilde_facet(int n, const std::function<void(const VarSet&)>& visit) {
  if (n > 4) throw std::invalid_argument("for_each_delta_tilde_facet: materialization refused for n > 4; use counts");
  const auto space = VarSpace::universal(n);
  for (const auto& base : facets_delta_n(n)) {
    VarSet cur = with_all_camera_variables(base, n);
    std::vector<std::size_t> absent;
    for (std::size_t v = 0; v < space.image_count(); ++v) {
      if (!base.contains(v)) absent.push_back(v);
    }
    std::function<void(std::size_t)> step = [&](std::size_t idx) {
      if (idx == absent.size()) {
        visit(cur);
        return;
      }
      step(idx + 1);
      const std::size_t x = absent[idx];
      const int cam = space.camera_of(x);
      const int row = space.coord_of(x);
      cur.insert(x);
      for (int col = 0; col < 4; ++col) {
        const std::size_t a = space.camera(cam, row, col);
        cur.erase(a);
        step(idx + 1);
        cur.insert(a);
      }
      cur.erase(x);
    };
    step(0);
  }
}

VarSet fully_covered_image_variables(const VarSet& face, const VarSpace& space) {
  if (!space.is_universal()) throw std::invalid_argument("fully_covered_image_variables: needs universal space");
  VarSet out(space.image_count());
  for (std::size_t v = 0; v < space.image_count(); ++v) {
    if (!face.contains(v)) continue;
    const int cam = space.camera_of(v);
    const int row = space.coord_of(v);
    bool all = true;
    for (int col = 0; col < 4 && all; ++col) all = face.contains(space.camera(cam, row, col));
    if (all) out.insert(v);
  }
  return out;
}

VarSet permute_cameras(const VarSet& face, const std::vector<int>& tau, const VarSpace& space) {
  if (tau.size() != static_cast<std::size_t>(space.n())) throw std::invalid_argument("permute_cameras: bad permutation");
  VarSet out(face.universe());
  for (auto v : face.elements()) {
    const int cam = tau[static_cast<std::size_t>(space.camera_of(v))];
    if (v < space.image_count()) {
      out.insert(space.image(cam, space.coord_of(v)));
    } else {
      out.insert(space.camera(cam, space.coord_of(v), space.column_of(v)));
    }
  }
  return out;
}

namespace {

// Per-camera key; larger keys are placed first in the canonical form.
std::array<int, 3> camera_key(const VarSet& face, const VarSpace& space, int cam) {
  int count = 0;
  int xpattern = 0;
  for (int j = 0; j < 3; ++j) {
    if (face.contains(space.image(cam, j))) {
      ++count;
      xpattern |= 1 << (2 - j);
    }
  }
  int apattern = 0;
  if (space.is_universal() && face.universe() == space.affine_size()) {
    for (int j = 0; j < 3; ++j) {
      for (int k = 0; k < 4; ++k) {
        if (face.contains(space.camera(cam, j, k))) apattern |= 1 << (11 - (4 * j + k));
      }
    }
  }
  return {count, xpattern, apattern};
}

}  // namespace

CanonicalForm canonical_facet(const VarSet& face, const VarSpace& space) {
  const int n = space.n();
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::array<int, 3>> keys;
  for (int i = 0; i < n; ++i) keys.push_back(camera_key(face, space, i));
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return keys[static_cast<std::size_t>(a)] > keys[static_cast<std::size_t>(b)];
  });
  std::vector<int> tau(static_cast<std::size_t>(n));
  for (int pos = 0; pos < n; ++pos) tau[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] = pos;
  return {permute_cameras(face, tau, space), std::move(tau)};
}

VarSet representative_facet_3211(int n) {
  if (n < 4) throw std::invalid_argument("representative_facet_3211: n must be >= 4");
  const auto space = VarSpace::multiview(n);
  VarSet u(space.image_count());
  for (int j = 0; j < 3; ++j) u.insert(space.image(0, j));
  u.insert(space.image(1, 0));
  u.insert(space.image(1, 1));
  for (int i = 2; i < n; ++i) u.insert(space.image(i, 0));
  return u;
}

VarSet representative_facet_2221(int n) {
  if (n < 4) throw std::invalid_argument("representative_facet_2221: n must be >= 4");
  const auto space = VarSpace::multiview(n);
  VarSet u(space.image_count());
  for (int i = 0; i < 3; ++i) {
    u.insert(space.image(i, 0));
    u.insert(space.image(i, 1));
  }
  for (int i = 3; i < n; ++i) u.insert(space.image(i, 0));
  return u;
}

std::string face_to_string(const VarSet& face, const VarSpace& space) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (auto v : face.elements()) {
    os << (first ? "" : ",") << space.name(v);
    first = false;
  }
  os << "}";
  return os.str();
}

}  // namespace focal
