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
#include <algorithm>
#include <vector>

#include "doctest.h"
#include "focal/base_case.hpp"
#include "focal/complex.hpp"
#include "focal/focals.hpp"
#include "focal/groebner.hpp"
#include "focal/homogenize.hpp"
#include "focal/hl_verify.hpp"
#include "focal/matroid.hpp"
#include "focal/random.hpp"

using namespace focal;

namespace {

const std::uint64_t kP = kDefaultPrime;

std::vector<ModP> random_params(const Parametrization& p, Rng& rng) {
  std::vector<ModP> out;
  for (std::size_t t = 0; t < p.parameter_count(); ++t) out.push_back(ModP::from_residue(rng.below(kP), kP));
  return out;
}

VarSet random_subset(std::size_t universe, std::size_t max_size, Rng& rng) {
  std::vector<std::size_t> all(universe);
  for (std::size_t v = 0; v < universe; ++v) all[v] = v;
  rng.shuffle(all);
  const auto k = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(max_size)));
  VarSet s(universe);
  for (std::size_t i = 0; i < k; ++i) s.insert(all[i]);
  return s;
}

// Both polynomial evaluation of the enumerated focals and the numeric
// determinant route must vanish.
void check_on_variety(const LiftedPoint& p, const std::vector<Focal>* focals) {
  const auto res = focal_residuals(p.cameras, p.coords);
  CHECK(res.nonzero == 0);
  CHECK(res.evaluated == expected_focal_count(static_cast<int>(p.cameras.size())));
  if (focals != nullptr) {
    for (const auto& f : *focals) CHECK(is_zero(f.poly.evaluate(p.coords)));
  }
}

}  // namespace

TEST_CASE("parametrization sizes") {
  const auto mv = Parametrization::multiview(sample_generic_cameras(4, 1));
  CHECK(mv.parameter_count() == 8);
  CHECK(mv.expected_dimension() == 7);
  const auto uv = Parametrization::universal(4);
  CHECK(uv.parameter_count() == 56);
  CHECK(uv.expected_dimension() == 55);
}

TEST_CASE("Jacobian matches exact forward differences") {
  // Every coordinate is affine-linear in each single parameter, so
  // f(p + e_l) - f(p) is the l-th partial derivative exactly.
  Rng rng(3);
  for (const auto& p : {Parametrization::multiview(sample_generic_cameras(4, 2)), Parametrization::universal(4)}) {
    const auto params = random_params(p, rng);
    const auto jac = p.jacobian(params);
    const auto base = p.evaluate(params);
    for (std::size_t l = 0; l < p.parameter_count(); ++l) {
      auto shifted = params;
      shifted[l] += ModP(1, kP);
      const auto moved = p.evaluate(shifted);
      for (std::size_t r = 0; r < base.size(); ++r) CHECK(jac(r, l) == moved[r] - base[r]);
    }
  }
}

TEST_CASE("full Jacobian ranks match the matroid ranks") {
  for (int n = 4; n <= 6; ++n) {
    const auto cams = sample_generic_cameras(n, static_cast<std::uint64_t>(n));
    CHECK(full_jacobian_rank(Parametrization::multiview(cams), 9) == static_cast<std::size_t>(n + 3));
    CHECK(full_jacobian_rank(Parametrization::universal(n), 9) == static_cast<std::size_t>(13 * n + 3));
    CHECK(delta_matroid(n)->full_rank() == static_cast<std::size_t>(n + 3));
  }
}

TEST_CASE("dominance certificates") {
  const int n = 4;
  const auto cams = sample_generic_cameras(n, 5);
  const auto p = Parametrization::multiview(cams);
  const auto facet = representative_facet_3211(n);
  const auto cert = jacobian_dominance(p, facet, 1);
  CHECK(cert.verdict);
  CHECK(cert.rank == 7);
  CHECK(cert.points.size() == 1);
  CHECK(cert.prime == kDefaultPrime);

  const auto two_focal = enumerate_focals(cams).front();
  REQUIRE(two_focal.k() == 2);
  const auto bad = jacobian_dominance(p, two_focal.spread, 1);
  CHECK_FALSE(bad.verdict);
  CHECK(bad.rank < 6);
  CHECK(bad.points.size() == 2);
  CHECK(bad.ranks.size() == 2);

  const auto empty = jacobian_dominance(p, VarSet(12), 1);
  CHECK(empty.verdict);
  CHECK(empty.rank == 0);

  CHECK(jacobian_dominance(p, facet, 1, kCrossCheckPrime).verdict);
  CHECK_THROWS(jacobian_dominance(p, facet, 1, 1000003));
  CHECK_THROWS(jacobian_dominance(p, VarSet(13), 1));
}

TEST_CASE("dominance agrees with matroid independence on 500 subsets") {
  const int n = 4;
  const auto p = Parametrization::multiview(sample_generic_cameras(n, 8));
  const auto m = delta_matroid(n);
  Rng rng(99);
  int independent = 0;
  for (int t = 0; t < 500; ++t) {
    const VarSet x = random_subset(12, 7, rng);
    const bool ind = m->independent(x);
    independent += ind ? 1 : 0;
    CHECK(jacobian_dominance(p, x, rng.fork()).verdict == ind);
  }
  CHECK(independent > 50);
  CHECK(independent < 490);
}

TEST_CASE("universal dominance agrees with the row-wise matroid") {
  const int n = 4;
  const auto p = Parametrization::universal(n);
  const auto rowwise = delta_tilde_matroid_rowwise(n);
  const auto block = delta_tilde_matroid(n);
  const auto facets = facets_delta_n(n);
  const auto space = VarSpace::universal(n);
  Rng rng(7);
  for (int t = 0; t < 200; ++t) {
    VarSet x = with_all_camera_variables(facets[rng.below(facets.size())], n);
    for (int s = 0; s < 3; ++s) {
      const auto v = rng.below(space.affine_size());
      if (x.contains(v)) x.erase(v);
      else x.insert(v);
    }
    CHECK(jacobian_dominance(p, x, rng.fork()).verdict == rowwise->independent(x));
  }
  // 3- and 4-focal spreads: independent in the block union, algebraically dependent.
  std::size_t spreads = 0;
  for (const auto& f : enumerate_focals_symbolic(n)) {
    if (f.k() < 3) continue;
    ++spreads;
    CHECK(block->independent(f.spread));
    CHECK_FALSE(rowwise->independent(f.spread));
    CHECK_FALSE(jacobian_dominance(p, f.spread, rng.fork()).verdict);
  }
  CHECK(spreads == 189);
}

TEST_CASE("multiview lifting is exact") {
  Rng rng(123);
  for (int n = 4; n <= 6; ++n) {
    const auto cams = sample_generic_cameras(n, 40 + static_cast<std::uint64_t>(n));
    const auto focals = enumerate_focals(cams);
    for (const auto& facet : {representative_facet_3211(n), representative_facet_2221(n)}) {
      for (int t = 0; t < 5; ++t) {
        const Target target = random_target(facet, rng);
        const LiftedPoint p = lift_preimage_multiview(facet, target, cams);
        CHECK(project(p.coords, facet) == target);
        check_on_variety(p, n <= 5 ? &focals : nullptr);
      }
    }
  }
}

TEST_CASE("every Delta_4 facet lifts") {
  const auto cams = sample_generic_cameras(4, 3);
  const auto focals = enumerate_focals(cams);
  Rng rng(4);
  for (const auto& facet : facets_delta_n(4)) {
    const Target target = random_target(facet, rng);
    const LiftedPoint p = lift_preimage_multiview(facet, target, cams);
    CHECK(project(p.coords, facet) == target);
    for (const auto& f : focals) CHECK(is_zero(f.poly.evaluate(p.coords)));
  }
}

TEST_CASE("lifting respects the cone structure") {
  const int n = 5;
  const auto cams = sample_generic_cameras(n, 6);
  const auto space = VarSpace::multiview(n);
  const auto facet = representative_facet_3211(n);
  Rng rng(8);
  const Target target = random_target(facet, rng);
  const LiftedPoint p = lift_preimage_multiview(facet, target, cams);
  const auto elems = facet.elements();
  for (int cam = 0; cam < n; ++cam) {
    Target scaled = target;
    const Rational s(7, 3);
    for (std::size_t t = 0; t < elems.size(); ++t) {
      if (space.camera_of(elems[t]) == cam) scaled[t] *= s;
    }
    const LiftedPoint ps = lift_preimage_multiview(facet, scaled, cams);
    for (std::size_t v = 0; v < space.affine_size(); ++v) {
      const bool in_cam = space.camera_of(v) == cam;
      CHECK(ps.coords[v] == (in_cam ? Rational(p.coords[v] * s) : p.coords[v]));
    }
  }
}

TEST_CASE("degenerate targets are rejected") {
  const auto cams = sample_generic_cameras(4, 6);
  const auto facet = representative_facet_3211(4);
  Target target(facet.size(), Rational(1));
  target[0] = 0;
  CHECK_THROWS_AS(lift_preimage_multiview(facet, target, cams), DegenerateTarget);
  // A facet-sized set that is not a facet has no single-coordinate camera.
  const auto space = VarSpace::multiview(5);
  VarSet not_facet(15);
  for (int i = 0; i < 4; ++i) {
    not_facet.insert(space.image(i, 0));
    not_facet.insert(space.image(i, 1));
  }
  CHECK_THROWS(lift_preimage_multiview(not_facet, Target(8, Rational(1)), sample_generic_cameras(5, 1)));
}

TEST_CASE("universal lifting reuses the target cameras") {
  Rng rng(55);
  for (int n = 4; n <= 6; ++n) {
    const auto space = VarSpace::universal(n);
    for (const auto& w : {representative_facet_3211(n), representative_facet_2221(n)}) {
      const VarSet facet = with_all_camera_variables(w, n);
      const Target target = random_target(facet, rng);
      const LiftedPoint p = lift_preimage_universal(facet, target, n);
      CHECK(project(p.coords, facet) == target);
      check_on_variety(p, nullptr);
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < 3; ++j) {
          for (int k = 0; k < 4; ++k) {
            CHECK(p.cameras[static_cast<std::size_t>(i)](static_cast<std::size_t>(j), static_cast<std::size_t>(k)) ==
                  p.coords[space.camera(i, j, k)]);
          }
        }
      }
    }
  }
  CHECK_THROWS(lift_preimage_universal(with_all_camera_variables(representative_facet_3211(4), 4) - VarSet::of(60, {59}),
                                       Target(54, Rational(1)), 4));
}

TEST_CASE("scaling the last image factor scales only that factor") {
  const int n = 5;
  const auto space = VarSpace::universal(n);
  const VarSet facet = with_all_camera_variables(representative_facet_2221(n), n);
  Rng rng(2);
  const Target target = random_target(facet, rng);
  const LiftedPoint p = lift_preimage_universal(facet, target, n);
  Target scaled = target;
  const auto elems = facet.elements();
  for (std::size_t t = 0; t < elems.size(); ++t) {
    if (space.kind(elems[t]) == VarKind::kImage && space.camera_of(elems[t]) == n - 1) scaled[t] *= 5;
  }
  const LiftedPoint ps = lift_preimage_universal(facet, scaled, n);
  for (std::size_t v = 0; v < space.affine_size(); ++v) {
    const bool last_image = space.kind(v) == VarKind::kImage && space.camera_of(v) == n - 1;
    CHECK(ps.coords[v] == (last_image ? Rational(p.coords[v] * 5) : p.coords[v]));
  }
}

TEST_CASE("camera entry update reproduces the target coordinate") {
  const int n = 4;
  const auto space = VarSpace::universal(n);
  Rng rng(17);
  const VarSet base = with_all_camera_variables(representative_facet_3211(n), n);
  LiftedPoint p = lift_preimage_universal(base, random_target(base, rng), n);
  const LiftedPoint before = p;
  // x_{42} is absent from the base facet; drop a_{423} and hit a new value.
  const Rational value(-17, 5);
  apply_camera_change(p, space, 3, 1, 2, value);
  CHECK(p.coords[space.image(3, 1)] == value);
  // Independent evaluation of the update formula.
  const Rational expected_entry =
      (before.cameras[3](1, 2) * before.q[2] + (value - before.coords[space.image(3, 1)]) / before.lambda[3]) /
      before.q[2];
  CHECK(p.cameras[3](1, 2) == expected_entry);
  for (std::size_t v = 0; v < space.affine_size(); ++v) {
    if (v == space.image(3, 1) || v == space.camera(3, 1, 2)) continue;
    CHECK(p.coords[v] == before.coords[v]);
  }
  check_on_variety(p, nullptr);
}

TEST_CASE("arbitrary universal facets lift through camera changes") {
  const int n = 4;
  Rng pick(31);
  Rng rng(32);
  int lifted = 0;
  for_each_delta_tilde_facet(n, [&](const VarSet& facet) {
    if (pick.uniform(0, 19999) != 0) return;
    const Target target = random_target(facet, rng);
    const LiftedPoint p = lift_preimage_universal_any(facet, target, n, rng);
    CHECK(project(p.coords, facet) == target);
    check_on_variety(p, nullptr);
    ++lifted;
  });
  CHECK(lifted > 50);
}

TEST_CASE("verify_hl on representatives") {
  const auto mv = verify_hl(4, false, 1);
  CHECK(mv.checks.size() == 2);
  CHECK(mv.all_pass());
  for (const auto& c : mv.checks) CHECK(c.rank == 7);
  const auto uv = verify_hl(6, true, 3);
  CHECK(uv.checks.size() == 2);
  CHECK(uv.all_pass());
  for (const auto& c : uv.checks) {
    CHECK(c.rank == 81);
    CHECK(c.facet.size() == 81);
  }
  CHECK(verify_hl(5, true, 3).to_json().dump() == verify_hl(5, true, 3).to_json().dump());
  CHECK_THROWS(verify_hl(3, false, 1));
  CHECK(facets_to_check(4, false, true).size() == 648);
  CHECK(facets_to_check(4, true, false).front().size() == 55);
}

TEST_CASE("homogenized 2-focal initial monomials") {
  const auto cams = sample_generic_cameras(4, 12);
  const auto two = enumerate_focals(cams).front();
  const auto fh = multihomogenize(two.poly.map_coefficients([](const Rational& c) { return ModP::from_rational(c, kP); }));
  Rng rng(1);
  for (int t = 0; t < 20; ++t) {
    const auto ord = TermOrder::product_extension(TermOrder::sample(12, rng), rng);
    const auto init = initial_monomial(fh, ord);
    CHECK(init.degree() == 6);
    CHECK(init.is_squarefree());
  }
}

TEST_CASE("base case on two orders") {
  const auto cams = sample_generic_cameras(4, 1);
  BaseCaseOptions opts;
  opts.orders = 2;
  const auto report = base_case_groebner(cams, 5, opts);
  CHECK(report.all_pass());
  CHECK(report.focal_count == 195);
  CHECK(report.matroid_bases == 648);
  REQUIRE(report.orders.size() == 2);
  for (const auto& o : report.orders) {
    CHECK(o.affine.is_groebner);
    CHECK(o.homogenized.is_groebner);
    CHECK(o.squarefree);
    CHECK(o.pure);
    CHECK(o.min_facet_size == 19);
    CHECK(o.doubled_facets == 648);
    CHECK(o.shadow_matches);
    // The recorded seed replays the order.
    Rng rng(o.seed);
    CHECK(TermOrder::sample(12, rng).weights() == o.weights);
  }
  CHECK(report.to_json().dump() == base_case_groebner(cams, 5, opts).to_json().dump());
  CHECK_THROWS(base_case_groebner(sample_generic_cameras(3, 1), 5, opts));
}
