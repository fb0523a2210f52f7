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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "focal/base_case.hpp"
#include "focal/camera.hpp"
#include "focal/cli.hpp"
#include "focal/complex.hpp"
#include "focal/focals.hpp"
#include "focal/hl_verify.hpp"
#include "focal/matroid.hpp"
#include "focal/random.hpp"

using namespace focal;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;
std::set<int> selected;  // empty: run everything

void criterion(int id, const std::string& name, double budget_seconds, const std::function<Outcome()>& body) {
  if (!selected.empty() && !selected.count(id)) return;
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool in_time = secs < budget_seconds;
  const bool pass = o.pass && in_time;
  if (!pass) ++failures;
  std::printf("%s %2d %s: %s [%.2f s, budget %.0f s%s]\n", pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str(), secs,
              budget_seconds, in_time ? "" : ", over budget");
  std::fflush(stdout);
}

std::uint64_t ipow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

std::uint64_t expected_delta_facets(int n) {
  const std::uint64_t m = static_cast<std::uint64_t>(n);
  return m * (m - 1) * ipow(3, n - 1) + m * (m - 1) * (m - 2) / 6 * ipow(3, n);
}

std::set<std::vector<std::size_t>> as_set(const FacetSet& facets) {
  std::set<std::vector<std::size_t>> out;
  for (const auto& f : facets) out.insert(f.elements());
  return out;
}

// Face test straight from the focal spreads of sampled cameras.
std::vector<VarSet> spread_nonfaces(int n, std::uint64_t seed) {
  return nonfaces_from_focals(enumerate_focals(sample_generic_cameras(n, seed)));
}

std::vector<Rational> joint_image(const CameraConfig& cams, const std::vector<Rational>& q,
                                  const std::vector<Rational>& lambda) {
  std::vector<Rational> x;
  for (int i = 0; i < cams.n; ++i) {
    const auto& a = cams.cameras[static_cast<std::size_t>(i)];
    for (std::size_t j = 0; j < 3; ++j) {
      Rational s = 0;
      for (std::size_t k = 0; k < 4; ++k) s += a(j, k) * q[k];
      x.push_back(lambda[static_cast<std::size_t>(i)] * s);
    }
  }
  return x;
}

Outcome facet_census() {
  const auto facets = facets_delta_n(4);
  const auto space = VarSpace::multiview(4);
  std::size_t wrong_size = 0, t3211 = 0, t2221 = 0;
  for (const auto& f : facets) {
    if (f.size() != 7) ++wrong_size;
    const auto p = profile_of(f, space).sorted_descending();
    if (p == std::vector<int>{3, 2, 1, 1}) ++t3211;
    if (p == std::vector<int>{2, 2, 2, 1}) ++t2221;
  }
  const auto brute = facets_bruteforce(spread_nonfaces(4, 11), 12);
  const bool agree = as_set(brute) == as_set(facets) && brute.size() == facets.size();
  std::ostringstream d;
  d << facets.size() << " facets, " << wrong_size << " not of size 7, " << t3211 << " x (3,2,1,1), " << t2221
    << " x (2,2,2,1), brute force " << brute.size() << (agree ? " (identical)" : " (differs)");
  return {facets.size() == 648 && wrong_size == 0 && t3211 == 324 && t2221 == 324 && agree, d.str()};
}

Outcome closed_form_counts() {
  bool ok = true;
  std::ostringstream d;
  for (int n = 4; n <= 8; ++n) {
    const auto got = facets_delta_n(n).size();
    const auto want = expected_delta_facets(n);
    ok = ok && got == want && delta_n_facet_count(n) == want;
    d << "n=" << n << ":" << got << "/" << want << " ";
  }
  const auto brute = facets_bruteforce(spread_nonfaces(5, 12), 15);
  const bool agree = as_set(brute) == as_set(facets_delta_n(5));
  ok = ok && brute.size() == 4050 && agree;
  d << "brute force n=5: " << brute.size() << (agree ? " (identical)" : " (differs)");
  return {ok, d.str()};
}

Outcome matroid_equivalence() {
  const auto nonfaces = spread_nonfaces(4, 13);
  const auto m = delta_matroid(4);
  std::size_t checked = 0, disagree = 0;
  for (std::uint32_t mask = 0; mask < (1u << 12); ++mask) {
    if (std::popcount(mask) > 7) continue;
    VarSet x(12);
    for (std::size_t v = 0; v < 12; ++v) {
      if ((mask >> v) & 1u) x.insert(v);
    }
    ++checked;
    if (m->independent(x) != is_face(x, nonfaces)) ++disagree;
  }
  std::ostringstream d;
  d << checked << " subsets, " << disagree << " disagreements, rank " << m->full_rank();
  return {checked == 3302 && disagree == 0 && m->full_rank() == 7, d.str()};
}

Outcome minor_witness() {
  const auto space = VarSpace::multiview(4);
  auto names = [&](std::initializer_list<const char*> list) {
    VarSet s(12);
    for (const char* nm : list) s.insert(*space.parse(nm));
    return s;
  };
  const auto minor = matroid_minor(delta_matroid(4), names({"x21", "x31", "x41"}),
                                   names({"x11", "x12", "x22", "x32", "x42"}));
  const auto elems = minor->ground().elements();
  std::size_t indep2 = 0, dep3 = 0;
  for (const auto& c : combinations(static_cast<int>(elems.size()), 2)) {
    if (minor->independent(VarSet::of(12, {elems[static_cast<std::size_t>(c[0])], elems[static_cast<std::size_t>(c[1])]})))
      ++indep2;
  }
  for (const auto& c : combinations(static_cast<int>(elems.size()), 3)) {
    VarSet s(12);
    for (int t : c) s.insert(elems[static_cast<std::size_t>(t)]);
    if (!minor->independent(s)) ++dep3;
  }
  std::ostringstream d;
  d << "ground " << face_to_string(minor->ground(), space) << ", " << indep2 << "/6 pairs independent, " << dep3
    << "/4 triples dependent";
  return {elems.size() == 4 && indep2 == 6 && dep3 == 4, d.str()};
}

Outcome tilde_census() {
  const int n = 4;
  const auto space = VarSpace::universal(n);
  std::unordered_set<std::uint64_t> base;
  for (const auto& f : facets_delta_n(n)) base.insert(f.low_word());
  std::vector<std::uint64_t> keys;
  keys.reserve(2025000);
  std::size_t bad_size = 0, bad_cover = 0;
  for_each_delta_tilde_facet(n, [&](const VarSet& f) {
    keys.push_back(f.low_word());
    if (f.size() != 55) ++bad_size;
    const auto covered = fully_covered_image_variables(f, space);
    if (covered.size() != 7 || !base.count(covered.low_word())) ++bad_cover;
  });
  const std::size_t streamed = keys.size();
  std::sort(keys.begin(), keys.end());
  const std::size_t distinct = static_cast<std::size_t>(std::unique(keys.begin(), keys.end()) - keys.begin());
  std::ostringstream d;
  d << streamed << " streamed, " << distinct << " distinct, " << bad_size << " not of size 55, " << bad_cover
    << " without a covered Delta_4 facet";
  return {streamed == 2025000 && distinct == 2025000 && bad_size == 0 && bad_cover == 0, d.str()};
}

Outcome dominance() {
  bool ok = true;
  std::ostringstream d;
  for (int n = 4; n <= 8; ++n) {
    for (bool universal : {false, true}) {
      const auto report = verify_hl(n, universal, 100 + static_cast<std::uint64_t>(n));
      const std::size_t want = universal ? 13 * static_cast<std::size_t>(n) + 3 : static_cast<std::size_t>(n) + 3;
      bool full = report.checks.size() == 2 && report.prime == kDefaultPrime;
      for (const auto& c : report.checks) full = full && c.facet.size() == want && c.rank == want && c.dominant;
      ok = ok && full;
      if (!full) d << "n=" << n << (universal ? " universal" : " multiview") << " failed; ";
    }
  }
  VerifyOptions opts;
  opts.exhaustive = true;
  const auto all = verify_hl(4, false, 7, opts);
  std::size_t dominant = 0;
  for (const auto& c : all.checks) dominant += c.dominant && c.rank == 7 ? 1 : 0;
  ok = ok && all.checks.size() == 648 && dominant == 648;
  d << "representatives at full rank for n=4..8 in both variants" << (ok ? "" : " (see above)") << "; exhaustive n=4: "
    << dominant << "/" << all.checks.size() << " dominant";
  return {ok, d.str()};
}

Outcome lifting() {
  Rng rng(2026);
  std::size_t lifts = 0, bad_projection = 0, nonzero = 0, resampled = 0, evaluated = 0;
  for (int n = 4; n <= 6; ++n) {
    const auto cams = sample_generic_cameras(n, 300 + static_cast<std::uint64_t>(n));
    for (bool universal : {false, true}) {
      for (const auto& w : {representative_facet_3211(n), representative_facet_2221(n)}) {
        const VarSet facet = universal ? with_all_camera_variables(w, n) : w;
        int done = 0;
        while (done < 100) {
          const Target target = random_target(facet, rng);
          LiftedPoint p;
          try {
            p = universal ? lift_preimage_universal(facet, target, n) : lift_preimage_multiview(facet, target, cams);
          } catch (const DegenerateTarget&) {
            ++resampled;
            if (resampled > 1000) return {false, "too many degenerate targets"};
            continue;
          }
          ++done;
          ++lifts;
          if (project(p.coords, facet) != target) ++bad_projection;
          const auto image = universal ? std::vector<Rational>(p.coords.begin(), p.coords.begin() + 3 * n) : p.coords;
          const auto res = focal_residuals(p.cameras, image);
          evaluated += res.evaluated;
          nonzero += res.nonzero;
        }
      }
    }
  }
  std::ostringstream d;
  d << lifts << " lifts, " << bad_projection << " projection mismatches, " << nonzero << "/" << evaluated
    << " focal values nonzero, " << resampled << " degenerate targets resampled";
  return {lifts == 1200 && bad_projection == 0 && nonzero == 0, d.str()};
}

Outcome base_case() {
  const auto cams = sample_generic_cameras(4, 1);
  BaseCaseOptions opts;
  opts.orders = 20;
  const auto report = base_case_groebner(cams, 1, opts);
  std::size_t affine = 0, homog = 0, squarefree = 0, size19 = 0, count648 = 0, shadow = 0;
  for (const auto& o : report.orders) {
    affine += o.affine.is_groebner;
    homog += o.homogenized.is_groebner;
    squarefree += o.squarefree;
    size19 += o.pure && o.min_facet_size == 19 && o.max_facet_size == 19;
    count648 += o.doubled_facets == 648;
    shadow += o.shadow_matches;
  }
  const std::size_t k = report.orders.size();
  std::ostringstream d;
  d << k << " orders: Groebner " << affine << "/" << homog << " (affine/homogenized), square-free " << squarefree
    << ", facets of size 19 " << size19 << ", 648 facets " << count648 << ", shadow = Delta_4 " << shadow
    << ", matroid bases " << report.matroid_bases;
  const bool ok = k == 20 && affine == k && homog == k && squarefree == k && size19 == k && count648 == k &&
                  shadow == k && report.matroid_bases == 648 && report.all_pass();
  return {ok, d.str()};
}

Outcome vanishing() {
  Rng rng(99);
  std::size_t points = 0, evaluations = 0, nonzero = 0;
  for (int n = 4; n <= 6; ++n) {
    const auto cams = sample_generic_cameras(n, 200 + static_cast<std::uint64_t>(n));
    const FocalEvaluator eval(enumerate_focals(cams));
    for (int s = 0; s < 1000; ++s) {
      std::vector<Rational> q, lambda;
      for (int k = 0; k < 4; ++k) q.emplace_back(static_cast<long>(rng.uniform(-1000, 1000)));
      for (int i = 0; i < n; ++i) {
        long l = 0;
        while (l == 0) l = static_cast<long>(rng.uniform(-1000, 1000));
        lambda.emplace_back(l);
      }
      const auto x = joint_image(cams, q, lambda);
      ++points;
      for (const auto& value : eval(x)) {
        ++evaluations;
        if (!is_zero(value)) ++nonzero;
      }
    }
  }
  std::ostringstream d;
  d << points << " points, " << evaluations << " focal evaluations, " << nonzero << " nonzero";
  return {points == 3000 && nonzero == 0, d.str()};
}

Outcome determinism() {
  const std::vector<std::vector<std::string>> commands = {
      {"cameras", "--n", "6", "--seed", "5"},
      {"focals", "--n", "4", "--seed", "2"},
      {"focals", "--n", "3", "--mode", "symbolic"},
      {"complex", "--n", "5", "--which", "delta", "--facets"},
      {"complex", "--n", "7", "--which", "delta-tilde", "--counts"},
      {"matroid", "--n", "4", "--which", "delta-tilde-rowwise", "--subset", "x11,x12,a111"},
      {"matroid", "--n", "4", "--delete", "x21,x31,x41", "--contract", "x11,x12,x22,x32,x42"},
      {"verify", "--n", "5", "--which", "universal", "--seed", "3"},
      {"verify", "--n", "4", "--which", "multiview", "--seed", "1", "--prime", "2305843009213693951"},
      {"basecase", "--orders", "2", "--seed", "6"},
  };
  std::size_t same = 0;
  std::ostringstream d;
  for (const auto& args : commands) {
    std::ostringstream a, b, ea, eb;
    const int ca = cli::run(args, a, ea);
    const int cb = cli::run(args, b, eb);
    if (ca == 0 && ca == cb && a.str() == b.str() && !a.str().empty()) {
      ++same;
    } else {
      d << args.front() << " differs; ";
    }
  }
  d << same << "/" << commands.size() << " commands byte-identical on rerun";
  return {same == commands.size(), d.str()};
}

}  // namespace

// Optional arguments pick criteria by number, e.g. "acceptance 1 9".
int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));
  criterion(1, "facet census of Delta_4", 1, facet_census);
  criterion(2, "closed-form facet counts", 30, closed_form_counts);
  criterion(3, "matroid equivalence at n=4", 60, matroid_equivalence);
  criterion(4, "U(2,4) minor", 60, minor_witness);
  criterion(5, "universal facet census at n=4", 300, tilde_census);
  criterion(6, "dominance certificates", 120, dominance);
  criterion(7, "preimage lifting", 600, lifting);
  criterion(8, "Groebner base case", 1800, base_case);
  criterion(9, "vanishing on the joint image", 10, vanishing);
  criterion(10, "CLI determinism", 600, determinism);
  std::printf("%s: %d criteria failed\n", failures == 0 ? "ALL PASS" : "FAILURES", failures);
  return failures == 0 ? 0 : 1;
}
