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
#include "focal/base_case.hpp"

#include <algorithm>
#include <stdexcept>

#include "focal/complex.hpp"
#include "focal/focals.hpp"
#include "focal/groebner.hpp"
#include "focal/homogenize.hpp"
#include "focal/matroid.hpp"
#include "focal/random.hpp"
#include "focal/varspace.hpp"

namespace focal {

namespace {

GroebnerStats run_check(const std::vector<Poly<ModP>>& g, const TermOrder& ord, bool chain, const VarSpace& space,
                        bool doubled) {
  GroebnerCheckOptions opts;
  opts.chain_criterion = chain;
  const auto r = buchberger_report(g, ord, opts);
  GroebnerStats s;
  s.is_groebner = r.is_groebner;
  s.pairs = r.pairs;
  s.coprime_skipped = r.coprime_skipped;
  s.chain_skipped = r.chain_skipped;
  s.reduced_to_zero = r.reduced_to_zero;
  s.failing_pair = r.failing_pair;
  if (r.remainder) {
    const std::size_t n_aff = space.affine_size();
    s.remainder = r.remainder->to_string([&](std::size_t v) {
      return doubled || v < n_aff ? space.name(v) : std::to_string(v);
    });
  }
  return s;
}

nlohmann::ordered_json stats_json(const GroebnerStats& s) {
  nlohmann::ordered_json j;
  j["groebner"] = s.is_groebner;
  j["pairs"] = s.pairs;
  j["coprime_skipped"] = s.coprime_skipped;
  j["chain_skipped"] = s.chain_skipped;
  j["reduced_to_zero"] = s.reduced_to_zero;
  if (s.failing_pair) {
    j["failing_pair"] = {s.failing_pair->first, s.failing_pair->second};
    j["remainder"] = s.remainder;
  }
  return j;
}

}  // namespace

bool OrderCheck::verdict(std::size_t expected_facets) const {
  return affine.is_groebner && homogenized.is_groebner && squarefree && supports_in_spread && pure &&
         shadow_matches && doubled_facets == expected_facets;
}

bool BaseCaseReport::all_pass() const {
  if (orders.empty() || matroid_bases != delta_facets) return false;
  return std::all_of(orders.begin(), orders.end(), [&](const OrderCheck& o) { return o.verdict(delta_facets); });
}

BaseCaseReport base_case_groebner(const CameraConfig& cameras, std::uint64_t seed, const BaseCaseOptions& options) {
  const int n = cameras.n;
  if (n != 4) throw std::invalid_argument("base_case_groebner: only n = 4 is supported");
  if (!cameras.certificate.generic) throw std::invalid_argument("base_case_groebner: cameras are not generic");
  if (options.orders < 1) throw std::invalid_argument("base_case_groebner: need at least one order");
  validate_prime(options.prime);
  const auto space = VarSpace::multiview(n);
  const std::size_t big_n = space.affine_size();
  const std::uint64_t p = options.prime;

  BaseCaseReport report;
  report.n = n;
  report.seed = seed;
  report.prime = p;
  report.cameras = cameras;
  const auto focals = enumerate_focals(cameras);
  report.focal_count = focals.size();
  const auto delta = facets_delta_n(n);
  report.delta_facets = delta.size();
  report.matroid_bases = count_bases(*delta_matroid(n));

  std::vector<Poly<ModP>> affine;
  std::vector<Poly<ModP>> homogenized;
  for (const auto& f : focals) {
    affine.push_back(f.poly.map_coefficients([p](const Rational& c) { return ModP::from_rational(c, p); }));
    homogenized.push_back(multihomogenize(affine.back()));
  }

  Rng master(seed);
  for (int o = 0; o < options.orders; ++o) {
    OrderCheck check;
    check.seed = master.fork();
    Rng rng(check.seed);
    const TermOrder ord = TermOrder::sample(big_n, rng);
    const TermOrder ext = TermOrder::product_extension(ord, rng);
    check.weights = ord.weights();
    check.tiebreak = ord.tiebreak();

    std::vector<VarSet> init_supports;
    check.squarefree = true;
    check.supports_in_spread = true;
    for (std::size_t i = 0; i < homogenized.size(); ++i) {
      const Monomial init = initial_monomial(homogenized[i], ext);
      check.squarefree = check.squarefree && init.is_squarefree();
      VarSet s(2 * big_n);
      for (auto v : init.support()) {
        s.insert(v);
        if (v < big_n && !focals[i].spread.contains(v)) check.supports_in_spread = false;
      }
      init_supports.push_back(std::move(s));
    }

    check.affine = run_check(affine, ord, options.chain_criterion, space, false);
    check.homogenized = run_check(homogenized, ext, options.chain_criterion, space, true);

    const auto doubled = facets_by_hitting_sets(minimal_nonfaces(init_supports), 2 * big_n);
    check.doubled_facets = doubled.size();
    check.min_facet_size = doubled.empty() ? 0 : doubled.front().size();
    check.max_facet_size = check.min_facet_size;
    std::vector<VarSet> shadows;
    for (const auto& f : doubled) {
      check.min_facet_size = std::min(check.min_facet_size, f.size());
      check.max_facet_size = std::max(check.max_facet_size, f.size());
      VarSet shadow(big_n);
      for (std::size_t v = 0; v < big_n; ++v) {
        if (f.contains(v) && f.contains(v + big_n)) shadow.insert(v);
      }
      shadows.push_back(std::move(shadow));
    }
    const std::size_t want = big_n + static_cast<std::size_t>(n) + 3;
    check.pure = !doubled.empty() && check.min_facet_size == want && check.max_facet_size == want;
    std::sort(shadows.begin(), shadows.end());
    check.shadow_matches = shadows == delta;
    report.orders.push_back(std::move(check));
  }
  return report;
}

nlohmann::ordered_json BaseCaseReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["seed"] = seed;
  j["prime"] = std::to_string(prime);
  j["cameras"] = cameras_to_json(cameras);
  j["focals"] = focal_count;
  j["delta_facets"] = delta_facets;
  j["matroid_bases"] = matroid_bases;
  nlohmann::ordered_json list = nlohmann::ordered_json::array();
  for (const auto& o : orders) {
    nlohmann::ordered_json e;
    e["seed"] = o.seed;
    e["weights"] = o.weights;
    e["tiebreak"] = o.tiebreak;
    e["affine"] = stats_json(o.affine);
    e["homogenized"] = stats_json(o.homogenized);
    e["squarefree_initials"] = o.squarefree;
    e["initial_supports_in_spreads"] = o.supports_in_spread;
    e["doubled_facets"] = o.doubled_facets;
    e["doubled_facet_size"] = {o.min_facet_size, o.max_facet_size};
    e["pure"] = o.pure;
    e["shadow_matches_delta"] = o.shadow_matches;
    e["verdict"] = o.verdict(delta_facets);
    list.push_back(e);
  }
  j["orders"] = list;
  j["all_pass"] = all_pass();
  return j;
}

}  // namespace focal
