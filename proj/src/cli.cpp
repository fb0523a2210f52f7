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
#include "focal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "focal/base_case.hpp"
#include "focal/camera.hpp"
#include "focal/complex.hpp"
#include "focal/focals.hpp"
#include "focal/hl_verify.hpp"
#include "focal/matroid.hpp"

namespace focal::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  int n = 4;
  std::string mode = "numeric";
  std::string which;
  std::uint64_t seed = 1;
  std::string prime;  // empty: FOCAL_UGB_PRIME or the default
  int orders = 20;
  std::string out;
  bool exhaustive = false;
  bool counts = false;
  bool facets = false;
  bool allow_large = false;
  bool no_chain = false;
  std::string subset;
  std::string minor_delete;
  std::string minor_contract;
};

std::uint64_t resolve_prime(const RunConfig& cfg) {
  if (cfg.prime.empty()) return prime_from_environment();
  std::uint64_t p = 0;
  try {
    std::size_t used = 0;
    p = std::stoull(cfg.prime, &used);
    if (used != cfg.prime.size()) throw std::invalid_argument("trailing characters");
  } catch (const std::exception&) {
    throw UsageError("--prime: not an integer: " + cfg.prime);
  }
  validate_prime(p);
  return p;
}

void emit(const RunConfig& cfg, const std::string& text, std::ostream& out) {
  if (cfg.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open " + cfg.out);
  file << text;
}

std::string dump(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

VarSet parse_names(const std::string& list, const VarSpace& space) {
  VarSet s(space.affine_size());
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
    if (item.empty()) continue;
    const auto v = space.parse(item);
    if (!v || *v >= space.affine_size()) throw UsageError("unknown variable: " + item);
    s.insert(*v);
  }
  return s;
}

nlohmann::ordered_json names_json(const VarSet& s, const VarSpace& space) {
  nlohmann::ordered_json a = nlohmann::ordered_json::array();
  for (auto v : s.elements()) a.push_back(space.name(v));
  return a;
}

int cmd_cameras(const RunConfig& cfg, std::ostream& out) {
  const auto cams = sample_generic_cameras(cfg.n, cfg.seed);
  emit(cfg, dump(cameras_to_json(cams)), out);
  return cams.certificate.generic ? kExitPass : kExitFailedVerdict;
}

int cmd_focals(const RunConfig& cfg, std::ostream& out) {
  nlohmann::ordered_json j;
  j["n"] = cfg.n;
  j["mode"] = cfg.mode;
  std::vector<Focal> focals;
  VarSpace space = VarSpace::multiview(cfg.n);
  if (cfg.mode == "numeric") {
    const auto cams = sample_generic_cameras(cfg.n, cfg.seed);
    j["seed"] = cfg.seed;
    j["cameras"] = cameras_to_json(cams);
    focals = enumerate_focals(cams);
  } else {
    space = VarSpace::universal(cfg.n);
    focals = enumerate_focals_symbolic(cfg.n);
  }
  j["count"] = focals.size();
  j["expected_count"] = expected_focal_count(cfg.n);
  j["focals"] = focals_to_json(focals, space);
  emit(cfg, dump(j), out);
  return focals.size() == expected_focal_count(cfg.n) ? kExitPass : kExitFailedVerdict;
}

int cmd_complex(const RunConfig& cfg, std::ostream& out) {
  const bool tilde = cfg.which == "delta-tilde";
  if (cfg.counts == cfg.facets) throw UsageError("complex: pass exactly one of --counts, --facets");
  if (cfg.counts) {
    if (tilde) {
      emit(cfg, delta_tilde_facet_count(cfg.n).get_str() + "\n", out);
    } else {
      emit(cfg, std::to_string(delta_n_facet_count(cfg.n)) + "\n", out);
    }
    return kExitPass;
  }
  std::ostringstream lines;
  if (!tilde) {
    const auto space = VarSpace::multiview(cfg.n);
    for (const auto& f : facets_delta_n(cfg.n)) lines << names_json(f, space).dump() << "\n";
  } else {
    if (cfg.n > 4) throw UsageError("complex: universal facets are only materialized for n = 4; use --counts");
    if (!cfg.allow_large) throw UsageError("complex: universal facets at n = 4 need --allow-large (2,025,000 lines)");
    const auto space = VarSpace::universal(cfg.n);
    for_each_delta_tilde_facet(cfg.n, [&](const VarSet& f) { lines << names_json(f, space).dump() << "\n"; });
  }
  emit(cfg, lines.str(), out);
  return kExitPass;
}

int cmd_matroid(const RunConfig& cfg, std::ostream& out) {
  std::shared_ptr<const UnionMatroid> base;
  VarSpace space = VarSpace::multiview(cfg.n);
  if (cfg.which == "delta") {
    base = delta_matroid(cfg.n);
  } else {
    space = VarSpace::universal(cfg.n);
    base = cfg.which == "delta-tilde" ? delta_tilde_matroid(cfg.n) : delta_tilde_matroid_rowwise(cfg.n);
  }
  MatroidPtr m = base;
  nlohmann::ordered_json j;
  j["n"] = cfg.n;
  j["which"] = cfg.which;
  const bool minor = !cfg.minor_delete.empty() || !cfg.minor_contract.empty();
  if (minor) {
    const auto del = parse_names(cfg.minor_delete, space);
    const auto con = parse_names(cfg.minor_contract, space);
    m = matroid_minor(base, del, con);
    j["delete"] = names_json(del, space);
    j["contract"] = names_json(con, space);
  }
  j["ground"] = names_json(m->ground(), space);
  j["rank"] = m->full_rank();
  if (m->ground().size() <= 20) j["bases"] = count_bases(*m);
  if (!cfg.subset.empty()) {
    const auto x = parse_names(cfg.subset, space);
    nlohmann::ordered_json q;
    q["subset"] = names_json(x, space);
    q["independent"] = m->independent(x);
    q["rank"] = m->rank(x);
    if (!minor) {
      const auto w = matching_witness(*base->transversal_presentation(), x);
      if (w) {
        nlohmann::ordered_json mj;
        for (const auto& [v, label] : *w) mj[space.name(v)] = label;
        q["matching"] = mj;
      }
    }
    j["query"] = q;
  }
  emit(cfg, dump(j), out);
  return kExitPass;
}

int cmd_verify(const RunConfig& cfg, std::ostream& out) {
  VerifyOptions opts;
  opts.exhaustive = cfg.exhaustive;
  opts.prime = resolve_prime(cfg);
  const auto report = verify_hl(cfg.n, cfg.which == "universal", cfg.seed, opts);
  emit(cfg, dump(report.to_json()), out);
  return report.all_pass() ? kExitPass : kExitFailedVerdict;
}

int cmd_basecase(const RunConfig& cfg, std::ostream& out) {
  BaseCaseOptions opts;
  opts.orders = cfg.orders;
  opts.prime = resolve_prime(cfg);
  opts.chain_criterion = !cfg.no_chain;
  const auto report = base_case_groebner(sample_generic_cameras(cfg.n, cfg.seed), cfg.seed, opts);
  emit(cfg, dump(report.to_json()), out);
  return report.all_pass() ? kExitPass : kExitFailedVerdict;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Focal polynomials, multiview complexes and universal Groebner basis checks", "focal"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_n = [&](CLI::App* s, bool required) {
    auto* o = s->add_option("--n", cfg.n, "number of cameras")->check(CLI::Range(2, 64));
    if (required) o->required();
  };
  auto add_seed = [&](CLI::App* s) { s->add_option("--seed", cfg.seed, "RNG seed")->capture_default_str(); };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", cfg.out, "output file (default: stdout)"); };
  auto add_prime = [&](CLI::App* s) {
    s->add_option("--prime", cfg.prime, "prime for F_p computations (default: FOCAL_UGB_PRIME or 2^62-57)");
  };

  auto* cameras = app.add_subcommand("cameras", "sample generic integer cameras");
  add_n(cameras, true);
  add_seed(cameras);
  add_out(cameras);

  auto* focals = app.add_subcommand("focals", "enumerate 2-, 3- and 4-focals");
  add_n(focals, true);
  focals->add_option("--mode", cfg.mode, "numeric or symbolic")
      ->check(CLI::IsMember({"numeric", "symbolic"}))
      ->capture_default_str();
  add_seed(focals);
  add_out(focals);

  auto* complex = app.add_subcommand("complex", "facets of Delta_n or its universal analog");
  add_n(complex, true);
  cfg.which = "delta";
  complex->add_option("--which", cfg.which, "delta or delta-tilde")->check(CLI::IsMember({"delta", "delta-tilde"}));
  complex->add_flag("--counts", cfg.counts, "print the facet count");
  complex->add_flag("--facets", cfg.facets, "write facets as JSON lines");
  complex->add_flag("--allow-large", cfg.allow_large, "allow the 2,025,000 universal facets at n = 4");
  add_out(complex);

  auto* matroid = app.add_subcommand("matroid", "transversal matroid oracles");
  add_n(matroid, true);
  matroid->add_option("--which", cfg.which, "delta, delta-tilde or delta-tilde-rowwise")
      ->check(CLI::IsMember({"delta", "delta-tilde", "delta-tilde-rowwise"}));
  matroid->add_option("--subset", cfg.subset, "comma-separated variable names to test");
  matroid->add_option("--delete", cfg.minor_delete, "comma-separated variables to delete");
  matroid->add_option("--contract", cfg.minor_contract, "comma-separated variables to contract");
  add_out(matroid);

  auto* verify = app.add_subcommand("verify", "dominance and lifting checks on facets");
  add_n(verify, true);
  verify->add_option("--which", cfg.which, "multiview or universal")
      ->check(CLI::IsMember({"multiview", "universal"}));
  verify->add_flag("--exhaustive", cfg.exhaustive, "check every facet instead of the representatives");
  add_seed(verify);
  add_prime(verify);
  add_out(verify);

  auto* basecase = app.add_subcommand("basecase", "Groebner base case at n = 4");
  add_n(basecase, false);
  basecase->add_option("--orders", cfg.orders, "number of sampled term orders")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  basecase->add_flag("--no-chain", cfg.no_chain, "disable the chain criterion");
  add_seed(basecase);
  add_prime(basecase);
  add_out(basecase);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (cfg.which.empty()) {
    if (verify->parsed()) cfg.which = "multiview";
    if (matroid->parsed()) cfg.which = "delta";
  }

  try {
    if (cameras->parsed()) return cmd_cameras(cfg, out);
    if (focals->parsed()) return cmd_focals(cfg, out);
    if (complex->parsed()) return cmd_complex(cfg, out);
    if (matroid->parsed()) return cmd_matroid(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
    if (basecase->parsed()) return cmd_basecase(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailedVerdict;
  }
  return kExitUsage;
}

}  // namespace focal::cli
