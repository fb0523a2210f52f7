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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "doctest.h"
#include "focal/cli.hpp"
#include "focal/scalar.hpp"

using focal::cli::run;

namespace {

struct Result {
  int code = -1;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Result r;
  r.code = run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("focal_cli_" + name);
}

}  // namespace

TEST_CASE("usage errors exit with 2") {
  CHECK(call({}).code == focal::cli::kExitUsage);
  CHECK(call({"frobnicate"}).code == focal::cli::kExitUsage);
  CHECK(call({"complex", "--n", "4", "--bogus"}).code == focal::cli::kExitUsage);
  CHECK(call({"complex", "--n", "4", "--which", "delta"}).code == focal::cli::kExitUsage);
  CHECK(call({"complex", "--n", "4", "--which", "delta", "--counts", "--facets"}).code == focal::cli::kExitUsage);
  CHECK(call({"complex", "--n", "4", "--which", "nope", "--counts"}).code == focal::cli::kExitUsage);
  CHECK(call({"complex", "--n", "5", "--which", "delta-tilde", "--facets"}).code == focal::cli::kExitUsage);
  CHECK(call({"complex", "--n", "4", "--which", "delta-tilde", "--facets"}).code == focal::cli::kExitUsage);
  CHECK(call({"focals", "--n", "x"}).code == focal::cli::kExitUsage);
  CHECK(call({"verify", "--n", "4", "--prime", "12"}).code == focal::cli::kExitUsage);
  CHECK(call({"verify", "--n", "4", "--prime", "abc"}).code == focal::cli::kExitUsage);
  CHECK(call({"basecase", "--n", "5", "--orders", "1"}).code == focal::cli::kExitUsage);
  CHECK(call({"matroid", "--n", "4", "--subset", "x99"}).code == focal::cli::kExitUsage);
  const auto r = call({"complex", "--n", "4", "--bogus"});
  CHECK(r.err.find("error") != std::string::npos);
  CHECK(r.err.find("complex") != std::string::npos);
}

TEST_CASE("help exits with 0") {
  const auto r = call({"--help"});
  CHECK(r.code == focal::cli::kExitPass);
  CHECK(r.out.find("basecase") != std::string::npos);
}

TEST_CASE("runtime failures exit with 1") {
  const auto r = call({"complex", "--n", "4", "--which", "delta", "--counts", "--out", "/nonexistent-dir/x/y.txt"});
  CHECK(r.code == focal::cli::kExitFailedVerdict);
}

TEST_CASE("facet counts") {
  auto r = call({"complex", "--n", "4", "--which", "delta", "--counts"});
  CHECK(r.code == 0);
  CHECK(r.out == "648\n");
  r = call({"complex", "--n", "5", "--which", "delta", "--counts"});
  CHECK(r.out == "4050\n");
  r = call({"complex", "--n", "4", "--which", "delta-tilde", "--counts"});
  CHECK(r.out == "2025000\n");
}

TEST_CASE("facets as JSON lines") {
  const auto r = call({"complex", "--n", "4", "--which", "delta", "--facets"});
  REQUIRE(r.code == 0);
  std::istringstream in(r.out);
  std::string line;
  int count = 0;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    CHECK(j.size() == 7);
    ++count;
  }
  CHECK(count == 648);
}

TEST_CASE("focal enumeration") {
  auto r = call({"focals", "--n", "3"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 30);
  CHECK(j["focals"].size() == 30);
  CHECK(j["seed"] == 1);
  r = call({"focals", "--n", "2", "--mode", "symbolic"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["count"] == 1);
}

TEST_CASE("cameras") {
  const auto r = call({"cameras", "--n", "5", "--seed", "9"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("\"seed\": 9") != std::string::npos);
}

TEST_CASE("matroid queries") {
  auto r = call({"matroid", "--n", "4", "--subset", "x11,x12,x13,x21"});
  REQUIRE(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 7);
  CHECK(j["bases"] == 648);
  CHECK(j["query"]["independent"] == true);
  CHECK(j["query"]["matching"]["x21"] == "v2");
  r = call({"matroid", "--n", "4", "--subset", "x11,x12,x13,x21,x22,x23"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["query"]["independent"] == false);
  CHECK(j["query"]["rank"] == 5);
  r = call({"matroid", "--n", "4", "--delete", "x21,x31,x41", "--contract", "x11,x12,x22,x32,x42"});
  REQUIRE(r.code == 0);
  j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 2);
  CHECK(j["bases"] == 6);
  r = call({"matroid", "--n", "4", "--which", "delta-tilde-rowwise"});
  j = nlohmann::json::parse(r.out);
  CHECK(j["rank"] == 55);
}

TEST_CASE("verify") {
  auto r = call({"verify", "--n", "4", "--which", "multiview", "--seed", "1"});
  CHECK(r.code == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["representatives"].size() == 2);
  CHECK(j["prime"] == std::to_string(focal::kDefaultPrime));
  CHECK(j["seed"] == 1);

  const auto file = temp_path("report.json");
  std::filesystem::remove(file);
  r = call({"verify", "--n", "5", "--which", "universal", "--seed", "3", "--exhaustive=false", "--out", file.string()});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  j = nlohmann::json::parse(slurp(file));
  CHECK(j["n"] == 5);
  CHECK(j["which"] == "universal");
  CHECK(j["exhaustive"] == false);
  for (const auto& rep : j["representatives"]) CHECK(rep["rank"] == 68);
  std::filesystem::remove(file);
}

TEST_CASE("prime override") {
  auto r = call({"verify", "--n", "4", "--prime", std::to_string(focal::kCrossCheckPrime)});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["prime"] == std::to_string(focal::kCrossCheckPrime));
  ::setenv("FOCAL_UGB_PRIME", std::to_string(focal::kCrossCheckPrime).c_str(), 1);
  r = call({"verify", "--n", "4"});
  ::unsetenv("FOCAL_UGB_PRIME");
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["prime"] == std::to_string(focal::kCrossCheckPrime));
}

TEST_CASE("basecase") {
  const auto r = call({"basecase", "--orders", "1", "--seed", "4"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["all_pass"] == true);
  CHECK(j["seed"] == 4);
  CHECK(j.contains("prime"));
}

TEST_CASE("reruns are byte-identical") {
  const std::vector<std::vector<std::string>> commands = {
      {"cameras", "--n", "6", "--seed", "5"},
      {"focals", "--n", "4", "--seed", "2"},
      {"focals", "--n", "3", "--mode", "symbolic"},
      {"complex", "--n", "5", "--which", "delta", "--facets"},
      {"complex", "--n", "6", "--which", "delta-tilde", "--counts"},
      {"matroid", "--n", "4", "--which", "delta-tilde", "--subset", "x11,a111"},
      {"verify", "--n", "6", "--which", "universal", "--seed", "8"},
      {"basecase", "--orders", "1", "--seed", "2"},
  };
  for (const auto& args : commands) {
    CAPTURE(args.front());
    const auto a = call(args);
    const auto b = call(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    auto with_out = args;
    const auto file = temp_path("rerun.txt");
    with_out.push_back("--out");
    with_out.push_back(file.string());
    CHECK(call(with_out).code == 0);
    CHECK(slurp(file) == a.out);
    std::filesystem::remove(file);
  }
}
