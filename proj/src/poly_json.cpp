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
#include "focal/poly_json.hpp"

#include <stdexcept>

namespace focal {

nlohmann::ordered_json poly_to_json(const Poly<Rational>& f, const VarSpace& space) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  const auto& terms = f.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    nlohmann::ordered_json exps = nlohmann::ordered_json::object();
    for (std::size_t v = 0; v < f.nvars(); ++v) {
      if (it->first[v] != 0) exps[space.name(v)] = it->first[v];
    }
    out.push_back({{"exponents", std::move(exps)}, {"coeff", to_string(it->second)}});
  }
  return out;
}

Poly<Rational> poly_from_json(const nlohmann::json& j, const VarSpace& space, bool doubled) {
  if (!j.is_array()) throw std::invalid_argument("poly_from_json: expected an array of terms");
  const std::size_t nvars = doubled ? space.doubled_size() : space.affine_size();
  std::vector<Poly<Rational>::Term> terms;
  for (const auto& t : j) {
    Monomial m(nvars);
    for (const auto& [name, e] : t.at("exponents").items()) {
      const auto v = space.parse(name);
      if (!v || *v >= nvars) throw std::invalid_argument("poly_from_json: unknown variable " + name);
      m.set(*v, e.get<unsigned>());
    }
    terms.emplace_back(std::move(m), parse_rational(t.at("coeff").get<std::string>()));
  }
  return Poly<Rational>::from_terms(nvars, std::move(terms));
}

}  // namespace focal
