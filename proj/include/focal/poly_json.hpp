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
#ifndef FOCAL_POLY_JSON_HPP_
#define FOCAL_POLY_JSON_HPP_

#include <nlohmann/json.hpp>

#include "focal/poly.hpp"
#include "focal/varspace.hpp"

namespace focal {

// Polynomial wire format: a list of terms, each
//   {"exponents": {"x11": 1, "a1234": 2, ...}, "coeff": "-3/2"}
// emitted in descending exponent-vector order; keys follow variable index.
nlohmann::ordered_json poly_to_json(const Poly<Rational>& f, const VarSpace& space);
Poly<Rational> poly_from_json(const nlohmann::json& j, const VarSpace& space, bool doubled = false);

}  // namespace focal

#endif  // FOCAL_POLY_JSON_HPP_
