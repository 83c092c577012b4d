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

#ifndef MCONVEX_JSON_IO_HPP_
#define MCONVEX_JSON_IO_HPP_

#include <json.hpp>
#include <string>

#include "mconvex/certification.hpp"
#include "mconvex/constraints.hpp"
#include "mconvex/error.hpp"
#include "mconvex/inference.hpp"
#include "mconvex/mconvexity.hpp"
#include "mconvex/polynomial.hpp"

// JSON schemas shared by the CLI, fixtures and tests. Every index written or
// read here is 1-based.
namespace mconvex::json_io {

using Json = nlohmann::json;

// Parses text; malformed JSON becomes Error(kValidation).
Json parse(const std::string& text);

Json to_json(const LatticePoint& x);
LatticePoint point_from_json(const Json& j);

Json to_json(const SimplexSpec& spec);
SimplexSpec spec_from_json(const Json& j);

// {"type":"rectangle"|"psr"|"explicit", "m", "n", "l", "u" | "points"}
Json to_json(const ConstraintSet& c);
ConstraintSet constraint_from_json(const Json& j);

// {"m", "degree", "terms":[{"exp":[...], "coeff":"p/q"}]}
Json to_json(const HomogeneousPolynomial& f);
HomogeneousPolynomial polynomial_from_json(const Json& j);
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json matrix_to_json(const RationalMatrix& h);

Json to_json(const ExchangeWitness& w);
Json to_json(const MConvexityReport& r);
Json to_json(const ExchangeTheoremReport& r);
Json to_json(const SignatureReport& s);
Json to_json(const LorentzianCertificate& c, bool summary = false);
Json to_json(const StrictCheckResult& r);
Json to_json(const LogConcavitySpotReport& r);
Json to_json(const MleResult& r);

// {"error":{"kind", "message", "index"?}}
Json error_json(const Error& e);
Json error_json(std::string_view kind, const std::string& message);

// Finite doubles as numbers, non-finite as null.
Json number(double v);

}  // namespace mconvex::json_io

#endif  // MCONVEX_JSON_IO_HPP_
