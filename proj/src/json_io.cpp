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

#include "mconvex/json_io.hpp"

#include <cmath>

namespace mconvex::json_io {

namespace {

[[noreturn]] void bad(const std::string& message) {
  throw Error(ErrorKind::kValidation, message);
}

const Json& field(const Json& j, const char* name) {
  if (!j.is_object()) bad("expected a JSON object");
  const auto it = j.find(name);
  if (it == j.end()) bad(std::string("missing field \"") + name + "\"");
  return *it;
}

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_vector(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of integers");
  std::vector<int> out;
  out.reserve(j.size());
  for (const Json& v : j) out.push_back(as_int(v, what));
  return out;
}

Json index_json(std::size_t i) { return static_cast<std::uint64_t>(i + 1); }

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json number(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json to_json(const LatticePoint& x) { return x.counts(); }

LatticePoint point_from_json(const Json& j) {
  return LatticePoint(int_vector(j, "lattice point"));
}

Json to_json(const SimplexSpec& spec) {
  return Json{{"m", spec.m()}, {"n", spec.n()}};
}

SimplexSpec spec_from_json(const Json& j) {
  return SimplexSpec(as_int(field(j, "m"), "m"), as_int(field(j, "n"), "n"));
}

Json to_json(const ConstraintSet& c) {
  Json out = to_json(spec_of(c));
  out["type"] = std::string(constraint_type(c));
  if (const auto* r = std::get_if<Rectangle>(&c)) {
    out["l"] = r->lower();
    out["u"] = r->upper();
  } else if (const auto* w = std::get_if<PartialSumRectangle>(&c)) {
    out["l"] = w->lower();
    out["u"] = w->upper();
  } else {
    Json points = Json::array();
    for (const LatticePoint& x : std::get<ExplicitSet>(c).points()) {
      points.push_back(to_json(x));
    }
    out["points"] = std::move(points);
  }
  return out;
}

ConstraintSet constraint_from_json(const Json& j) {
  const Json& type = field(j, "type");
  if (!type.is_string()) bad("constraint type must be a string");
  const SimplexSpec spec = spec_from_json(j);
  const std::string t = type.get<std::string>();
  if (t == "rectangle") {
    return Rectangle(spec, int_vector(field(j, "l"), "l"),
                     int_vector(field(j, "u"), "u"));
  }
  if (t == "psr") {
    return PartialSumRectangle(spec, int_vector(field(j, "l"), "l"),
                               int_vector(field(j, "u"), "u"));
  }
  if (t == "explicit") {
    const Json& pts = field(j, "points");
    if (!pts.is_array()) bad("points must be an array");
    std::vector<LatticePoint> points;
    for (const Json& p : pts) points.push_back(point_from_json(p));
    return ExplicitSet(spec, std::move(points));
  }
  bad("unknown constraint type \"" + t + "\"");
}

Json to_json(const Rational& q) { return q.get_str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) bad("rational must be a decimal string \"p\" or \"p/q\"");
  Rational q;
  const std::string s = j.get<std::string>();
  if (s.empty() || q.set_str(s, 10) != 0 || q.get_den() == 0) {
    bad("malformed rational \"" + s + "\"");
  }
  q.canonicalize();
  return q;
}

Json to_json(const HomogeneousPolynomial& f) {
  Json terms = Json::array();
  for (const auto& [exp, coeff] : f.terms()) {
    terms.push_back(Json{{"exp", exp}, {"coeff", to_json(coeff)}});
  }
  return Json{{"m", f.m()}, {"degree", f.degree()}, {"terms", std::move(terms)}};
}

HomogeneousPolynomial polynomial_from_json(const Json& j) {
  const int m = as_int(field(j, "m"), "m");
  const int degree = as_int(field(j, "degree"), "degree");
  const Json& terms = field(j, "terms");
  if (!terms.is_array()) bad("terms must be an array");
  HomogeneousPolynomial::TermMap map;
  for (const Json& t : terms) {
    ExponentVector exp = int_vector(field(t, "exp"), "exp");
    const Rational c = rational_from_json(field(t, "coeff"));
    map[exp] += c;
  }
  return HomogeneousPolynomial(m, degree, std::move(map));
}

Json matrix_to_json(const RationalMatrix& h) {
  Json out = Json::array();
  for (const auto& row : h) {
    Json r = Json::array();
    for (const Rational& q : row) r.push_back(to_json(q));
    out.push_back(std::move(r));
  }
  return out;
}

Json to_json(const ExchangeWitness& w) {
  Json out{{"alpha", to_json(w.alpha)}, {"beta", to_json(w.beta)},
           {"i", index_json(w.i)}};
  if (w.j) out["j"] = index_json(*w.j);
  if (w.result) out["result"] = to_json(*w.result);
  return out;
}

Json to_json(const MConvexityReport& r) {
  Json out{{"verdict", r.verdict}, {"pairs_checked", r.pairs_checked}};
  if (r.counterexample) out["counterexample"] = to_json(*r.counterexample);
  return out;
}

Json to_json(const ExchangeTheoremReport& r) {
  Json out{{"verdict", r.passed()},
           {"triples_checked", r.triples_checked},
           {"failures", r.passed() ? 0 : 1}};
  if (r.failure) {
    out["failure"] = to_json(r.failure->witness);
    out["failure"]["reason"] = r.failure->reason;
  }
  return out;
}

Json to_json(const SignatureReport& s) {
  Json eig = Json::array();
  for (double v : s.eigenvalues) eig.push_back(number(v));
  return Json{{"gamma", s.gamma},
              {"eigenvalues", std::move(eig)},
              {"positive_count", s.positive_count}};
}

Json to_json(const LorentzianCertificate& c, bool summary) {
  int worst = 0;
  for (const auto& s : c.signatures) worst = std::max(worst, s.positive_count);
  Json out{{"verdict", c.verdict},
           {"tol", c.tol},
           {"support_mconvex", to_json(c.support_mconvex)},
           {"degenerate", c.degenerate},
           {"gamma_count", c.signatures.size()},
           {"max_positive_count", worst}};
  if (!summary) {
    Json sigs = Json::array();
    for (const auto& s : c.signatures) sigs.push_back(to_json(s));
    out["signatures"] = std::move(sigs);
  }
  return out;
}

Json to_json(const StrictCheckResult& r) {
  Json out{{"verdict", r.passed}, {"leaves_checked", r.leaves_checked}};
  if (!r.passed) {
    Json trace{{"reason", r.reason}};
    if (r.failing_gamma) trace["gamma"] = *r.failing_gamma;
    if (!r.failing_eigenvalues.empty()) {
      Json eig = Json::array();
      for (double v : r.failing_eigenvalues) eig.push_back(number(v));
      trace["eigenvalues"] = std::move(eig);
    }
    out["failing_branch"] = std::move(trace);
  }
  return out;
}

Json to_json(const LogConcavitySpotReport& r) {
  return Json{{"verdict", r.verdict},
              {"tol", r.tol},
              {"points_tested", r.points_tested},
              {"derivatives_tested", r.derivatives_tested},
              {"checks", r.checks},
              {"failures", r.failures},
              {"max_log_hessian_eigenvalue", number(r.max_log_hessian_eigenvalue)},
              {"evidence", "sampling"}};
}

Json to_json(const MleResult& r) {
  Json p = Json::array();
  for (double v : r.p_hat) p.push_back(number(v));
  Json out{{"p_hat", std::move(p)},
           {"log_likelihood", number(r.log_likelihood)},
           {"iterations", r.iterations},
           {"converged", r.converged},
           {"boundary_flags", r.boundary_flags}};
  if (!r.trace.empty()) {
    Json trace = Json::array();
    for (const auto& [it, ll] : r.trace) trace.push_back(Json{it, number(ll)});
    out["trace"] = std::move(trace);
  }
  return out;
}

Json error_json(const Error& e) {
  Json inner{{"kind", std::string(to_string(e.kind()))}, {"message", e.what()}};
  if (e.index()) inner["index"] = index_json(*e.index());
  return Json{{"error", std::move(inner)}};
}

Json error_json(std::string_view kind, const std::string& message) {
  return Json{{"error", {{"kind", std::string(kind)}, {"message", message}}}};
}

}  // namespace mconvex::json_io
