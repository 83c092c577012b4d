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

#include "mconvex/certification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "mconvex/error.hpp"
#include "mconvex/linalg.hpp"
#include "mconvex/simplex.hpp"

namespace mconvex {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

mpz_class factorial(int k) {
  mpz_class out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

std::vector<ExponentVector> lower_multi_indices(int m, int order) {
  std::vector<ExponentVector> out;
  for (const LatticePoint& g : enumerate_simplex(SimplexSpec(m, order))) {
    out.push_back(g.counts());
  }
  return out;
}

bool has_full_support(const HomogeneousPolynomial& f) {
  const BigCount full = simplex_size(SimplexSpec(f.m(), f.degree()));
  return BigCount(static_cast<unsigned long>(f.terms().size())) == full;
}

SignatureReport signature_of(const HomogeneousPolynomial& f,
                             const ExponentVector& gamma, double tol) {
  SignatureReport sig;
  sig.gamma = gamma;
  const Eigen::MatrixXd h = to_double(derivative_hessian(f, gamma));
  sig.eigenvalues = symmetric_eigenvalues(h);
  sig.max_abs_entry = max_abs_entry(h);
  sig.positive_count = count_positive(sig.eigenvalues, sig.max_abs_entry, tol);
  return sig;
}

void check_positive_point(std::span<const double> w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (!(w[k] > 0.0)) {
      throw Error(ErrorKind::kPrecondition,
                  "spot checks need strictly positive points", k);
    }
  }
}

Eigen::MatrixXd log_hessian_from_jet(const FloatPolynomial::Jet& jet) {
  const Eigen::VectorXd g = jet.gradient / jet.value;
  return jet.hessian / jet.value - g * g.transpose();
}

// Folds one derivative evaluated at one point into the report.
void spot_one(const FloatPolynomial& g, std::span<const double> w,
              LogConcavitySpotReport& report) {
  ++report.checks;
  if (g.is_zero()) return;
  const FloatPolynomial::Jet jet = g.jet(w);
  if (!(jet.value > 0.0)) {
    ++report.failures;
    report.max_log_hessian_eigenvalue = kInf;
    report.verdict = false;
    return;
  }
  const double top = symmetric_eigenvalues(log_hessian_from_jet(jet)).front();
  report.max_log_hessian_eigenvalue =
      std::max(report.max_log_hessian_eigenvalue, top);
  if (top > report.tol) report.verdict = false;
}

}  // namespace

int count_positive(std::span<const double> eigenvalues, double max_abs,
                   double tol) {
  const double threshold = tol * (1.0 + max_abs);
  return static_cast<int>(std::count_if(eigenvalues.begin(), eigenvalues.end(),
                                        [&](double v) { return v > threshold; }));
}

RationalMatrix derivative_hessian(const HomogeneousPolynomial& f,
                                  const ExponentVector& gamma) {
  const std::size_t m = f.m();
  if (gamma.size() != m) {
    throw Error(ErrorKind::kDimension, "derivative multi-index has wrong length");
  }
  int order = 0;
  for (int g : gamma) order += g;
  if (order + 2 != f.degree()) {
    throw Error(ErrorKind::kPrecondition,
                "derivative_hessian needs |gamma| = degree - 2");
  }
  RationalMatrix h(m, std::vector<Rational>(m, Rational(0)));
  ExponentVector full = gamma;
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      ++full[a];
      ++full[b];
      const Rational c = f.coefficient(full);
      if (sgn(c) != 0) {
        mpz_class scale = 1;
        for (int e : full) scale *= factorial(e);
        h[a][b] = c * scale;
        h[b][a] = h[a][b];
      }
      --full[a];
      --full[b];
    }
  }
  return h;
}

LorentzianCertificate certify_lorentzian(const HomogeneousPolynomial& f,
                                         double tol, Execution exec) {
  LorentzianCertificate cert;
  cert.tol = tol;
  const ExplicitSet supp = support(f);
  cert.support_mconvex =
      is_mconvex_bruteforce(std::span<const LatticePoint>(supp.points()),
                            supp.spec(), exec);
  if (f.degree() < 2) {
    cert.degenerate = true;
    cert.verdict = cert.support_mconvex.verdict;
    return cert;
  }
  const std::vector<ExponentVector> gammas =
      lower_multi_indices(f.m(), f.degree() - 2);
  cert.signatures.resize(gammas.size());
  const long long count = static_cast<long long>(gammas.size());
  if (exec == Execution::kSerial) {
    for (long long g = 0; g < count; ++g) {
      cert.signatures[g] = signature_of(f, gammas[g], tol);
    }
  } else {
#pragma omp parallel for schedule(dynamic, 8)
    for (long long g = 0; g < count; ++g) {
      cert.signatures[g] = signature_of(f, gammas[g], tol);
    }
  }
  const bool hessians_ok =
      std::all_of(cert.signatures.begin(), cert.signatures.end(),
                  [](const SignatureReport& s) { return s.positive_count <= 1; });
  cert.verdict = cert.support_mconvex.verdict && hessians_ok;
  return cert;
}

StrictCheckResult strictly_lorentzian_check(const HomogeneousPolynomial& f,
                                            double tol) {
  StrictCheckResult out;
  if (!has_full_support(f)) {
    out.reason = "missing monomials: not all coefficients are positive";
    return out;
  }
  if (f.degree() < 2) {
    out.passed = true;
    return out;
  }
  // The recursion over first partials reaches exactly the degree-two
  // derivatives d^gamma f, |gamma| = degree - 2; full support of f gives
  // positive coefficients at every intermediate level.
  for (const ExponentVector& gamma : lower_multi_indices(f.m(), f.degree() - 2)) {
    ++out.leaves_checked;
    const Eigen::MatrixXd h = to_double(derivative_hessian(f, gamma));
    const std::vector<double> eig = symmetric_eigenvalues(h);
    const double threshold = tol * (1.0 + max_abs_entry(h));
    const bool singular = std::any_of(eig.begin(), eig.end(), [&](double v) {
      return std::abs(v) <= threshold;
    });
    const int positive = count_positive(eig, max_abs_entry(h), tol);
    if (singular || positive != 1) {
      out.failing_gamma = gamma;
      out.failing_eigenvalues = eig;
      out.reason = singular ? "singular Hessian"
                            : "Hessian has " + std::to_string(positive) +
                                  " positive eigenvalues";
      return out;
    }
  }
  out.passed = true;
  return out;
}

LogConcavitySpotReport::LogConcavitySpotReport()
    : max_log_hessian_eigenvalue(-kInf) {}

void LogConcavitySpotReport::merge(const LogConcavitySpotReport& other) {
  points_tested += other.points_tested;
  derivatives_tested += other.derivatives_tested;
  checks += other.checks;
  failures += other.failures;
  max_log_hessian_eigenvalue =
      std::max(max_log_hessian_eigenvalue, other.max_log_hessian_eigenvalue);
  verdict = verdict && other.verdict;
}

Eigen::MatrixXd log_hessian(const HomogeneousPolynomial& f,
                            std::span<const double> w) {
  if (static_cast<int>(w.size()) != f.m()) {
    throw Error(ErrorKind::kDimension, "point has wrong length");
  }
  const FloatPolynomial::Jet jet = FloatPolynomial(f).jet(w);
  if (!(jet.value > 0.0)) {
    throw Error(ErrorKind::kNumeric, "log-Hessian needs f(w) > 0");
  }
  return log_hessian_from_jet(jet);
}

double log_hessian_max_eigenvalue(const HomogeneousPolynomial& f,
                                  std::span<const double> w) {
  return symmetric_eigenvalues(log_hessian(f, w)).front();
}

LogConcavitySpotReport check_strong_logconcavity_spot(
    const HomogeneousPolynomial& f, std::span<const ExponentVector> gammas,
    std::span<const std::vector<double>> points, double tol) {
  LogConcavitySpotReport report;
  report.tol = tol;
  report.points_tested = points.size();
  report.derivatives_tested = gammas.size();
  for (const auto& w : points) {
    if (static_cast<int>(w.size()) != f.m()) {
      throw Error(ErrorKind::kDimension, "point has wrong length");
    }
    check_positive_point(w);
  }
  for (const ExponentVector& gamma : gammas) {
    const FloatPolynomial g(partial_derivative(f, gamma));
    for (const auto& w : points) spot_one(g, w, report);
  }
  return report;
}

LogConcavitySpotReport check_complete_logconcavity_spot(
    const HomogeneousPolynomial& f, std::span<const DirectionVector> directions,
    std::span<const std::vector<double>> points, double tol, int max_k) {
  if (max_k < 1 || max_k > f.degree() ||
      max_k > static_cast<int>(directions.size())) {
    throw Error(ErrorKind::kPrecondition,
                "complete log-concavity check needs 1 <= max_k <= degree and "
                "enough directions");
  }
  for (const auto& w : points) {
    if (static_cast<int>(w.size()) != f.m()) {
      throw Error(ErrorKind::kDimension, "point has wrong length");
    }
    check_positive_point(w);
  }
  std::vector<FloatPolynomial> prefixes;
  prefixes.reserve(max_k + 1);
  HomogeneousPolynomial g = f;
  prefixes.emplace_back(g);
  for (int k = 0; k < max_k; ++k) {
    g = directional_derivative(g, directions[k]);
    prefixes.emplace_back(g);
  }
  LogConcavitySpotReport report;
  report.tol = tol;
  report.points_tested = points.size();
  report.derivatives_tested = prefixes.size();
  for (const FloatPolynomial& p : prefixes) {
    for (const auto& w : points) spot_one(p, w, report);
  }
  return report;
}

}  // namespace mconvex
