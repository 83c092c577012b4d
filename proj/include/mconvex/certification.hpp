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

#ifndef MCONVEX_CERTIFICATION_HPP_
#define MCONVEX_CERTIFICATION_HPP_

#include <Eigen/Dense>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mconvex/execution.hpp"
#include "mconvex/mconvexity.hpp"
#include "mconvex/polynomial.hpp"

namespace mconvex {

inline constexpr double kDefaultTolerance = 1e-9;

// An eigenvalue counts as positive iff it exceeds tol * (1 + max|H_ab|).
// Exact zeros are never positive.
int count_positive(std::span<const double> eigenvalues, double max_abs,
                   double tol);

struct SignatureReport {
  ExponentVector gamma;
  std::vector<double> eigenvalues;  // descending
  double max_abs_entry = 0.0;
  int positive_count = 0;
};

struct LorentzianCertificate {
  MConvexityReport support_mconvex;
  // One entry per gamma of degree n-2, lexicographic in gamma.
  std::vector<SignatureReport> signatures;
  bool verdict = false;
  double tol = kDefaultTolerance;
  // Degree < 2: no Hessians exist and the verdict is the support condition.
  bool degenerate = false;
};

// Constant Hessian of the quadratic d^gamma f, for |gamma| = degree - 2,
// assembled from coefficients: entry (a, b) is d^(gamma + e_a + e_b) f.
RationalMatrix derivative_hessian(const HomogeneousPolynomial& f,
                                  const ExponentVector& gamma);

// Lorentzian test via M-convex support plus at most one positive
// eigenvalue in every degree-two derivative's Hessian.
LorentzianCertificate certify_lorentzian(const HomogeneousPolynomial& f,
                                         double tol = kDefaultTolerance,
                                         Execution exec = Execution::kParallel);

// Sufficient-condition test for strict Lorentzian-ness: full support with
// positive coefficients, and every degree-two derivative has a non-singular
// Hessian with exactly one positive eigenvalue.
struct StrictCheckResult {
  bool passed = false;
  std::uint64_t leaves_checked = 0;
  std::optional<ExponentVector> failing_gamma;
  std::vector<double> failing_eigenvalues;
  std::string reason;
};

StrictCheckResult strictly_lorentzian_check(const HomogeneousPolynomial& f,
                                            double tol = kDefaultTolerance);

// Sampling evidence only; these never decide log-concavity.
struct LogConcavitySpotReport {
  std::uint64_t points_tested = 0;
  std::uint64_t derivatives_tested = 0;
  std::uint64_t checks = 0;    // (derivative, point) pairs evaluated
  std::uint64_t failures = 0;  // non-positive value of a non-zero derivative
  // -inf when every derivative was identically zero, +inf after a failure.
  double max_log_hessian_eigenvalue;
  bool verdict = true;
  double tol = kDefaultTolerance;

  LogConcavitySpotReport();
  // Associative merge of two reports taken at the same tolerance.
  void merge(const LogConcavitySpotReport& other);
};

// Hessian of log f at w, from exact derivatives evaluated in double:
// (f H_f - grad f grad f^T) / f^2. Throws Error(kNumeric) if f(w) <= 0.
Eigen::MatrixXd log_hessian(const HomogeneousPolynomial& f,
                            std::span<const double> w);
double log_hessian_max_eigenvalue(const HomogeneousPolynomial& f,
                                  std::span<const double> w);

// For every gamma and every point: d^gamma f is identically zero, or
// positive at w with a log-Hessian whose largest eigenvalue is <= tol.
LogConcavitySpotReport check_strong_logconcavity_spot(
    const HomogeneousPolynomial& f, std::span<const ExponentVector> gammas,
    std::span<const std::vector<double>> points, double tol = kDefaultTolerance);

// For every point and every prefix D_1 ... D_k of `directions` with
// 0 <= k <= max_k: the derivative is non-negative at w and log-concave there.
// Needs 1 <= max_k <= min(degree, directions.size()).
LogConcavitySpotReport check_complete_logconcavity_spot(
    const HomogeneousPolynomial& f, std::span<const DirectionVector> directions,
    std::span<const std::vector<double>> points, double tol, int max_k);

}  // namespace mconvex

#endif  // MCONVEX_CERTIFICATION_HPP_
