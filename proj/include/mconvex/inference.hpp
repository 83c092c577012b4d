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

#ifndef MCONVEX_INFERENCE_HPP_
#define MCONVEX_INFERENCE_HPP_

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "mconvex/constraints.hpp"
#include "mconvex/execution.hpp"

namespace mconvex {

inline constexpr double kDefaultFloor = 1e-10;

// A point of the probability simplex. The constructor accepts non-negative
// entries summing to 1 within 1e-6 and renormalizes them.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> p);
  static ProbabilityVector uniform(int m);

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t k) const { return p_[k]; }
  const std::vector<double>& values() const { return p_; }
  // Every coordinate at least `floor`.
  bool is_interior(double floor = kDefaultFloor) const;

 private:
  std::vector<double> p_;
};

// Observed-data likelihood P[X in C | p] over an enumerated constraint set.
// Built once per set; every evaluation is a deterministic ordered sum over
// the members.
class CensoredLikelihood {
 public:
  explicit CensoredLikelihood(const ConstraintSet& c,
                              Execution exec = Execution::kParallel,
                              std::uint64_t cap = default_enumeration_cap());

  const SimplexSpec& spec() const { return spec_; }
  std::size_t member_count() const { return log_coeff_.size(); }

  // -inf when the likelihood is zero or underflows.
  double log_likelihood(std::span<const double> p) const;
  // E[X | X in C, p]; throws Error(kNumeric) when the likelihood is zero.
  std::vector<double> conditional_expectation(std::span<const double> p) const;
  ProbabilityVector em_step(const ProbabilityVector& p) const;
  // d log L / d p_j with L read as a polynomial in p (off-simplex
  // extension); well defined on faces where p_j = 0.
  std::vector<double> score(std::span<const double> p) const;

  // Per-member log(multinomial(x) p^x); the parallel kernel and the serial
  // reference write identical values.
  void log_terms(std::span<const double> p, std::vector<double>& out) const;

 private:
  SimplexSpec spec_;
  Execution exec_;
  std::vector<int> counts_;  // member-major, m entries per member
  std::vector<double> log_coeff_;
};

double log_likelihood(const ConstraintSet& c, const ProbabilityVector& p);
std::vector<double> conditional_expectation(const ConstraintSet& c,
                                            const ProbabilityVector& p);
ProbabilityVector em_step(const ConstraintSet& c, const ProbabilityVector& p);

struct MleOptions {
  double tol = 1e-10;    // sup-norm change in p
  int max_iter = 10'000;
  double floor = kDefaultFloor;
  // Coordinates shrinking below this are tested for a move onto the face
  // p_j = 0; the move is taken only if it does not lower the likelihood and
  // the face point satisfies the first-order condition in p_j.
  double snap_threshold = 1e-3;
  bool trace = false;
  Execution exec = Execution::kParallel;
};

struct MleResult {
  std::vector<double> p_hat;
  double log_likelihood = 0.0;
  int iterations = 0;
  bool converged = false;
  std::vector<bool> boundary_flags;  // p_hat_j < floor
  std::vector<std::pair<int, double>> trace;
};

// EM iteration from an interior start. The log-likelihood never decreases
// along the trace.
MleResult mle(const ConstraintSet& c, const ProbabilityVector& p0,
              const MleOptions& options = {});
MleResult mle(const CensoredLikelihood& model, const ProbabilityVector& p0,
              const MleOptions& options = {});

// Cross-check: EM from `restarts` random interior starts drawn with `seed`.
std::vector<MleResult> mle_restarts(const ConstraintSet& c, int restarts,
                                    std::uint64_t seed,
                                    const MleOptions& options = {});

}  // namespace mconvex

#endif  // MCONVEX_INFERENCE_HPP_
