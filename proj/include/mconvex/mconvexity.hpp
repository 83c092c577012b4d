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

#ifndef MCONVEX_MCONVEXITY_HPP_
#define MCONVEX_MCONVEXITY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "mconvex/constraints.hpp"
#include "mconvex/execution.hpp"
#include "mconvex/simplex.hpp"

namespace mconvex {

// Indices are 0-based here; JSON output shifts them to 1-based.
struct ExchangeWitness {
  LatticePoint alpha;
  LatticePoint beta;
  std::size_t i = 0;
  std::optional<std::size_t> j;
  std::optional<LatticePoint> result;

  bool operator==(const ExchangeWitness&) const = default;
};

struct MConvexityReport {
  bool verdict = true;
  // Present iff verdict is false; j and result are absent.
  std::optional<ExchangeWitness> counterexample;
  // Ordered pairs alpha != beta examined, up to and including the failing
  // pair when there is one.
  std::uint64_t pairs_checked = 0;

  bool operator==(const MConvexityReport&) const = default;
};

// alpha - e_i + e_j. Throws Error(kPrecondition) when alpha_i = 0 or i == j.
LatticePoint exchange(const LatticePoint& alpha, std::size_t i, std::size_t j);

// Exchange-axiom check over every ordered pair of members. The reported
// counterexample is the lexicographically first violating (alpha, beta, i).
MConvexityReport is_mconvex_bruteforce(
    const ConstraintSet& c, Execution exec = Execution::kParallel,
    std::uint64_t cap = default_enumeration_cap());

// Same check on an already enumerated, sorted, deduplicated member list.
MConvexityReport is_mconvex_bruteforce(std::span<const LatticePoint> members,
                                       const SimplexSpec& spec,
                                       Execution exec = Execution::kParallel);

// True iff the witness really violates the exchange axiom in `c`: both
// points belong to c, alpha_i > beta_i, and no j with alpha_j < beta_j has
// alpha - e_i + e_j in c. Uses only the membership predicate.
bool recheck_counterexample(const ConstraintSet& c, const ExchangeWitness& w);

// Which side of i the exchange partner j lies on.
enum class ExchangeBranch {
  kBelow,  // j < i, partial sums S_k(alpha) < u_k for j <= k < i
  kAbove,  // j > i, partial sums S_k(alpha) > l_k for i <= k < j
};

// Which branch the selector tries first. Either order is correct.
enum class SelectorOrder { kAboveFirst, kBelowFirst };

struct FeasibleIndex {
  std::size_t j = 0;
  ExchangeBranch branch = ExchangeBranch::kAbove;
};

// Literal feasibility test for a candidate partner j of (alpha, beta, i) in
// W. Does not itself check alpha, beta in W.
bool is_feasible_index(const PartialSumRectangle& w, const LatticePoint& alpha,
                       const LatticePoint& beta, std::size_t i, std::size_t j);

// Constructive exchange partner for partial-sum rectangles. Tries the least
// j > i with alpha_j < beta_j and accepts it when every S_k(alpha) with
// i <= k < j is strictly above l_k; otherwise takes the greatest j < i with
// alpha_j < beta_j when every S_k(alpha) with j <= k < i is strictly below
// u_k. `order` swaps which is tried first.
//
// Throws Error(kPrecondition) if alpha or beta is outside W or
// alpha_i <= beta_i, and Error(kNumeric) if neither branch succeeds.
FeasibleIndex find_feasible_index(const PartialSumRectangle& w,
                                  const LatticePoint& alpha,
                                  const LatticePoint& beta, std::size_t i,
                                  SelectorOrder order = SelectorOrder::kAboveFirst);

struct ExchangeFailure {
  ExchangeWitness witness;
  std::string reason;

  bool operator==(const ExchangeFailure&) const = default;
};

struct ExchangeTheoremReport {
  std::uint64_t triples_checked = 0;
  std::optional<ExchangeFailure> failure;

  bool passed() const { return !failure.has_value(); }
  bool operator==(const ExchangeTheoremReport&) const = default;
};

// Runs the constructive selector on every (alpha, beta, i) with
// alpha_i > beta_i and checks the selected j is feasible and the exchange
// stays in W.
ExchangeTheoremReport verify_exchange_theorem(
    const PartialSumRectangle& w,
    SelectorOrder order = SelectorOrder::kAboveFirst,
    Execution exec = Execution::kParallel,
    std::uint64_t cap = default_enumeration_cap());

// Rectangles need no feasibility bookkeeping: any j with alpha_j < beta_j
// works. Returns the smallest such j.
std::size_t rectangle_exchange_index(const Rectangle& r,
                                     const LatticePoint& alpha,
                                     const LatticePoint& beta, std::size_t i);

ExchangeTheoremReport verify_rectangle_exchange(
    const Rectangle& r, Execution exec = Execution::kParallel,
    std::uint64_t cap = default_enumeration_cap());

}  // namespace mconvex

#endif  // MCONVEX_MCONVEXITY_HPP_
