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

#ifndef MCONVEX_BATTERY_HPP_
#define MCONVEX_BATTERY_HPP_

#include <cstdint>
#include <json.hpp>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "mconvex/certification.hpp"
#include "mconvex/constraints.hpp"
#include "mconvex/execution.hpp"
#include "mconvex/polynomial.hpp"

namespace mconvex {

using Rng = std::mt19937_64;

// Every valid rectangle bound pair (l, u) for the given simplex, including
// those whose set is empty.
std::vector<Rectangle> all_rectangles(const SimplexSpec& spec);
// Every valid monotone partial-sum bound pair.
std::vector<PartialSumRectangle> all_psrs(const SimplexSpec& spec);

PartialSumRectangle random_psr(Rng& rng, const SimplexSpec& spec);
// Rejection-samples until the rectangle is non-empty.
Rectangle random_nonempty_rectangle(Rng& rng, const SimplexSpec& spec);
// Strictly positive, entries of at least `floor` before normalization.
std::vector<double> random_interior_point(Rng& rng, int m, double floor = 1e-3);
// Entries uniform in [lo, hi].
std::vector<double> random_positive_point(Rng& rng, int m, double lo, double hi);
// Non-negative rational direction with entries in {0, 1/4, ..., 4}, never
// all zero.
DirectionVector random_direction(Rng& rng, int m);

// Signs of every per-gamma Hessian are the same for all listed tolerances.
bool signatures_stable(const LorentzianCertificate& cert,
                       std::span<const double> tolerances);

// Spot evidence of strong and complete log-concavity from `draws` random
// (derivative, point) pairs each, points with entries in [0.1, 10].
struct SpotSuiteResult {
  LogConcavitySpotReport strong;
  LogConcavitySpotReport complete;
};
SpotSuiteResult random_spot_suite(const HomogeneousPolynomial& f, Rng& rng,
                                  int draws, double tol);

enum class BatteryKind {
  kRectMConvex,
  kPsrMConvex,
  kExchangeConstructive,
  kLorentzGrid,
  kEmMonotone,
};

std::optional<BatteryKind> battery_kind_from_string(std::string_view name);
std::string_view to_string(BatteryKind kind);

struct BatteryConfig {
  std::uint64_t seed = 7;
  int n_min = 2;
  int n_max = 6;            // exhaustive m = 3 grid
  int random_count = -1;    // -1: kind default
  int random_n_max = 8;     // random instances with m in {4, 5}
  bool include_grid = false;  // exchange-constructive: add the m = 3 grid
  double tol = kDefaultTolerance;
  Execution exec = Execution::kParallel;
};

// Deterministic summary for a given config: counts, failures and the first
// failing instance. Wall time is left to the caller so the JSON is
// reproducible byte for byte.
nlohmann::json run_battery(BatteryKind kind, const BatteryConfig& config);

}  // namespace mconvex

#endif  // MCONVEX_BATTERY_HPP_
