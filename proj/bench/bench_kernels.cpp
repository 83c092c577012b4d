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

// Serial reference kernels against their OpenMP counterparts.

#include <benchmark/benchmark.h>

#include "mconvex/battery.hpp"
#include "mconvex/certification.hpp"
#include "mconvex/inference.hpp"
#include "mconvex/mconvexity.hpp"

namespace {

using namespace mconvex;

Execution exec_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
}

const PartialSumRectangle& big_psr() {
  static const PartialSumRectangle w(SimplexSpec(5, 10), {1, 3, 5, 7}, {4, 7, 9, 10});
  return w;
}

void BM_BruteForce(benchmark::State& state) {
  const ConstraintSet c{big_psr()};
  for (auto _ : state) benchmark::DoNotOptimize(is_mconvex_bruteforce(c, exec_of(state)));
}

void BM_ExchangeTheorem(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_exchange_theorem(big_psr(), SelectorOrder::kAboveFirst, exec_of(state)));
  }
}

void BM_EStep(benchmark::State& state) {
  const PartialSumRectangle w(SimplexSpec(6, 16), {1, 3, 5, 8, 11}, {6, 9, 12, 14, 16});
  const CensoredLikelihood model(w, exec_of(state));
  const std::vector<double> p{0.1, 0.15, 0.2, 0.2, 0.15, 0.2};
  for (auto _ : state) benchmark::DoNotOptimize(model.conditional_expectation(p));
  state.counters["members"] = static_cast<double>(model.member_count());
}

void BM_Certify(benchmark::State& state) {
  const auto f = likelihood_polynomial(big_psr());
  for (auto _ : state) {
    benchmark::DoNotOptimize(certify_lorentzian(f, kDefaultTolerance, exec_of(state)));
  }
}

}  // namespace

BENCHMARK(BM_BruteForce)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExchangeTheorem)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EStep)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_Certify)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
