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

#include "mconvex/mconvexity.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

#include "mconvex/error.hpp"
#include "mconvex/point_index.hpp"

namespace mconvex {

namespace {

// Outcome of scanning every beta (and i) for one fixed alpha row.
struct RowResult {
  std::size_t row = 0;
  std::uint64_t units = 0;  // pairs or triples examined in this row
  bool failed = false;
  std::size_t beta = 0;
  std::size_t i = 0;
  std::optional<std::size_t> j;
  std::string reason;
};

// Runs `row(a, scratch)` over all rows, serially or with OpenMP, and picks the
// lowest failing row. Rows beyond a known failure are skipped; the lowest
// failing row is always evaluated, so the merged result does not depend on
// scheduling.
template <typename RowFn>
std::pair<std::uint64_t, std::optional<RowResult>> drive_rows(std::size_t rows,
                                                              Execution exec,
                                                              RowFn&& row) {
  std::vector<RowResult> results(rows);
  if (exec == Execution::kSerial) {
    for (std::size_t a = 0; a < rows; ++a) {
      results[a] = row(a);
      if (results[a].failed) break;
    }
  } else {
    std::atomic<std::size_t> first_fail{rows};
    const long long count = static_cast<long long>(rows);
#pragma omp parallel for schedule(dynamic, 4)
    for (long long a = 0; a < count; ++a) {
      const auto ua = static_cast<std::size_t>(a);
      if (ua > first_fail.load(std::memory_order_relaxed)) continue;
      results[ua] = row(ua);
      if (results[ua].failed) {
        std::size_t cur = first_fail.load();
        while (ua < cur && !first_fail.compare_exchange_weak(cur, ua)) {
        }
      }
    }
  }
  std::uint64_t units = 0;
  for (std::size_t a = 0; a < rows; ++a) {
    units += results[a].units;
    if (results[a].failed) {
      results[a].row = a;
      return {units, results[a]};
    }
  }
  return {units, std::nullopt};
}

bool psr_contains_counts(const PartialSumRectangle& w,
                         std::span<const int> x) {
  int sum = 0;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    if (x[k] < 0) return false;
    sum += x[k];
    if (sum < w.lower()[k] || sum > w.upper()[k]) return false;
  }
  return x.back() >= 0 && sum + x.back() == w.spec().n();
}

bool rectangle_contains_counts(const Rectangle& r, std::span<const int> x) {
  int sum = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < r.lower()[j] || x[j] > r.upper()[j]) return false;
    sum += x[j];
  }
  return sum == r.spec().n();
}

std::optional<std::size_t> least_deficit_above(const LatticePoint& alpha,
                                               const LatticePoint& beta,
                                               std::size_t i) {
  for (std::size_t k = i + 1; k < alpha.size(); ++k) {
    if (alpha[k] < beta[k]) return k;
  }
  return std::nullopt;
}

std::optional<std::size_t> greatest_deficit_below(const LatticePoint& alpha,
                                                  const LatticePoint& beta,
                                                  std::size_t i) {
  for (std::size_t k = i; k-- > 0;) {
    if (alpha[k] < beta[k]) return k;
  }
  return std::nullopt;
}

// Strict partial-sum slack between i and j; sums[k] = S_{k+1}(alpha) and
// bound k is the (k+1)-th partial-sum bound.
bool slack_above(const PartialSumRectangle& w, const std::vector<int>& sums,
                 std::size_t i, std::size_t j) {
  for (std::size_t k = i; k < j; ++k) {
    if (sums[k] <= w.lower()[k]) return false;
  }
  return true;
}

bool slack_below(const PartialSumRectangle& w, const std::vector<int>& sums,
                 std::size_t j, std::size_t i) {
  for (std::size_t k = j; k < i; ++k) {
    if (sums[k] >= w.upper()[k]) return false;
  }
  return true;
}

std::optional<FeasibleIndex> try_select(const PartialSumRectangle& w,
                                        const LatticePoint& alpha,
                                        const std::vector<int>& sums,
                                        const LatticePoint& beta, std::size_t i,
                                        SelectorOrder order) {
  auto above = [&]() -> std::optional<FeasibleIndex> {
    const auto j = least_deficit_above(alpha, beta, i);
    if (j && slack_above(w, sums, i, *j)) {
      return FeasibleIndex{*j, ExchangeBranch::kAbove};
    }
    return std::nullopt;
  };
  auto below = [&]() -> std::optional<FeasibleIndex> {
    const auto j = greatest_deficit_below(alpha, beta, i);
    if (j && slack_below(w, sums, *j, i)) {
      return FeasibleIndex{*j, ExchangeBranch::kBelow};
    }
    return std::nullopt;
  };
  if (order == SelectorOrder::kAboveFirst) {
    if (auto r = above()) return r;
    return below();
  }
  if (auto r = below()) return r;
  return above();
}

void check_dims(const SimplexSpec& spec, const LatticePoint& x,
                const char* what) {
  if (!belongs_to(x, spec)) {
    throw Error(ErrorKind::kDimension,
                std::string(what) + " is not a point of the constraint's simplex");
  }
}

}  // namespace

LatticePoint exchange(const LatticePoint& alpha, std::size_t i, std::size_t j) {
  if (i >= alpha.size() || j >= alpha.size()) {
    throw Error(ErrorKind::kDimension, "exchange index out of range");
  }
  if (i == j) {
    throw Error(ErrorKind::kPrecondition, "exchange needs i != j", i);
  }
  if (alpha[i] == 0) {
    throw Error(ErrorKind::kPrecondition,
                "exchange needs alpha_i >= 1 at index " + std::to_string(i + 1),
                i);
  }
  std::vector<int> out = alpha.counts();
  --out[i];
  ++out[j];
  return LatticePoint(std::move(out));
}

MConvexityReport is_mconvex_bruteforce(std::span<const LatticePoint> members,
                                       const SimplexSpec& spec,
                                       Execution exec) {
  const PointSet set(spec, members);
  const std::size_t size = members.size();
  const std::size_t m = spec.m();

  auto row = [&](std::size_t a) {
    RowResult out;
    std::vector<int> y(m);
    const LatticePoint& alpha = members[a];
    for (std::size_t b = 0; b < size; ++b) {
      if (b == a) continue;
      ++out.units;
      const LatticePoint& beta = members[b];
      for (std::size_t i = 0; i < m; ++i) {
        if (alpha[i] <= beta[i]) continue;
        bool found = false;
        std::copy(alpha.counts().begin(), alpha.counts().end(), y.begin());
        --y[i];
        for (std::size_t j = 0; j < m && !found; ++j) {
          if (alpha[j] >= beta[j]) continue;
          ++y[j];
          found = set.contains(y);
          --y[j];
        }
        if (!found) {
          out.failed = true;
          out.beta = b;
          out.i = i;
          return out;
        }
      }
    }
    return out;
  };

  auto [pairs, failure] = drive_rows(size, exec, row);
  MConvexityReport report;
  report.pairs_checked = pairs;
  if (failure) {
    report.verdict = false;
    ExchangeWitness w;
    w.alpha = members[failure->row];
    w.beta = members[failure->beta];
    w.i = failure->i;
    report.counterexample = std::move(w);
  }
  return report;
}

MConvexityReport is_mconvex_bruteforce(const ConstraintSet& c, Execution exec,
                                       std::uint64_t cap) {
  const std::vector<LatticePoint> members = enumerate_constraint(c, cap);
  return is_mconvex_bruteforce(members, spec_of(c), exec);
}

bool recheck_counterexample(const ConstraintSet& c, const ExchangeWitness& w) {
  if (!contains(c, w.alpha) || !contains(c, w.beta)) return false;
  if (w.i >= w.alpha.size() || w.alpha[w.i] <= w.beta[w.i]) return false;
  for (std::size_t j = 0; j < w.alpha.size(); ++j) {
    if (w.alpha[j] < w.beta[j] && contains(c, exchange(w.alpha, w.i, j))) {
      return false;
    }
  }
  return true;
}

bool is_feasible_index(const PartialSumRectangle& w, const LatticePoint& alpha,
                       const LatticePoint& beta, std::size_t i, std::size_t j) {
  if (j >= alpha.size() || i >= alpha.size() || j == i) return false;
  if (!(alpha[j] < beta[j])) return false;
  const std::vector<int> sums = partial_sums(alpha);
  return j < i ? slack_below(w, sums, j, i) : slack_above(w, sums, i, j);
}

FeasibleIndex find_feasible_index(const PartialSumRectangle& w,
                                  const LatticePoint& alpha,
                                  const LatticePoint& beta, std::size_t i,
                                  SelectorOrder order) {
  check_dims(w.spec(), alpha, "alpha");
  check_dims(w.spec(), beta, "beta");
  if (!psr_contains(w, alpha)) {
    throw Error(ErrorKind::kPrecondition, "alpha is not in the partial sum rectangle");
  }
  if (!psr_contains(w, beta)) {
    throw Error(ErrorKind::kPrecondition, "beta is not in the partial sum rectangle");
  }
  if (i >= alpha.size() || alpha[i] <= beta[i]) {
    throw Error(ErrorKind::kPrecondition, "find_feasible_index needs alpha_i > beta_i",
                i);
  }
  const auto pick = try_select(w, alpha, partial_sums(alpha), beta, i, order);
  if (!pick) {
    throw Error(ErrorKind::kNumeric, "no feasible exchange index found", i);
  }
  return *pick;
}

ExchangeTheoremReport verify_exchange_theorem(const PartialSumRectangle& w,
                                              SelectorOrder order,
                                              Execution exec,
                                              std::uint64_t cap) {
  const std::vector<LatticePoint> members =
      enumerate_constraint(ConstraintSet(w), cap);
  const std::size_t size = members.size();
  const std::size_t m = w.spec().m();

  auto row = [&](std::size_t a) {
    RowResult out;
    const LatticePoint& alpha = members[a];
    const std::vector<int> sums = partial_sums(alpha);
    std::vector<int> y(m);
    for (std::size_t b = 0; b < size; ++b) {
      if (b == a) continue;
      const LatticePoint& beta = members[b];
      for (std::size_t i = 0; i < m; ++i) {
        if (alpha[i] <= beta[i]) continue;
        ++out.units;
        const auto pick = try_select(w, alpha, sums, beta, i, order);
        std::string reason;
        if (!pick) {
          reason = "no feasible index";
        } else if (!is_feasible_index(w, alpha, beta, i, pick->j)) {
          reason = "selected index is not feasible";
        } else {
          std::copy(alpha.counts().begin(), alpha.counts().end(), y.begin());
          --y[i];
          ++y[pick->j];
          if (!psr_contains_counts(w, y)) reason = "exchange leaves the set";
        }
        if (!reason.empty()) {
          out.failed = true;
          out.beta = b;
          out.i = i;
          if (pick) out.j = pick->j;
          out.reason = std::move(reason);
          return out;
        }
      }
    }
    return out;
  };

  auto [triples, failure] = drive_rows(size, exec, row);
  ExchangeTheoremReport report;
  report.triples_checked = triples;
  if (failure) {
    ExchangeWitness wit;
    wit.alpha = members[failure->row];
    wit.beta = members[failure->beta];
    wit.i = failure->i;
    wit.j = failure->j;
    if (failure->j && wit.alpha[wit.i] > 0) {
      wit.result = exchange(wit.alpha, wit.i, *failure->j);
    }
    report.failure = ExchangeFailure{std::move(wit), failure->reason};
  }
  return report;
}

std::size_t rectangle_exchange_index(const Rectangle& r,
                                     const LatticePoint& alpha,
                                     const LatticePoint& beta, std::size_t i) {
  check_dims(r.spec(), alpha, "alpha");
  check_dims(r.spec(), beta, "beta");
  if (!rectangle_contains(r, alpha) || !rectangle_contains(r, beta)) {
    throw Error(ErrorKind::kPrecondition, "alpha or beta is not in the rectangle");
  }
  if (i >= alpha.size() || alpha[i] <= beta[i]) {
    throw Error(ErrorKind::kPrecondition,
                "rectangle_exchange_index needs alpha_i > beta_i", i);
  }
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    if (alpha[j] < beta[j]) return j;
  }
  throw Error(ErrorKind::kNumeric, "no coordinate with alpha_j < beta_j", i);
}

ExchangeTheoremReport verify_rectangle_exchange(const Rectangle& r,
                                                Execution exec,
                                                std::uint64_t cap) {
  const std::vector<LatticePoint> members =
      enumerate_constraint(ConstraintSet(r), cap);
  const std::size_t size = members.size();
  const std::size_t m = r.spec().m();

  auto row = [&](std::size_t a) {
    RowResult out;
    const LatticePoint& alpha = members[a];
    std::vector<int> y(m);
    for (std::size_t b = 0; b < size; ++b) {
      if (b == a) continue;
      const LatticePoint& beta = members[b];
      for (std::size_t i = 0; i < m; ++i) {
        if (alpha[i] <= beta[i]) continue;
        ++out.units;
        std::optional<std::size_t> j;
        for (std::size_t k = 0; k < m; ++k) {
          if (alpha[k] < beta[k]) {
            j = k;
            break;
          }
        }
        std::string reason;
        if (!j) {
          reason = "no coordinate with alpha_j < beta_j";
        } else {
          std::copy(alpha.counts().begin(), alpha.counts().end(), y.begin());
          --y[i];
          ++y[*j];
          if (!rectangle_contains_counts(r, y)) reason = "exchange leaves the set";
        }
        if (!reason.empty()) {
          out.failed = true;
          out.beta = b;
          out.i = i;
          out.j = j;
          out.reason = std::move(reason);
          return out;
        }
      }
    }
    return out;
  };

  auto [triples, failure] = drive_rows(size, exec, row);
  ExchangeTheoremReport report;
  report.triples_checked = triples;
  if (failure) {
    ExchangeWitness wit;
    wit.alpha = members[failure->row];
    wit.beta = members[failure->beta];
    wit.i = failure->i;
    wit.j = failure->j;
    if (failure->j) wit.result = exchange(wit.alpha, wit.i, *failure->j);
    report.failure = ExchangeFailure{std::move(wit), failure->reason};
  }
  return report;
}

}  // namespace mconvex
