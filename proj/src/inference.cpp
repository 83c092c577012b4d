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

#include "mconvex/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <string>

#include "mconvex/error.hpp"

namespace mconvex {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// log-sum-exp in member order.
double ordered_log_sum(const std::vector<double>& terms) {
  double top = kNegInf;
  for (double t : terms) top = std::max(top, t);
  if (top == kNegInf) return kNegInf;
  double sum = 0.0;
  for (double t : terms) sum += std::exp(t - top);
  return top + std::log(sum);
}

void check_length(const SimplexSpec& spec, std::size_t len) {
  if (static_cast<int>(len) != spec.m()) {
    throw Error(ErrorKind::kDimension,
                "probability vector has " + std::to_string(len) +
                    " entries, constraint has m=" + std::to_string(spec.m()));
  }
}

double sup_distance(const std::vector<double>& a, const std::vector<double>& b) {
  double out = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k) out = std::max(out, std::abs(a[k] - b[k]));
  return out;
}

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> p) : p_(std::move(p)) {
  if (p_.empty()) {
    throw Error(ErrorKind::kValidation, "probability vector is empty");
  }
  double sum = 0.0;
  for (std::size_t k = 0; k < p_.size(); ++k) {
    if (!std::isfinite(p_[k]) || p_[k] < 0.0) {
      throw Error(ErrorKind::kValidation,
                  "probabilities must be finite and non-negative", k);
    }
    sum += p_[k];
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw Error(ErrorKind::kValidation, "probabilities must sum to 1");
  }
  for (double& v : p_) v /= sum;
}

ProbabilityVector ProbabilityVector::uniform(int m) {
  if (m < 1) throw Error(ErrorKind::kValidation, "uniform needs m >= 1");
  return ProbabilityVector(std::vector<double>(m, 1.0 / m));
}

bool ProbabilityVector::is_interior(double floor) const {
  return std::all_of(p_.begin(), p_.end(), [&](double v) { return v >= floor; });
}

CensoredLikelihood::CensoredLikelihood(const ConstraintSet& c, Execution exec,
                                       std::uint64_t cap)
    : spec_(spec_of(c)), exec_(exec) {
  const std::vector<LatticePoint> members = enumerate_constraint(c, cap);
  if (members.empty()) {
    throw Error(ErrorKind::kEmpty, "likelihood of an empty constraint set");
  }
  counts_.reserve(members.size() * spec_.m());
  log_coeff_.reserve(members.size());
  for (const LatticePoint& x : members) {
    counts_.insert(counts_.end(), x.counts().begin(), x.counts().end());
    double lc = std::lgamma(spec_.n() + 1.0);
    for (int v : x.counts()) lc -= std::lgamma(v + 1.0);
    log_coeff_.push_back(lc);
  }
}

void CensoredLikelihood::log_terms(std::span<const double> p,
                                   std::vector<double>& out) const {
  const std::size_t m = spec_.m();
  std::vector<double> logp(m);
  for (std::size_t k = 0; k < m; ++k) logp[k] = p[k] > 0.0 ? std::log(p[k]) : kNegInf;
  const long long count = static_cast<long long>(log_coeff_.size());
  out.resize(count);
  auto one = [&](long long t) {
    const int* x = &counts_[t * m];
    double v = log_coeff_[t];
    for (std::size_t k = 0; k < m; ++k) {
      if (x[k] > 0) v += x[k] * logp[k];
    }
    out[t] = v;
  };
  if (exec_ == Execution::kSerial) {
    for (long long t = 0; t < count; ++t) one(t);
  } else {
#pragma omp parallel for schedule(static)
    for (long long t = 0; t < count; ++t) one(t);
  }
}

double CensoredLikelihood::log_likelihood(std::span<const double> p) const {
  check_length(spec_, p.size());
  std::vector<double> terms;
  log_terms(p, terms);
  return ordered_log_sum(terms);
}

std::vector<double> CensoredLikelihood::conditional_expectation(
    std::span<const double> p) const {
  check_length(spec_, p.size());
  std::vector<double> terms;
  log_terms(p, terms);
  const double total = ordered_log_sum(terms);
  if (total == kNegInf) {
    throw Error(ErrorKind::kNumeric, "likelihood is zero at this p");
  }
  const std::size_t m = spec_.m();
  std::vector<double> mean(m, 0.0);
  for (std::size_t t = 0; t < terms.size(); ++t) {
    const double weight = std::exp(terms[t] - total);
    const int* x = &counts_[t * m];
    for (std::size_t k = 0; k < m; ++k) mean[k] += weight * x[k];
  }
  return mean;
}

ProbabilityVector CensoredLikelihood::em_step(const ProbabilityVector& p) const {
  check_length(spec_, p.size());
  if (spec_.n() == 0) return p;
  std::vector<double> next = conditional_expectation(p.values());
  const double total = std::accumulate(next.begin(), next.end(), 0.0);
  for (double& v : next) v /= total;
  return ProbabilityVector(std::move(next));
}

std::vector<double> CensoredLikelihood::score(std::span<const double> p) const {
  check_length(spec_, p.size());
  const std::size_t m = spec_.m();
  std::vector<double> terms;
  log_terms(p, terms);
  const double total = ordered_log_sum(terms);
  if (total == kNegInf) {
    throw Error(ErrorKind::kNumeric, "likelihood is zero at this p");
  }
  std::vector<double> logp(m);
  for (std::size_t k = 0; k < m; ++k) logp[k] = p[k] > 0.0 ? std::log(p[k]) : kNegInf;
  std::vector<double> out(m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    for (std::size_t t = 0; t < log_coeff_.size(); ++t) {
      const int* x = &counts_[t * m];
      if (x[j] == 0) continue;
      // log(x_j * coeff * p^(x - e_j))
      double v = log_coeff_[t] + std::log(static_cast<double>(x[j]));
      for (std::size_t k = 0; k < m; ++k) {
        const int e = x[k] - (k == j ? 1 : 0);
        if (e > 0) v += e * logp[k];
      }
      if (v != kNegInf) out[j] += std::exp(v - total);
    }
  }
  return out;
}

double log_likelihood(const ConstraintSet& c, const ProbabilityVector& p) {
  return CensoredLikelihood(c).log_likelihood(p.values());
}

std::vector<double> conditional_expectation(const ConstraintSet& c,
                                            const ProbabilityVector& p) {
  return CensoredLikelihood(c).conditional_expectation(p.values());
}

ProbabilityVector em_step(const ConstraintSet& c, const ProbabilityVector& p) {
  return CensoredLikelihood(c).em_step(p);
}

MleResult mle(const CensoredLikelihood& model, const ProbabilityVector& p0,
              const MleOptions& options) {
  const SimplexSpec& spec = model.spec();
  check_length(spec, p0.size());
  if (!p0.is_interior(options.floor)) {
    throw Error(ErrorKind::kPrecondition, "EM needs a strictly interior start");
  }
  const std::size_t m = spec.m();
  const double n = spec.n();

  std::vector<double> p = p0.values();
  double ll = model.log_likelihood(p);
  if (ll == kNegInf) {
    throw Error(ErrorKind::kNumeric, "likelihood underflows at the start point");
  }
  MleResult result;
  if (options.trace) result.trace.emplace_back(0, ll);

  auto renormalized_without = [&](const std::vector<double>& q, std::size_t j) {
    std::vector<double> out = q;
    out[j] = 0.0;
    const double total = std::accumulate(out.begin(), out.end(), 0.0);
    for (double& v : out) v /= total;
    return out;
  };

  int reentries = 0;
  for (int it = 1; it <= options.max_iter; ++it) {
    std::vector<double> q = model.em_step(ProbabilityVector(p)).values();
    double llq = model.log_likelihood(q);

    for (std::size_t j = 0; j < m; ++j) {
      if (!(q[j] > 0.0 && q[j] < options.snap_threshold && q[j] < p[j])) continue;
      std::vector<double> face = renormalized_without(q, j);
      const double ll_face = model.log_likelihood(face);
      if (ll_face == kNegInf || ll_face < llq) continue;
      if (model.score(face)[j] > n * (1.0 + 1e-9)) continue;
      q = std::move(face);
      llq = ll_face;
    }

    const double change = sup_distance(p, q);
    p = std::move(q);
    ll = llq;
    result.iterations = it;
    if (options.trace) result.trace.emplace_back(it, ll);
    if (change >= options.tol) continue;

    // At a fixed point: leave any face whose first-order condition fails.
    bool moved = false;
    if (reentries < 8) {
      const std::vector<double> s = model.score(p);
      for (std::size_t j = 0; j < m && !moved; ++j) {
        if (p[j] > 0.0 || s[j] <= n * (1.0 + 1e-7)) continue;
        for (double delta = options.snap_threshold; delta > 1e-12; delta /= 2) {
          std::vector<double> cand = p;
          for (double& v : cand) v *= 1.0 - delta;
          cand[j] += delta;
          const double ll_cand = model.log_likelihood(cand);
          if (ll_cand > ll) {
            p = std::move(cand);
            ll = ll_cand;
            moved = true;
            ++reentries;
            break;
          }
        }
      }
    }
    if (!moved) {
      result.converged = true;
      break;
    }
  }

  result.p_hat = p;
  result.log_likelihood = ll;
  result.boundary_flags.resize(m);
  for (std::size_t j = 0; j < m; ++j) result.boundary_flags[j] = p[j] < options.floor;
  return result;
}

MleResult mle(const ConstraintSet& c, const ProbabilityVector& p0,
              const MleOptions& options) {
  return mle(CensoredLikelihood(c, options.exec), p0, options);
}

std::vector<MleResult> mle_restarts(const ConstraintSet& c, int restarts,
                                    std::uint64_t seed,
                                    const MleOptions& options) {
  const CensoredLikelihood model(c, options.exec);
  std::mt19937_64 rng(seed);
  std::exponential_distribution<double> expo(1.0);
  std::vector<MleResult> out;
  for (int r = 0; r < restarts; ++r) {
    std::vector<double> start(model.spec().m());
    double total = 0.0;
    for (double& v : start) {
      v = expo(rng) + 1e-3;
      total += v;
    }
    for (double& v : start) v /= total;
    out.push_back(mle(model, ProbabilityVector(std::move(start)), options));
  }
  return out;
}

}  // namespace mconvex
