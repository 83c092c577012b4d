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

#include "mconvex/simplex.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "mconvex/error.hpp"

namespace mconvex {

SimplexSpec::SimplexSpec(int m, int n) : m_(m), n_(n) {
  if (m < 2) {
    throw Error(ErrorKind::kValidation,
                "simplex needs m >= 2 categories, got " + std::to_string(m));
  }
  if (n < 0) {
    throw Error(ErrorKind::kValidation,
                "sample size must be non-negative, got " + std::to_string(n));
  }
}

LatticePoint::LatticePoint(std::vector<int> counts)
    : counts_(std::move(counts)) {
  for (std::size_t k = 0; k < counts_.size(); ++k) {
    if (counts_[k] < 0) {
      throw Error(ErrorKind::kValidation, "lattice point has a negative count",
                  k);
    }
  }
}

LatticePoint::LatticePoint(std::initializer_list<int> counts)
    : LatticePoint(std::vector<int>(counts)) {}

int LatticePoint::total() const {
  return std::accumulate(counts_.begin(), counts_.end(), 0);
}

bool belongs_to(const LatticePoint& x, const SimplexSpec& spec) {
  return static_cast<int>(x.size()) == spec.m() && x.total() == spec.n();
}

std::uint64_t default_enumeration_cap() {
  static const std::uint64_t cap = [] {
    if (const char* env = std::getenv("MCONVEX_ENUM_CAP")) {
      char* end = nullptr;
      const unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) return std::uint64_t{v};
    }
    return std::uint64_t{10'000'000};
  }();
  return cap;
}

BigCount simplex_size(const SimplexSpec& spec) {
  BigCount out;
  mpz_bin_uiui(out.get_mpz_t(),
               static_cast<unsigned long>(spec.n() + spec.m() - 1),
               static_cast<unsigned long>(spec.m() - 1));
  return out;
}

namespace {

void enumerate_rec(std::vector<int>& prefix, int k, int remaining,
                   std::vector<LatticePoint>& out) {
  const int m = static_cast<int>(prefix.size());
  if (k == m - 1) {
    prefix[k] = remaining;
    out.emplace_back(prefix);
    return;
  }
  for (int v = 0; v <= remaining; ++v) {
    prefix[k] = v;
    enumerate_rec(prefix, k + 1, remaining - v, out);
  }
}

}  // namespace

std::vector<LatticePoint> enumerate_simplex(const SimplexSpec& spec,
                                            std::uint64_t cap) {
  const BigCount size = simplex_size(spec);
  if (size > BigCount(std::to_string(cap))) {
    throw Error(ErrorKind::kCapacity, "simplex of size " + size.get_str() +
                                          " exceeds enumeration cap " +
                                          std::to_string(cap));
  }
  std::vector<LatticePoint> out;
  out.reserve(size.get_ui());
  std::vector<int> prefix(spec.m(), 0);
  enumerate_rec(prefix, 0, spec.n(), out);
  return out;
}

std::vector<int> partial_sums(const LatticePoint& x) {
  std::vector<int> sums(x.size());
  std::partial_sum(x.counts().begin(), x.counts().end(), sums.begin());
  return sums;
}

BigCount multinomial_coefficient(std::span<const int> counts) {
  // Product of binomials C(x_1 + ... + x_k, x_k).
  BigCount out = 1;
  BigCount step;
  unsigned long running = 0;
  for (int c : counts) {
    running += static_cast<unsigned long>(c);
    mpz_bin_uiui(step.get_mpz_t(), running, static_cast<unsigned long>(c));
    out *= step;
  }
  return out;
}

BigCount multinomial_coefficient(const LatticePoint& x) {
  return multinomial_coefficient(std::span<const int>(x.counts()));
}

}  // namespace mconvex
