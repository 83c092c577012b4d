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

#ifndef MCONVEX_SIMPLEX_HPP_
#define MCONVEX_SIMPLEX_HPP_

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace mconvex {

// Exact non-negative integer (multinomial coefficients, set cardinalities).
using BigCount = mpz_class;

// The discrete simplex of m-vectors of non-negative integers summing to n.
class SimplexSpec {
 public:
  // Throws Error(kValidation) unless m >= 2 and n >= 0.
  SimplexSpec(int m, int n);

  int m() const { return m_; }
  int n() const { return n_; }

  bool operator==(const SimplexSpec&) const = default;

 private:
  int m_;
  int n_;
};

// A vector of non-negative counts. Membership in a particular simplex is
// checked against a SimplexSpec where it matters.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<int> counts);
  LatticePoint(std::initializer_list<int> counts);

  std::size_t size() const { return counts_.size(); }
  int operator[](std::size_t k) const { return counts_[k]; }
  const std::vector<int>& counts() const { return counts_; }
  int total() const;

  auto operator<=>(const LatticePoint&) const = default;
  bool operator==(const LatticePoint&) const = default;

 private:
  std::vector<int> counts_;
};

bool belongs_to(const LatticePoint& x, const SimplexSpec& spec);

// Enumeration cap: 10^7 points unless MCONVEX_ENUM_CAP is set.
std::uint64_t default_enumeration_cap();

// Every point of the simplex, lexicographic on counts.
std::vector<LatticePoint> enumerate_simplex(
    const SimplexSpec& spec, std::uint64_t cap = default_enumeration_cap());

// C(n + m - 1, m - 1).
BigCount simplex_size(const SimplexSpec& spec);

// (S_1, ..., S_m) with S_k = x_1 + ... + x_k.
std::vector<int> partial_sums(const LatticePoint& x);

// n! / (x_1! ... x_m!) with n = x.total().
BigCount multinomial_coefficient(const LatticePoint& x);
BigCount multinomial_coefficient(std::span<const int> counts);

}  // namespace mconvex

#endif  // MCONVEX_SIMPLEX_HPP_
