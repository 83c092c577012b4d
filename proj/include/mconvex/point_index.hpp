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

#ifndef MCONVEX_POINT_INDEX_HPP_
#define MCONVEX_POINT_INDEX_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "mconvex/simplex.hpp"

namespace mconvex {

// Ranks points of the simplex in lexicographic order, so that a subset can
// be held as a bitmap over [0, size()).
class SimplexIndex {
 public:
  // Throws Error(kCapacity) when the simplex is larger than `cap`.
  explicit SimplexIndex(const SimplexSpec& spec,
                        std::uint64_t cap = default_enumeration_cap());

  const SimplexSpec& spec() const { return spec_; }
  std::uint64_t size() const { return size_; }

  // Position of `counts` in enumerate_simplex(spec). Counts must lie in the
  // simplex.
  std::uint64_t rank(std::span<const int> counts) const;

 private:
  // binom_[a][b] = C(a, b) for a <= n + m.
  std::uint64_t binom(int a, int b) const;

  SimplexSpec spec_;
  std::uint64_t size_;
  std::vector<std::vector<std::uint64_t>> binom_;
};

// Membership bitmap for a subset of one simplex.
class PointSet {
 public:
  PointSet(const SimplexSpec& spec, std::span<const LatticePoint> points,
           std::uint64_t cap = default_enumeration_cap());

  const SimplexSpec& spec() const { return index_.spec(); }

  // False for vectors outside the simplex (negative entries, wrong total or
  // wrong length).
  bool contains(std::span<const int> counts) const;
  bool contains(const LatticePoint& x) const {
    return contains(std::span<const int>(x.counts()));
  }

 private:
  SimplexIndex index_;
  std::vector<bool> bits_;
};

}  // namespace mconvex

#endif  // MCONVEX_POINT_INDEX_HPP_
