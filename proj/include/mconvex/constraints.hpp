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

#ifndef MCONVEX_CONSTRAINTS_HPP_
#define MCONVEX_CONSTRAINTS_HPP_

#include <cstdint>
#include <string_view>
#include <variant>
#include <vector>

#include "mconvex/simplex.hpp"

namespace mconvex {

// R(l, u): points of the simplex with l_j <= x_j <= u_j for every j.
class Rectangle {
 public:
  // Requires 0 <= l_j <= u_j <= n and vectors of length m.
  Rectangle(const SimplexSpec& spec, std::vector<int> lower,
            std::vector<int> upper);

  const SimplexSpec& spec() const { return spec_; }
  const std::vector<int>& lower() const { return lower_; }
  const std::vector<int>& upper() const { return upper_; }

  bool operator==(const Rectangle&) const = default;

 private:
  SimplexSpec spec_;
  std::vector<int> lower_;
  std::vector<int> upper_;
};

// W(l, u): points of the simplex whose partial sums satisfy
// l_k <= S_k <= u_k for k = 1..m-1. Both bound vectors must be
// non-decreasing; non-monotone bounds are rejected, not normalized.
class PartialSumRectangle {
 public:
  PartialSumRectangle(const SimplexSpec& spec, std::vector<int> lower,
                      std::vector<int> upper);

  const SimplexSpec& spec() const { return spec_; }
  const std::vector<int>& lower() const { return lower_; }
  const std::vector<int>& upper() const { return upper_; }

  bool operator==(const PartialSumRectangle&) const = default;

 private:
  SimplexSpec spec_;
  std::vector<int> lower_;
  std::vector<int> upper_;
};

// An arbitrary subset of one simplex, kept sorted and deduplicated so set
// equality is list equality.
class ExplicitSet {
 public:
  ExplicitSet(const SimplexSpec& spec, std::vector<LatticePoint> points);

  const SimplexSpec& spec() const { return spec_; }
  const std::vector<LatticePoint>& points() const { return points_; }
  bool empty() const { return points_.empty(); }
  bool contains(const LatticePoint& x) const;

  bool operator==(const ExplicitSet&) const = default;

 private:
  SimplexSpec spec_;
  std::vector<LatticePoint> points_;
};

using ConstraintSet = std::variant<Rectangle, PartialSumRectangle, ExplicitSet>;

const SimplexSpec& spec_of(const ConstraintSet& c);
std::string_view constraint_type(const ConstraintSet& c);

// Membership. Throws Error(kDimension) if x is not a point of the
// constraint's simplex.
bool rectangle_contains(const Rectangle& r, const LatticePoint& x);
bool psr_contains(const PartialSumRectangle& w, const LatticePoint& x);
bool contains(const ConstraintSet& c, const LatticePoint& x);

// Members in lexicographic order. Rectangles and partial-sum rectangles are
// generated by depth-first search with pruning, never by filtering the
// whole simplex. Throws Error(kCapacity) past `cap` points.
std::vector<LatticePoint> enumerate_constraint(
    const ConstraintSet& c, std::uint64_t cap = default_enumeration_cap());

ExplicitSet to_explicit(const ConstraintSet& c,
                        std::uint64_t cap = default_enumeration_cap());

// m = 2: W(l_1, u_1) is the rectangle {l_1..u_1} x {n-u_1..n-l_1}.
Rectangle rectangle_from_psr_m2(const PartialSumRectangle& w);

// m = 3: W is the rectangle
// {l_1..u_1} x {(l_2-u_1)^+ .. u_2-l_1} x {n-u_2 .. n-l_2}.
Rectangle psr_to_rectangle_m3(const PartialSumRectangle& w);

// Smallest rectangle / partial-sum rectangle containing a non-empty set.
Rectangle minimal_bounding_rectangle(const ExplicitSet& points);
PartialSumRectangle minimal_bounding_psr(const ExplicitSet& points);

}  // namespace mconvex

#endif  // MCONVEX_CONSTRAINTS_HPP_
