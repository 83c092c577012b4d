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

#include "mconvex/constraints.hpp"

#include <algorithm>
#include <string>

#include "mconvex/error.hpp"

namespace mconvex {

namespace {

void check_bounds_length(const std::vector<int>& v, std::size_t want,
                         const char* name) {
  if (v.size() != want) {
    throw Error(ErrorKind::kDimension, std::string(name) + " has length " +
                                           std::to_string(v.size()) +
                                           ", expected " +
                                           std::to_string(want));
  }
}

void check_point(const SimplexSpec& spec, const LatticePoint& x) {
  if (static_cast<int>(x.size()) != spec.m()) {
    throw Error(ErrorKind::kDimension,
                "point has " + std::to_string(x.size()) +
                    " coordinates, constraint has m=" + std::to_string(spec.m()));
  }
  if (x.total() != spec.n()) {
    throw Error(ErrorKind::kDimension,
                "point sums to " + std::to_string(x.total()) +
                    ", constraint has n=" + std::to_string(spec.n()));
  }
}

void throw_capacity(std::uint64_t cap) {
  throw Error(ErrorKind::kCapacity, "constraint enumeration exceeds cap " +
                                        std::to_string(cap));
}

// Lexicographic DFS over coordinates with interval and reachability
// pruning: after fixing x_0..x_k the remainder must fit in the remaining
// coordinates' [sum l, sum u].
void enumerate_rectangle(const Rectangle& r, std::uint64_t cap,
                         std::vector<LatticePoint>& out) {
  const int m = r.spec().m();
  const auto& lo = r.lower();
  const auto& hi = r.upper();
  std::vector<int> tail_lo(m + 1, 0), tail_hi(m + 1, 0);
  for (int k = m - 1; k >= 0; --k) {
    tail_lo[k] = tail_lo[k + 1] + lo[k];
    tail_hi[k] = tail_hi[k + 1] + hi[k];
  }
  std::vector<int> x(m, 0);
  auto rec = [&](auto&& self, int k, int rem) -> void {
    if (k == m - 1) {
      if (rem >= lo[k] && rem <= hi[k]) {
        x[k] = rem;
        if (out.size() >= cap) throw_capacity(cap);
        out.emplace_back(x);
      }
      return;
    }
    const int top = std::min(hi[k], rem);
    for (int v = lo[k]; v <= top; ++v) {
      const int left = rem - v;
      if (left < tail_lo[k + 1]) break;
      if (left > tail_hi[k + 1]) continue;
      x[k] = v;
      self(self, k + 1, left);
    }
  };
  if (r.spec().n() >= tail_lo[0] && r.spec().n() <= tail_hi[0]) {
    rec(rec, 0, r.spec().n());
  }
}

// DFS over prefixes; S_k must stay inside [l_k, u_k] and never pass n.
void enumerate_psr(const PartialSumRectangle& w, std::uint64_t cap,
                   std::vector<LatticePoint>& out) {
  const int m = w.spec().m();
  const int n = w.spec().n();
  const auto& lo = w.lower();
  const auto& hi = w.upper();
  std::vector<int> x(m, 0);
  auto rec = [&](auto&& self, int k, int sum) -> void {
    if (k == m - 1) {
      x[k] = n - sum;
      if (out.size() >= cap) throw_capacity(cap);
      out.emplace_back(x);
      return;
    }
    const int first = std::max(lo[k] - sum, 0);
    const int last = std::min(hi[k], n) - sum;
    for (int v = first; v <= last; ++v) {
      x[k] = v;
      self(self, k + 1, sum + v);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace

Rectangle::Rectangle(const SimplexSpec& spec, std::vector<int> lower,
                     std::vector<int> upper)
    : spec_(spec), lower_(std::move(lower)), upper_(std::move(upper)) {
  const std::size_t m = spec.m();
  check_bounds_length(lower_, m, "rectangle lower bound");
  check_bounds_length(upper_, m, "rectangle upper bound");
  for (std::size_t j = 0; j < m; ++j) {
    if (lower_[j] < 0 || upper_[j] > spec.n() || lower_[j] > upper_[j]) {
      throw Error(ErrorKind::kValidation,
                  "rectangle bounds need 0 <= l <= u <= n at index " +
                      std::to_string(j + 1),
                  j);
    }
  }
}

PartialSumRectangle::PartialSumRectangle(const SimplexSpec& spec,
                                         std::vector<int> lower,
                                         std::vector<int> upper)
    : spec_(spec), lower_(std::move(lower)), upper_(std::move(upper)) {
  const std::size_t len = spec.m() - 1;
  check_bounds_length(lower_, len, "partial sum lower bound");
  check_bounds_length(upper_, len, "partial sum upper bound");
  for (std::size_t k = 0; k < len; ++k) {
    const std::string at = " at index " + std::to_string(k + 1);
    if (lower_[k] < 0 || lower_[k] > spec.n() || upper_[k] < 0 ||
        upper_[k] > spec.n()) {
      throw Error(ErrorKind::kValidation,
                  "partial sum bound outside [0, n]" + at, k);
    }
    if (lower_[k] > upper_[k]) {
      throw Error(ErrorKind::kValidation, "partial sum bound has l > u" + at,
                  k);
    }
    if (k > 0 && lower_[k] < lower_[k - 1]) {
      throw Error(ErrorKind::kValidation,
                  "partial sum lower bound is not non-decreasing" + at, k);
    }
    if (k > 0 && upper_[k] < upper_[k - 1]) {
      throw Error(ErrorKind::kValidation,
                  "partial sum upper bound is not non-decreasing" + at, k);
    }
  }
}

ExplicitSet::ExplicitSet(const SimplexSpec& spec,
                         std::vector<LatticePoint> points)
    : spec_(spec), points_(std::move(points)) {
  for (std::size_t k = 0; k < points_.size(); ++k) {
    if (!belongs_to(points_[k], spec)) {
      throw Error(ErrorKind::kDimension,
                  "explicit set member " + std::to_string(k + 1) +
                      " is not a point of the simplex",
                  k);
    }
  }
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool ExplicitSet::contains(const LatticePoint& x) const {
  check_point(spec_, x);
  return std::binary_search(points_.begin(), points_.end(), x);
}

const SimplexSpec& spec_of(const ConstraintSet& c) {
  return std::visit([](const auto& v) -> const SimplexSpec& { return v.spec(); },
                    c);
}

std::string_view constraint_type(const ConstraintSet& c) {
  switch (c.index()) {
    case 0:
      return "rectangle";
    case 1:
      return "psr";
    default:
      return "explicit";
  }
}

bool rectangle_contains(const Rectangle& r, const LatticePoint& x) {
  check_point(r.spec(), x);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < r.lower()[j] || x[j] > r.upper()[j]) return false;
  }
  return true;
}

bool psr_contains(const PartialSumRectangle& w, const LatticePoint& x) {
  check_point(w.spec(), x);
  int sum = 0;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    sum += x[k];
    if (sum < w.lower()[k] || sum > w.upper()[k]) return false;
  }
  return true;
}

bool contains(const ConstraintSet& c, const LatticePoint& x) {
  switch (c.index()) {
    case 0:
      return rectangle_contains(std::get<Rectangle>(c), x);
    case 1:
      return psr_contains(std::get<PartialSumRectangle>(c), x);
    default:
      return std::get<ExplicitSet>(c).contains(x);
  }
}

std::vector<LatticePoint> enumerate_constraint(const ConstraintSet& c,
                                               std::uint64_t cap) {
  std::vector<LatticePoint> out;
  switch (c.index()) {
    case 0:
      enumerate_rectangle(std::get<Rectangle>(c), cap, out);
      break;
    case 1:
      enumerate_psr(std::get<PartialSumRectangle>(c), cap, out);
      break;
    default: {
      const auto& points = std::get<ExplicitSet>(c).points();
      if (points.size() > cap) throw_capacity(cap);
      out = points;
    }
  }
  return out;
}

ExplicitSet to_explicit(const ConstraintSet& c, std::uint64_t cap) {
  return ExplicitSet(spec_of(c), enumerate_constraint(c, cap));
}

Rectangle rectangle_from_psr_m2(const PartialSumRectangle& w) {
  if (w.spec().m() != 2) {
    throw Error(ErrorKind::kPrecondition,
                "rectangle_from_psr_m2 needs m = 2, got m=" +
                    std::to_string(w.spec().m()));
  }
  const int n = w.spec().n();
  const int l1 = w.lower()[0];
  const int u1 = w.upper()[0];
  return Rectangle(w.spec(), {l1, n - u1}, {u1, n - l1});
}

Rectangle psr_to_rectangle_m3(const PartialSumRectangle& w) {
  if (w.spec().m() != 3) {
    throw Error(ErrorKind::kPrecondition,
                "psr_to_rectangle_m3 needs m = 3, got m=" +
                    std::to_string(w.spec().m()));
  }
  const int n = w.spec().n();
  const int l1 = w.lower()[0], l2 = w.lower()[1];
  const int u1 = w.upper()[0], u2 = w.upper()[1];
  return Rectangle(w.spec(), {l1, std::max(l2 - u1, 0), n - u2},
                   {u1, u2 - l1, n - l2});
}

Rectangle minimal_bounding_rectangle(const ExplicitSet& points) {
  if (points.empty()) {
    throw Error(ErrorKind::kEmpty, "bounding rectangle of an empty set");
  }
  std::vector<int> lo = points.points().front().counts();
  std::vector<int> hi = lo;
  for (const LatticePoint& x : points.points()) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      lo[j] = std::min(lo[j], x[j]);
      hi[j] = std::max(hi[j], x[j]);
    }
  }
  return Rectangle(points.spec(), std::move(lo), std::move(hi));
}

PartialSumRectangle minimal_bounding_psr(const ExplicitSet& points) {
  if (points.empty()) {
    throw Error(ErrorKind::kEmpty, "bounding partial sum rectangle of an empty set");
  }
  const std::size_t len = points.spec().m() - 1;
  std::vector<int> first = partial_sums(points.points().front());
  std::vector<int> lo(first.begin(), first.begin() + len);
  std::vector<int> hi = lo;
  for (const LatticePoint& x : points.points()) {
    const std::vector<int> s = partial_sums(x);
    for (std::size_t k = 0; k < len; ++k) {
      lo[k] = std::min(lo[k], s[k]);
      hi[k] = std::max(hi[k], s[k]);
    }
  }
  return PartialSumRectangle(points.spec(), std::move(lo), std::move(hi));
}

}  // namespace mconvex
