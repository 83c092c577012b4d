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

#include "mconvex/point_index.hpp"

#include <string>

#include "mconvex/error.hpp"

namespace mconvex {

SimplexIndex::SimplexIndex(const SimplexSpec& spec, std::uint64_t cap)
    : spec_(spec) {
  const BigCount size = simplex_size(spec);
  if (size > BigCount(std::to_string(cap))) {
    throw Error(ErrorKind::kCapacity, "simplex of size " + size.get_str() +
                                          " exceeds enumeration cap " +
                                          std::to_string(cap));
  }
  size_ = size.get_ui();
  const int top = spec.n() + spec.m();
  binom_.assign(top + 1, std::vector<std::uint64_t>(spec.m() + 1, 0));
  for (int a = 0; a <= top; ++a) {
    binom_[a][0] = 1;
    for (int b = 1; b <= spec.m() && b <= a; ++b) {
      binom_[a][b] = binom_[a - 1][b - 1] + (b <= a - 1 ? binom_[a - 1][b] : 0);
    }
  }
}

std::uint64_t SimplexIndex::binom(int a, int b) const {
  if (b < 0 || a < b) return 0;
  return binom_[a][b];
}

std::uint64_t SimplexIndex::rank(std::span<const int> counts) const {
  // Points before x with the same first k coordinates and a smaller
  // coordinate k: sum over v < x_k of C(rem - v + c - 1, c - 1) with
  // c = m - k - 1 trailing slots, which telescopes by the hockey stick
  // identity to C(rem + c, c) - C(rem - x_k + c, c).
  const int m = spec_.m();
  std::uint64_t r = 0;
  int rem = spec_.n();
  for (int k = 0; k + 1 < m; ++k) {
    const int c = m - k - 1;
    const int x = counts[k];
    r += binom(rem + c, c) - binom(rem - x + c, c);
    rem -= x;
  }
  return r;
}

PointSet::PointSet(const SimplexSpec& spec, std::span<const LatticePoint> points,
                   std::uint64_t cap)
    : index_(spec, cap), bits_(index_.size(), false) {
  for (const LatticePoint& x : points) {
    if (!belongs_to(x, spec)) {
      throw Error(ErrorKind::kDimension, "point does not lie in the simplex");
    }
    bits_[index_.rank(x.counts())] = true;
  }
}

bool PointSet::contains(std::span<const int> counts) const {
  const SimplexSpec& spec = index_.spec();
  if (static_cast<int>(counts.size()) != spec.m()) return false;
  int total = 0;
  for (int c : counts) {
    if (c < 0) return false;
    total += c;
  }
  if (total != spec.n()) return false;
  return bits_[index_.rank(counts)];
}

}  // namespace mconvex
