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

#include "mconvex/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <functional>

#include "mconvex/error.hpp"

namespace mconvex {

std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& h) {
  if (h.rows() != h.cols()) {
    throw Error(ErrorKind::kDimension, "eigenvalues of a non-square matrix");
  }
  if (h.rows() == 0) return {};
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw Error(ErrorKind::kNumeric, "symmetric eigensolver did not converge");
  }
  std::vector<double> out(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + h.rows());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double max_abs_entry(const Eigen::MatrixXd& h) {
  return h.size() == 0 ? 0.0 : h.cwiseAbs().maxCoeff();
}

Eigen::MatrixXd to_double(const RationalMatrix& h) {
  const auto n = static_cast<Eigen::Index>(h.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index a = 0; a < n; ++a) {
    for (Eigen::Index b = 0; b < n; ++b) out(a, b) = h[a][b].get_d();
  }
  return out;
}

}  // namespace mconvex
