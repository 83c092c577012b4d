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

#ifndef MCONVEX_LINALG_HPP_
#define MCONVEX_LINALG_HPP_

#include <Eigen/Dense>
#include <vector>

#include "mconvex/polynomial.hpp"

namespace mconvex {

// Eigenvalues of a symmetric matrix, sorted descending.
std::vector<double> symmetric_eigenvalues(const Eigen::MatrixXd& h);

double max_abs_entry(const Eigen::MatrixXd& h);

Eigen::MatrixXd to_double(const RationalMatrix& h);

}  // namespace mconvex

#endif  // MCONVEX_LINALG_HPP_
