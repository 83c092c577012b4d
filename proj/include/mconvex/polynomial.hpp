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

#ifndef MCONVEX_POLYNOMIAL_HPP_
#define MCONVEX_POLYNOMIAL_HPP_

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "mconvex/constraints.hpp"

namespace mconvex {

using Rational = mpq_class;
using ExponentVector = std::vector<int>;
using RationalMatrix = std::vector<std::vector<Rational>>;

// Sparse homogeneous polynomial with exact positive coefficients. Terms are
// keyed by exponent vector in lexicographic order; absent monomials have
// coefficient zero. The zero polynomial is an empty term map with a
// declared degree.
class HomogeneousPolynomial {
 public:
  using TermMap = std::map<ExponentVector, Rational>;

  HomogeneousPolynomial(int m, int degree);
  // Validates lengths, degrees and positivity; zero coefficients are dropped,
  // negative ones rejected.
  HomogeneousPolynomial(int m, int degree, TermMap terms);

  int m() const { return m_; }
  int degree() const { return degree_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Rational coefficient(const ExponentVector& exponent) const;

  bool operator==(const HomogeneousPolynomial&) const = default;

 private:
  int m_;
  int degree_;
  TermMap terms_;
};

// Non-negative direction a with at least one positive entry; stands for the
// operator sum_j a_j d/dw_j.
class DirectionVector {
 public:
  explicit DirectionVector(std::vector<Rational> entries);

  std::size_t size() const { return entries_.size(); }
  const std::vector<Rational>& entries() const { return entries_; }

 private:
  std::vector<Rational> entries_;
};

// sum over x in C of multinomial(x) w^x.
HomogeneousPolynomial likelihood_polynomial(
    const ConstraintSet& c, std::uint64_t cap = default_enumeration_cap());

Rational evaluate(const HomogeneousPolynomial& f, std::span<const Rational> w);
// Double accumulation in lexicographic term order.
double evaluate(const HomogeneousPolynomial& f, std::span<const double> w);

// d^gamma f. Over-differentiation gives the zero polynomial.
HomogeneousPolynomial partial_derivative(const HomogeneousPolynomial& f,
                                         const ExponentVector& gamma);

HomogeneousPolynomial directional_derivative(const HomogeneousPolynomial& f,
                                             const DirectionVector& a);

RationalMatrix hessian(const HomogeneousPolynomial& f,
                       std::span<const Rational> w);
Eigen::MatrixXd hessian(const HomogeneousPolynomial& f,
                        std::span<const double> w);
Eigen::VectorXd gradient(const HomogeneousPolynomial& f,
                         std::span<const double> w);

// Exponent vectors carrying a positive coefficient. Needs m >= 2.
ExplicitSet support(const HomogeneousPolynomial& f);

// Double-precision copy of a polynomial for repeated evaluation of value,
// gradient and Hessian at a point.
class FloatPolynomial {
 public:
  explicit FloatPolynomial(const HomogeneousPolynomial& f);

  struct Jet {
    double value = 0.0;
    Eigen::VectorXd gradient;
    Eigen::MatrixXd hessian;
  };

  int m() const { return m_; }
  int degree() const { return degree_; }
  bool is_zero() const { return coeffs_.empty(); }
  double value(std::span<const double> w) const;
  Jet jet(std::span<const double> w) const;

 private:
  int m_;
  int degree_;
  std::vector<int> exponents_;  // term-major, m entries per term
  std::vector<double> coeffs_;
};

}  // namespace mconvex

#endif  // MCONVEX_POLYNOMIAL_HPP_
