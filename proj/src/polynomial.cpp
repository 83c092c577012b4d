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

#include "mconvex/polynomial.hpp"

#include <numeric>
#include <string>

#include "mconvex/error.hpp"

namespace mconvex {

namespace {

Rational rational_pow(const Rational& base, int e) {
  Rational out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

// pw[k][e] = w_k^e for e <= degree.
std::vector<std::vector<double>> power_table(std::span<const double> w,
                                             int degree) {
  std::vector<std::vector<double>> pw(w.size(),
                                      std::vector<double>(degree + 1, 1.0));
  for (std::size_t k = 0; k < w.size(); ++k) {
    for (int e = 1; e <= degree; ++e) pw[k][e] = pw[k][e - 1] * w[k];
  }
  return pw;
}

void check_point_length(const HomogeneousPolynomial& f, std::size_t len) {
  if (static_cast<int>(len) != f.m()) {
    throw Error(ErrorKind::kDimension,
                "point has " + std::to_string(len) +
                    " coordinates, polynomial has m=" + std::to_string(f.m()));
  }
}

// Product of pw[k][e_k - drop_k] over k, with the drops given by up to two
// indices.
double reduced_monomial(const std::vector<std::vector<double>>& pw,
                        const int* e, std::size_t m, std::size_t a,
                        std::size_t b, int drops) {
  double out = 1.0;
  for (std::size_t k = 0; k < m; ++k) {
    int ek = e[k];
    if (drops >= 1 && k == a) --ek;
    if (drops >= 2 && k == b) --ek;
    out *= pw[k][ek];
  }
  return out;
}

}  // namespace

HomogeneousPolynomial::HomogeneousPolynomial(int m, int degree)
    : m_(m), degree_(degree) {
  if (m < 1) throw Error(ErrorKind::kValidation, "polynomial needs m >= 1");
  if (degree < 0) {
    throw Error(ErrorKind::kValidation, "polynomial degree must be >= 0");
  }
}

HomogeneousPolynomial::HomogeneousPolynomial(int m, int degree, TermMap terms)
    : HomogeneousPolynomial(m, degree) {
  for (auto& [exp, coeff] : terms) {
    if (static_cast<int>(exp.size()) != m) {
      throw Error(ErrorKind::kDimension, "exponent vector has wrong length");
    }
    int total = 0;
    for (std::size_t k = 0; k < exp.size(); ++k) {
      if (exp[k] < 0) {
        throw Error(ErrorKind::kValidation, "negative exponent", k);
      }
      total += exp[k];
    }
    if (total != degree) {
      throw Error(ErrorKind::kValidation,
                  "monomial of degree " + std::to_string(total) +
                      " in a polynomial of degree " + std::to_string(degree));
    }
    coeff.canonicalize();
    if (sgn(coeff) < 0) {
      throw Error(ErrorKind::kValidation, "coefficients must be non-negative");
    }
    if (sgn(coeff) > 0) terms_.emplace(exp, coeff);
  }
}

Rational HomogeneousPolynomial::coefficient(const ExponentVector& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

DirectionVector::DirectionVector(std::vector<Rational> entries)
    : entries_(std::move(entries)) {
  bool positive = false;
  for (std::size_t k = 0; k < entries_.size(); ++k) {
    entries_[k].canonicalize();
    if (sgn(entries_[k]) < 0) {
      throw Error(ErrorKind::kValidation, "direction entries must be non-negative",
                  k);
    }
    positive = positive || sgn(entries_[k]) > 0;
  }
  if (!positive) {
    throw Error(ErrorKind::kValidation, "direction must have a positive entry");
  }
}

HomogeneousPolynomial likelihood_polynomial(const ConstraintSet& c,
                                            std::uint64_t cap) {
  const std::vector<LatticePoint> members = enumerate_constraint(c, cap);
  if (members.empty()) {
    throw Error(ErrorKind::kEmpty, "likelihood of an empty constraint set");
  }
  const SimplexSpec& spec = spec_of(c);
  HomogeneousPolynomial::TermMap terms;
  for (const LatticePoint& x : members) {
    terms.emplace_hint(terms.end(), x.counts(),
                       Rational(multinomial_coefficient(x)));
  }
  return HomogeneousPolynomial(spec.m(), spec.n(), std::move(terms));
}

Rational evaluate(const HomogeneousPolynomial& f, std::span<const Rational> w) {
  check_point_length(f, w.size());
  Rational total = 0;
  for (const auto& [exp, coeff] : f.terms()) {
    Rational term = coeff;
    for (std::size_t k = 0; k < exp.size(); ++k) term *= rational_pow(w[k], exp[k]);
    total += term;
  }
  return total;
}

double evaluate(const HomogeneousPolynomial& f, std::span<const double> w) {
  check_point_length(f, w.size());
  const auto pw = power_table(w, f.degree());
  double total = 0.0;
  for (const auto& [exp, coeff] : f.terms()) {
    double term = coeff.get_d();
    for (std::size_t k = 0; k < exp.size(); ++k) term *= pw[k][exp[k]];
    total += term;
  }
  return total;
}

HomogeneousPolynomial partial_derivative(const HomogeneousPolynomial& f,
                                         const ExponentVector& gamma) {
  if (static_cast<int>(gamma.size()) != f.m()) {
    throw Error(ErrorKind::kDimension, "derivative multi-index has wrong length");
  }
  int order = 0;
  for (std::size_t k = 0; k < gamma.size(); ++k) {
    if (gamma[k] < 0) {
      throw Error(ErrorKind::kValidation, "negative derivative order", k);
    }
    order += gamma[k];
  }
  if (order > f.degree()) return HomogeneousPolynomial(f.m(), 0);

  HomogeneousPolynomial::TermMap terms;
  for (const auto& [exp, coeff] : f.terms()) {
    bool survives = true;
    for (std::size_t k = 0; k < exp.size() && survives; ++k) {
      survives = exp[k] >= gamma[k];
    }
    if (!survives) continue;
    // Falling factorials e_k (e_k - 1) ... (e_k - gamma_k + 1).
    mpz_class factor = 1;
    ExponentVector reduced(exp.size());
    for (std::size_t k = 0; k < exp.size(); ++k) {
      for (int t = 0; t < gamma[k]; ++t) factor *= exp[k] - t;
      reduced[k] = exp[k] - gamma[k];
    }
    terms.emplace_hint(terms.end(), std::move(reduced), coeff * factor);
  }
  return HomogeneousPolynomial(f.m(), f.degree() - order, std::move(terms));
}

HomogeneousPolynomial directional_derivative(const HomogeneousPolynomial& f,
                                             const DirectionVector& a) {
  if (static_cast<int>(a.size()) != f.m()) {
    throw Error(ErrorKind::kDimension, "direction has wrong length");
  }
  if (f.degree() == 0) return HomogeneousPolynomial(f.m(), 0);
  HomogeneousPolynomial::TermMap terms;
  for (const auto& [exp, coeff] : f.terms()) {
    for (std::size_t j = 0; j < exp.size(); ++j) {
      if (exp[j] == 0 || sgn(a.entries()[j]) == 0) continue;
      ExponentVector reduced = exp;
      --reduced[j];
      terms[reduced] += coeff * a.entries()[j] * exp[j];
    }
  }
  return HomogeneousPolynomial(f.m(), f.degree() - 1, std::move(terms));
}

RationalMatrix hessian(const HomogeneousPolynomial& f,
                       std::span<const Rational> w) {
  check_point_length(f, w.size());
  const std::size_t m = f.m();
  RationalMatrix h(m, std::vector<Rational>(m, Rational(0)));
  for (const auto& [exp, coeff] : f.terms()) {
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = a; b < m; ++b) {
        const int mult = a == b ? exp[a] * (exp[a] - 1) : exp[a] * exp[b];
        if (mult == 0) continue;
        Rational term = coeff * mult;
        for (std::size_t k = 0; k < m; ++k) {
          int e = exp[k] - (k == a) - (k == b);
          term *= rational_pow(w[k], e);
        }
        h[a][b] += term;
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < a; ++b) h[a][b] = h[b][a];
  }
  return h;
}

Eigen::MatrixXd hessian(const HomogeneousPolynomial& f,
                        std::span<const double> w) {
  check_point_length(f, w.size());
  return FloatPolynomial(f).jet(w).hessian;
}

Eigen::VectorXd gradient(const HomogeneousPolynomial& f,
                         std::span<const double> w) {
  check_point_length(f, w.size());
  return FloatPolynomial(f).jet(w).gradient;
}

ExplicitSet support(const HomogeneousPolynomial& f) {
  const SimplexSpec spec(f.m(), f.degree());
  std::vector<LatticePoint> points;
  points.reserve(f.terms().size());
  for (const auto& [exp, coeff] : f.terms()) points.emplace_back(exp);
  return ExplicitSet(spec, std::move(points));
}

FloatPolynomial::FloatPolynomial(const HomogeneousPolynomial& f)
    : m_(f.m()), degree_(f.degree()) {
  exponents_.reserve(f.terms().size() * f.m());
  coeffs_.reserve(f.terms().size());
  for (const auto& [exp, coeff] : f.terms()) {
    exponents_.insert(exponents_.end(), exp.begin(), exp.end());
    coeffs_.push_back(coeff.get_d());
  }
}

double FloatPolynomial::value(std::span<const double> w) const {
  const auto pw = power_table(w, degree_);
  const std::size_t m = m_;
  double total = 0.0;
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    total += coeffs_[t] * reduced_monomial(pw, &exponents_[t * m], m, 0, 0, 0);
  }
  return total;
}

FloatPolynomial::Jet FloatPolynomial::jet(std::span<const double> w) const {
  const auto pw = power_table(w, degree_);
  const std::size_t m = m_;
  Jet out;
  out.gradient = Eigen::VectorXd::Zero(m);
  out.hessian = Eigen::MatrixXd::Zero(m, m);
  for (std::size_t t = 0; t < coeffs_.size(); ++t) {
    const int* e = &exponents_[t * m];
    const double c = coeffs_[t];
    out.value += c * reduced_monomial(pw, e, m, 0, 0, 0);
    for (std::size_t a = 0; a < m; ++a) {
      if (e[a] == 0) continue;
      out.gradient[a] += c * e[a] * reduced_monomial(pw, e, m, a, 0, 1);
      if (e[a] >= 2) {
        out.hessian(a, a) +=
            c * e[a] * (e[a] - 1) * reduced_monomial(pw, e, m, a, a, 2);
      }
      for (std::size_t b = a + 1; b < m; ++b) {
        if (e[b] == 0) continue;
        out.hessian(a, b) += c * e[a] * e[b] * reduced_monomial(pw, e, m, a, b, 2);
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < a; ++b) out.hessian(a, b) = out.hessian(b, a);
  }
  return out;
}

}  // namespace mconvex
