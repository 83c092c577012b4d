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

#include <doctest.h>

#include <cmath>
#include <random>

#include "mconvex/battery.hpp"
#include "mconvex/certification.hpp"
#include "mconvex/error.hpp"
#include "mconvex/linalg.hpp"
#include "oracles.hpp"

using namespace mconvex;

namespace {

using Terms = HomogeneousPolynomial::TermMap;

HomogeneousPolynomial poly(int m, int d, Terms t) {
  return HomogeneousPolynomial(m, d, std::move(t));
}

const HomogeneousPolynomial k2w1w2 = poly(2, 2, {{{1, 1}, 2}});
const HomogeneousPolynomial kSquare = poly(2, 2, {{{2, 0}, 1}, {{1, 1}, 2}, {{0, 2}, 1}});
const HomogeneousPolynomial kSumSq = poly(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}});

double fd_log_max_eig(const HomogeneousPolynomial& f, const std::vector<double>& w) {
  std::map<oracle::Point, double> terms;
  for (const auto& [e, c] : f.terms()) terms[e] = c.get_d();
  const auto logf = [&](const std::vector<double>& x) {
    return std::log(oracle::poly_value(terms, x));
  };
  const Eigen::MatrixXd h = oracle::fd_hessian(logf, w, 1e-4);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
  return es.eigenvalues().maxCoeff();
}

}  // namespace

TEST_CASE("count_positive uses a relative threshold") {
  const std::vector<double> eig{2.0, 1e-12, -2.0};
  CHECK(count_positive(eig, 2.0, 1e-9) == 1);
  CHECK(count_positive(eig, 2.0, 1e-13) == 2);
  const std::vector<double> big{1e-3, -5.0};
  CHECK(count_positive(big, 1e9, 1e-9) == 0);
}

TEST_CASE("certify_lorentzian examples") {
  const auto c = certify_lorentzian(k2w1w2);
  CHECK(c.verdict);
  REQUIRE(c.signatures.size() == 1);
  CHECK(c.signatures[0].gamma == ExponentVector{0, 0});
  CHECK(c.signatures[0].eigenvalues[0] == doctest::Approx(2.0));
  CHECK(c.signatures[0].eigenvalues[1] == doctest::Approx(-2.0));
  CHECK(c.signatures[0].positive_count == 1);

  const auto bad = certify_lorentzian(kSumSq);
  CHECK_FALSE(bad.verdict);
  CHECK_FALSE(bad.support_mconvex.verdict);
  REQUIRE(bad.signatures.size() == 1);
  CHECK(bad.signatures[0].positive_count == 2);

  const auto w = likelihood_polynomial(PartialSumRectangle(SimplexSpec(3, 8), {1, 4}, {3, 6}));
  const auto cw = certify_lorentzian(w);
  CHECK(cw.verdict);
  CHECK(cw.support_mconvex.verdict);
  CHECK(cw.signatures.size() == 28);
  const std::vector<double> tols{1e-10, 1e-9, 1e-8, 1e-7, 1e-6};
  CHECK(signatures_stable(cw, tols));
}

TEST_CASE("per-gamma Hessians match an independent construction") {
  const auto f = likelihood_polynomial(PartialSumRectangle(SimplexSpec(3, 8), {1, 4}, {3, 6}));
  const auto cert = certify_lorentzian(f);
  for (const auto& s : cert.signatures) {
    // Hessian of the gamma-derivative, built from differentiating twice.
    const auto g = partial_derivative(f, s.gamma);
    Eigen::MatrixXd h(3, 3);
    for (int a = 0; a < 3; ++a) {
      for (int b = 0; b < 3; ++b) {
        ExponentVector e(3, 0);
        ++e[a];
        ++e[b];
        const auto d = partial_derivative(g, e);
        h(a, b) = d.is_zero() ? 0.0 : d.terms().begin()->second.get_d();
      }
    }
    CHECK((h - to_double(derivative_hessian(f, s.gamma))).cwiseAbs().maxCoeff() == 0.0);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    int pos = 0;
    for (int k = 0; k < 3; ++k) {
      if (es.eigenvalues()[k] > 1e-9 * (1.0 + h.cwiseAbs().maxCoeff())) ++pos;
    }
    CHECK(pos == s.positive_count);
    CHECK(pos <= 1);
  }
  CHECK_THROWS_AS(derivative_hessian(f, {1, 1, 1}), Error);
}

TEST_CASE("degenerate degrees fall back to the support") {
  const auto lin = poly(3, 1, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}});
  const auto c = certify_lorentzian(lin);
  CHECK(c.degenerate);
  CHECK(c.signatures.empty());
  CHECK(c.verdict);
  const auto gap = poly(3, 1, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}});
  CHECK(certify_lorentzian(gap).verdict);
}

TEST_CASE("serial and parallel certificates agree") {
  const auto f = likelihood_polynomial(PartialSumRectangle(SimplexSpec(4, 5), {2, 3, 4}, {3, 4, 5}));
  const auto a = certify_lorentzian(f, kDefaultTolerance, Execution::kSerial);
  const auto b = certify_lorentzian(f, kDefaultTolerance, Execution::kParallel);
  REQUIRE(a.signatures.size() == b.signatures.size());
  for (std::size_t k = 0; k < a.signatures.size(); ++k) {
    CHECK(a.signatures[k].gamma == b.signatures[k].gamma);
    CHECK(a.signatures[k].eigenvalues == b.signatures[k].eigenvalues);
  }
  CHECK(a.verdict == b.verdict);
}

TEST_CASE("strictly_lorentzian_check") {
  const auto sq = strictly_lorentzian_check(kSquare);
  CHECK_FALSE(sq.passed);
  CHECK(sq.reason.find("singular") != std::string::npos);

  const auto ok = strictly_lorentzian_check(poly(2, 2, {{{2, 0}, 1}, {{1, 1}, 3}, {{0, 2}, 1}}));
  CHECK(ok.passed);
  CHECK(ok.leaves_checked == 1);

  // (w1 + w2)^3: both first partials are multiples of (w1 + w2)^2.
  const auto cube = likelihood_polynomial(Rectangle(SimplexSpec(2, 3), {0, 0}, {3, 3}));
  const auto rc = strictly_lorentzian_check(cube);
  CHECK_FALSE(rc.passed);
  REQUIRE(rc.failing_gamma.has_value());
  CHECK(rc.failing_gamma->size() == 2);

  const auto partial_support = strictly_lorentzian_check(k2w1w2);
  CHECK_FALSE(partial_support.passed);

  const auto w12 = strictly_lorentzian_check(poly(2, 1, {{{1, 0}, 2}, {{0, 1}, 1}}));
  CHECK(w12.passed);
  CHECK(strictly_lorentzian_check(poly(2, 0, {{{0, 0}, 5}})).passed);

  // w1^3 + 6 w1^2 w2 + 6 w1 w2^2 + w2^3 has nonsingular Lorentzian leaves.
  const auto strict = poly(2, 3, {{{3, 0}, 1}, {{2, 1}, 6}, {{1, 2}, 6}, {{0, 3}, 1}});
  CHECK(strictly_lorentzian_check(strict).passed);
}

TEST_CASE("log-Hessian values") {
  const std::vector<double> ones{1.0, 1.0};
  const Eigen::MatrixXd h = log_hessian(k2w1w2, ones);
  CHECK(h(0, 0) == doctest::Approx(-1.0));
  CHECK(h(1, 1) == doctest::Approx(-1.0));
  CHECK(h(0, 1) == doctest::Approx(0.0));
  CHECK(log_hessian_max_eigenvalue(k2w1w2, ones) == doctest::Approx(-1.0));

  const std::vector<double> two{2.0};
  CHECK(log_hessian_max_eigenvalue(poly(1, 1, {{{1}, 1}}), two) == doctest::Approx(-0.25));

  for (int m = 2; m <= 4; ++m) {
    const auto f = likelihood_polynomial(
        Rectangle(SimplexSpec(m, 4), std::vector<int>(m, 0), std::vector<int>(m, 4)));
    const std::vector<double> w(m, 1.0 / m);
    CHECK(log_hessian_max_eigenvalue(f, w) <= 1e-9);
    CHECK(log_hessian_max_eigenvalue(f, w) >= -1e-9);
  }
  CHECK(log_hessian_max_eigenvalue(kSumSq, ones) > 0.0);
  const std::vector<double> zero{0.0, 1.0};
  CHECK_THROWS_AS(log_hessian_max_eigenvalue(k2w1w2, zero), Error);
}

TEST_CASE("log-Hessian eigenvalues match finite differences") {
  Rng rng(29);
  const std::vector<HomogeneousPolynomial> fs{
      likelihood_polynomial(PartialSumRectangle(SimplexSpec(3, 8), {1, 4}, {3, 6})),
      likelihood_polynomial(Rectangle(SimplexSpec(3, 8), {1, 2, 2}, {3, 4, 4})),
      kSumSq};
  for (const auto& f : fs) {
    for (int t = 0; t < 10; ++t) {
      const auto w = random_positive_point(rng, f.m(), 0.5, 2.0);
      const double got = log_hessian_max_eigenvalue(f, w);
      const double want = fd_log_max_eig(f, w);
      CHECK(std::abs(got - want) <= 1e-5 * std::max(1.0, std::abs(want)));
    }
  }
}

TEST_CASE("strong log-concavity spot checks") {
  const std::vector<std::vector<double>> pts{{1.0, 1.0}, {0.3, 2.0}};
  const std::vector<ExponentVector> base{{0, 0}};
  const auto r = check_strong_logconcavity_spot(k2w1w2, base, pts);
  CHECK(r.verdict);
  CHECK(r.checks == 2);
  CHECK(r.max_log_hessian_eigenvalue <= 0.0);

  const std::vector<ExponentVector> over{{3, 0}};
  const auto z = check_strong_logconcavity_spot(k2w1w2, over, pts);
  CHECK(z.verdict);
  CHECK(z.failures == 0);
  CHECK(std::isinf(z.max_log_hessian_eigenvalue));
  CHECK(z.max_log_hessian_eigenvalue < 0);

  const std::vector<std::vector<double>> one{{1.0, 1.0}};
  const auto bad = check_strong_logconcavity_spot(kSumSq, base, one);
  CHECK_FALSE(bad.verdict);
  CHECK(bad.max_log_hessian_eigenvalue > 0.0);
}

TEST_CASE("complete log-concavity spot checks") {
  const std::vector<std::vector<double>> pts{{1.0, 1.0}, {0.2, 3.0}};
  const std::vector<DirectionVector> ones{DirectionVector({1, 1})};
  CHECK(check_complete_logconcavity_spot(k2w1w2, ones, pts, kDefaultTolerance, 1).verdict);

  const std::vector<DirectionVector> two{DirectionVector({1, 1}), DirectionVector({1, 2})};
  const auto full = check_complete_logconcavity_spot(k2w1w2, two, pts, kDefaultTolerance, 2);
  CHECK(full.verdict);
  CHECK(full.derivatives_tested == 3);

  const std::vector<DirectionVector> e1{DirectionVector({1, 0})};
  const auto bad = check_complete_logconcavity_spot(kSumSq, e1, pts, kDefaultTolerance, 1);
  CHECK_FALSE(bad.verdict);
  CHECK_THROWS_AS(check_complete_logconcavity_spot(kSumSq, e1, pts, kDefaultTolerance, 2), Error);
}

TEST_CASE("random spot suite on a certified polynomial") {
  Rng rng(31);
  const auto f = likelihood_polynomial(PartialSumRectangle(SimplexSpec(4, 5), {2, 3, 4}, {3, 4, 5}));
  const auto suite = random_spot_suite(f, rng, 200, kDefaultTolerance);
  CHECK(suite.strong.verdict);
  CHECK(suite.complete.verdict);
  CHECK(suite.strong.checks + suite.complete.checks >= 200);
  CHECK(suite.strong.max_log_hessian_eigenvalue <= 1e-8);
  CHECK(suite.complete.max_log_hessian_eigenvalue <= 1e-8);
}
