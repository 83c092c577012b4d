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

// Independent test oracles. Nothing here calls the code paths it checks:
// sets are std::set of plain vectors, enumeration is an odometer over the
// full cube, derivatives are finite differences.
#ifndef MCONVEX_TESTS_ORACLES_HPP_
#define MCONVEX_TESTS_ORACLES_HPP_

#include <gmpxx.h>

#include <Eigen/Dense>
#include <cmath>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Point = std::vector<int>;
using PointSet = std::set<Point>;

// Every vector in {0..n}^m summing to n, by odometer over the cube.
inline std::vector<Point> cube_filter_simplex(int m, int n) {
  std::vector<Point> out;
  Point x(m, 0);
  while (true) {
    int s = 0;
    for (int v : x) s += v;
    if (s == n) out.push_back(x);
    int k = m - 1;
    while (k >= 0 && ++x[k] > n) x[k--] = 0;
    if (k < 0) break;
  }
  return out;
}

inline PointSet filter(int m, int n, const std::function<bool(const Point&)>& pred) {
  PointSet out;
  for (const Point& x : cube_filter_simplex(m, n)) {
    if (pred(x)) out.insert(x);
  }
  return out;
}

inline bool in_rectangle(const Point& x, const Point& l, const Point& u) {
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] < l[j] || x[j] > u[j]) return false;
  }
  return true;
}

inline bool in_psr(const Point& x, const Point& l, const Point& u) {
  int s = 0;
  for (std::size_t k = 0; k + 1 < x.size(); ++k) {
    s += x[k];
    if (s < l[k] || s > u[k]) return false;
  }
  return true;
}

// Multinomial coefficient by the Pascal-type recurrence
// M(x) = sum_j M(x - e_j), M(0) = 1.
inline mpz_class pascal_multinomial(const Point& x) {
  static std::map<Point, mpz_class> memo;
  bool zero = true;
  for (int v : x) zero = zero && v == 0;
  if (zero) return 1;
  if (auto it = memo.find(x); it != memo.end()) return it->second;
  mpz_class total = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (x[j] == 0) continue;
    Point y = x;
    --y[j];
    total += pascal_multinomial(y);
  }
  memo[x] = total;
  return total;
}

// Exchange axiom straight from the definition, on a std::set.
inline bool naive_mconvex(const PointSet& c) {
  for (const Point& a : c) {
    for (const Point& b : c) {
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] <= b[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < a.size() && !found; ++j) {
          if (a[j] >= b[j]) continue;
          Point y = a;
          --y[i];
          ++y[j];
          found = c.count(y) > 0;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

// Central-difference Hessian of a scalar function.
inline Eigen::MatrixXd fd_hessian(const std::function<double(const std::vector<double>&)>& f,
                                  const std::vector<double>& w, double h) {
  const std::size_t m = w.size();
  Eigen::MatrixXd out(m, m);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      auto at = [&](double da, double db) {
        std::vector<double> x = w;
        x[a] += da;
        x[b] += db;
        return f(x);
      };
      out(a, b) = (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4 * h * h);
    }
  }
  return out;
}

inline double fd_directional(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& w,
                             const std::vector<double>& d, double h) {
  std::vector<double> plus = w, minus = w;
  for (std::size_t k = 0; k < w.size(); ++k) {
    plus[k] += h * d[k];
    minus[k] -= h * d[k];
  }
  return (f(plus) - f(minus)) / (2 * h);
}

// Direct sum over support of coeff * prod p^x in double.
inline double poly_value(const std::map<Point, double>& terms,
                         const std::vector<double>& w) {
  double total = 0.0;
  for (const auto& [x, c] : terms) {
    double t = c;
    for (std::size_t k = 0; k < x.size(); ++k) t *= std::pow(w[k], x[k]);
    total += t;
  }
  return total;
}

// Every point of the 0.01-step (or other) grid on the 2-simplex.
inline std::vector<std::vector<double>> simplex3_grid(int steps) {
  std::vector<std::vector<double>> out;
  for (int a = 0; a <= steps; ++a) {
    for (int b = 0; a + b <= steps; ++b) {
      const int c = steps - a - b;
      out.push_back({static_cast<double>(a) / steps, static_cast<double>(b) / steps,
                     static_cast<double>(c) / steps});
    }
  }
  return out;
}

}  // namespace oracle

#endif  // MCONVEX_TESTS_ORACLES_HPP_
