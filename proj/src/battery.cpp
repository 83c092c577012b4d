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

#include "mconvex/battery.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "mconvex/inference.hpp"
#include "mconvex/json_io.hpp"
#include "mconvex/mconvexity.hpp"

namespace mconvex {

namespace {

using Json = nlohmann::json;

int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// All non-decreasing sequences of length len with entries in [0, n].
void monotone_sequences(int len, int n, std::vector<int>& cur,
                        std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == len) {
    out.push_back(cur);
    return;
  }
  const int start = cur.empty() ? 0 : cur.back();
  for (int v = start; v <= n; ++v) {
    cur.push_back(v);
    monotone_sequences(len, n, cur, out);
    cur.pop_back();
  }
}

std::vector<SimplexSpec> grid_specs(const BatteryConfig& config) {
  std::vector<SimplexSpec> out;
  for (int n = config.n_min; n <= config.n_max; ++n) out.emplace_back(3, n);
  return out;
}

SimplexSpec random_spec(Rng& rng, int m_lo, int m_hi, int n_lo, int n_hi) {
  return SimplexSpec(uniform_int(rng, m_lo, m_hi), uniform_int(rng, n_lo, n_hi));
}

struct Tally {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  Json first_failure;

  void fail(Json detail) {
    if (failures++ == 0) first_failure = std::move(detail);
  }
  Json summary(BatteryKind kind, std::uint64_t seed) const {
    Json out{{"kind", std::string(to_string(kind))},
             {"seed", seed},
             {"checked", checked},
             {"failures", failures}};
    if (failures > 0) out["first_failure"] = first_failure;
    return out;
  }
};

std::vector<PartialSumRectangle> psr_battery_instances(const BatteryConfig& config,
                                                       int default_count,
                                                       bool grid, int m_lo,
                                                       Rng& rng) {
  std::vector<PartialSumRectangle> out;
  if (grid) {
    for (const SimplexSpec& spec : grid_specs(config)) {
      for (auto& w : all_psrs(spec)) out.push_back(std::move(w));
    }
  }
  const int count = config.random_count >= 0 ? config.random_count : default_count;
  for (int r = 0; r < count; ++r) {
    const SimplexSpec spec = random_spec(rng, m_lo, 5, 2, config.random_n_max);
    out.push_back(random_psr(rng, spec));
  }
  return out;
}

Json run_rect(const BatteryConfig& config, Rng& rng) {
  Tally tally;
  std::uint64_t non_empty = 0;
  auto check = [&](const Rectangle& r) {
    ++tally.checked;
    const ConstraintSet c(r);
    const auto members = enumerate_constraint(c);
    if (!members.empty()) ++non_empty;
    const MConvexityReport rep = is_mconvex_bruteforce(members, r.spec(), config.exec);
    if (!rep.verdict) tally.fail(Json{{"constraint", json_io::to_json(c)},
                                      {"report", json_io::to_json(rep)}});
  };
  for (const SimplexSpec& spec : grid_specs(config)) {
    for (const Rectangle& r : all_rectangles(spec)) check(r);
  }
  const int count = config.random_count >= 0 ? config.random_count : 0;
  for (int k = 0; k < count; ++k) {
    check(random_nonempty_rectangle(
        rng, random_spec(rng, 4, 5, 2, config.random_n_max)));
  }
  Json out = tally.summary(BatteryKind::kRectMConvex, config.seed);
  out["non_empty"] = non_empty;
  return out;
}

Json run_psr(const BatteryConfig& config, Rng& rng) {
  Tally tally;
  for (const PartialSumRectangle& w :
       psr_battery_instances(config, 500, true, 4, rng)) {
    ++tally.checked;
    const MConvexityReport rep = is_mconvex_bruteforce(ConstraintSet(w), config.exec);
    if (!rep.verdict) tally.fail(Json{{"constraint", json_io::to_json(ConstraintSet(w))},
                                      {"report", json_io::to_json(rep)}});
  }
  return tally.summary(BatteryKind::kPsrMConvex, config.seed);
}

Json run_exchange(const BatteryConfig& config, Rng& rng) {
  Tally tally;
  std::uint64_t triples = 0;
  for (const PartialSumRectangle& w :
       psr_battery_instances(config, 200, config.include_grid, 2, rng)) {
    ++tally.checked;
    const ConstraintSet c(w);
    bool ok = true;
    Json detail{{"constraint", json_io::to_json(c)}};
    for (SelectorOrder order : {SelectorOrder::kAboveFirst, SelectorOrder::kBelowFirst}) {
      const ExchangeTheoremReport rep = verify_exchange_theorem(w, order, config.exec);
      triples += rep.triples_checked;
      if (!rep.passed()) {
        ok = false;
        detail[order == SelectorOrder::kAboveFirst ? "above_first" : "below_first"] =
            json_io::to_json(rep);
      }
    }
    // The constructive verdict must agree with the brute-force oracle.
    const MConvexityReport brute = is_mconvex_bruteforce(c, config.exec);
    if (!brute.verdict) {
      ok = false;
      detail["bruteforce"] = json_io::to_json(brute);
    }
    if (!ok) tally.fail(std::move(detail));
  }
  Json out = tally.summary(BatteryKind::kExchangeConstructive, config.seed);
  out["triples_checked"] = triples;
  return out;
}

Json run_lorentz(const BatteryConfig& config, Rng& rng) {
  std::vector<ConstraintSet> sets;
  for (const SimplexSpec& spec : grid_specs(config)) {
    for (auto& r : all_rectangles(spec)) sets.emplace_back(std::move(r));
    for (auto& w : all_psrs(spec)) sets.emplace_back(std::move(w));
  }
  const int count = config.random_count >= 0 ? config.random_count : 100;
  for (int k = 0; k < count; ++k) {
    sets.emplace_back(random_psr(rng, random_spec(rng, 4, 5, 2, config.random_n_max)));
  }
  // A likelihood polynomial is determined by its support; certify each
  // distinct support once.
  std::set<std::vector<LatticePoint>> seen;
  Tally tally;
  std::uint64_t distinct = 0;
  const std::vector<double> band = {1e-10, 1e-9, 1e-8, 1e-7, 1e-6};
  for (const ConstraintSet& c : sets) {
    ++tally.checked;
    std::vector<LatticePoint> members = enumerate_constraint(c);
    if (members.empty() || spec_of(c).n() < 2) continue;
    if (!seen.insert(members).second) continue;
    ++distinct;
    const LorentzianCertificate cert =
        certify_lorentzian(likelihood_polynomial(c), config.tol, config.exec);
    if (!cert.verdict || !signatures_stable(cert, band)) {
      tally.fail(Json{{"constraint", json_io::to_json(c)},
                      {"certificate", json_io::to_json(cert, true)}});
    }
  }
  Json out = tally.summary(BatteryKind::kLorentzGrid, config.seed);
  out["distinct_polynomials"] = distinct;
  return out;
}

Json run_em(const BatteryConfig& config, Rng& rng) {
  Tally tally;
  const int count = config.random_count >= 0 ? config.random_count : 500;
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const SimplexSpec spec = random_spec(rng, 2, 4, 1, 8);
    const ConstraintSet c = uniform_int(rng, 0, 1) == 0
                                ? ConstraintSet(random_nonempty_rectangle(rng, spec))
                                : ConstraintSet(random_psr(rng, spec));
    const CensoredLikelihood model(c, config.exec);
    const ProbabilityVector p(random_interior_point(rng, spec.m()));
    const double before = model.log_likelihood(p.values());
    const ProbabilityVector q = model.em_step(p);
    const double after = model.log_likelihood(q.values());
    ++tally.checked;
    worst = std::min(worst, after - before);
    if (after < before - 1e-12) {
      tally.fail(Json{{"constraint", json_io::to_json(c)},
                      {"before", before},
                      {"after", after}});
    }
  }
  Json out = tally.summary(BatteryKind::kEmMonotone, config.seed);
  out["min_increase"] = worst;
  return out;
}

}  // namespace

std::vector<Rectangle> all_rectangles(const SimplexSpec& spec) {
  const int m = spec.m();
  const int n = spec.n();
  std::vector<std::pair<int, int>> intervals;
  for (int l = 0; l <= n; ++l) {
    for (int u = l; u <= n; ++u) intervals.emplace_back(l, u);
  }
  std::vector<Rectangle> out;
  std::vector<std::size_t> pick(m, 0);
  while (true) {
    std::vector<int> lo(m), hi(m);
    for (int j = 0; j < m; ++j) {
      lo[j] = intervals[pick[j]].first;
      hi[j] = intervals[pick[j]].second;
    }
    out.emplace_back(spec, std::move(lo), std::move(hi));
    int j = m - 1;
    while (j >= 0 && ++pick[j] == intervals.size()) pick[j--] = 0;
    if (j < 0) break;
  }
  return out;
}

std::vector<PartialSumRectangle> all_psrs(const SimplexSpec& spec) {
  std::vector<std::vector<int>> seqs;
  std::vector<int> cur;
  monotone_sequences(spec.m() - 1, spec.n(), cur, seqs);
  std::vector<PartialSumRectangle> out;
  for (const auto& lo : seqs) {
    for (const auto& hi : seqs) {
      bool ok = true;
      for (std::size_t k = 0; k < lo.size() && ok; ++k) ok = lo[k] <= hi[k];
      if (ok) out.emplace_back(spec, lo, hi);
    }
  }
  return out;
}

PartialSumRectangle random_psr(Rng& rng, const SimplexSpec& spec) {
  const int len = spec.m() - 1;
  std::vector<int> a(len), b(len);
  for (int& v : a) v = uniform_int(rng, 0, spec.n());
  for (int& v : b) v = uniform_int(rng, 0, spec.n());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> lo(len), hi(len);
  for (int k = 0; k < len; ++k) {
    lo[k] = std::min(a[k], b[k]);
    hi[k] = std::max(a[k], b[k]);
  }
  return PartialSumRectangle(spec, std::move(lo), std::move(hi));
}

Rectangle random_nonempty_rectangle(Rng& rng, const SimplexSpec& spec) {
  while (true) {
    std::vector<int> lo(spec.m()), hi(spec.m());
    for (int j = 0; j < spec.m(); ++j) {
      const int a = uniform_int(rng, 0, spec.n());
      const int b = uniform_int(rng, 0, spec.n());
      lo[j] = std::min(a, b);
      hi[j] = std::max(a, b);
    }
    Rectangle r(spec, std::move(lo), std::move(hi));
    if (!enumerate_constraint(ConstraintSet(r)).empty()) return r;
  }
}

std::vector<double> random_interior_point(Rng& rng, int m, double floor) {
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(m);
  double total = 0.0;
  for (double& v : p) {
    v = expo(rng) + floor;
    total += v;
  }
  for (double& v : p) v /= total;
  return p;
}

std::vector<double> random_positive_point(Rng& rng, int m, double lo, double hi) {
  std::uniform_real_distribution<double> unif(lo, hi);
  std::vector<double> w(m);
  for (double& v : w) v = unif(rng);
  return w;
}

DirectionVector random_direction(Rng& rng, int m) {
  std::vector<Rational> a(m);
  bool positive = false;
  for (auto& v : a) {
    const int q = uniform_int(rng, 0, 16);
    v = Rational(q, 4);
    positive = positive || q > 0;
  }
  if (!positive) a[uniform_int(rng, 0, m - 1)] = 1;
  return DirectionVector(std::move(a));
}

bool signatures_stable(const LorentzianCertificate& cert,
                       std::span<const double> tolerances) {
  for (const SignatureReport& s : cert.signatures) {
    for (double tol : tolerances) {
      if (count_positive(s.eigenvalues, s.max_abs_entry, tol) != s.positive_count) {
        return false;
      }
    }
  }
  return true;
}

SpotSuiteResult random_spot_suite(const HomogeneousPolynomial& f, Rng& rng,
                                  int draws, double tol) {
  SpotSuiteResult out;
  out.strong.tol = tol;
  out.complete.tol = tol;
  const int m = f.m();
  const int d = f.degree();

  std::map<ExponentVector, std::vector<std::vector<double>>> by_gamma;
  std::vector<std::vector<LatticePoint>> layers;
  for (int k = 0; k <= d; ++k) layers.push_back(enumerate_simplex(SimplexSpec(m, k)));
  for (int t = 0; t < draws; ++t) {
    const auto& layer = layers[uniform_int(rng, 0, d)];
    const LatticePoint& g = layer[uniform_int(rng, 0, static_cast<int>(layer.size()) - 1)];
    by_gamma[g.counts()].push_back(random_positive_point(rng, m, 0.1, 10.0));
  }
  for (const auto& [gamma, points] : by_gamma) {
    const ExponentVector one[] = {gamma};
    out.strong.merge(check_strong_logconcavity_spot(f, one, points, tol));
  }

  if (d >= 1) {
    std::vector<DirectionVector> dirs;
    for (int k = 0; k < d; ++k) dirs.push_back(random_direction(rng, m));
    const int per_point = d + 1;
    const int points_needed = (draws + per_point - 1) / per_point;
    std::vector<std::vector<double>> points;
    for (int t = 0; t < points_needed; ++t) {
      points.push_back(random_positive_point(rng, m, 0.1, 10.0));
    }
    out.complete.merge(check_complete_logconcavity_spot(f, dirs, points, tol, d));
  }
  return out;
}

std::optional<BatteryKind> battery_kind_from_string(std::string_view name) {
  for (BatteryKind k : {BatteryKind::kRectMConvex, BatteryKind::kPsrMConvex,
                        BatteryKind::kExchangeConstructive, BatteryKind::kLorentzGrid,
                        BatteryKind::kEmMonotone}) {
    if (to_string(k) == name) return k;
  }
  return std::nullopt;
}

std::string_view to_string(BatteryKind kind) {
  switch (kind) {
    case BatteryKind::kRectMConvex:
      return "rect-mconvex";
    case BatteryKind::kPsrMConvex:
      return "psr-mconvex";
    case BatteryKind::kExchangeConstructive:
      return "exchange-constructive";
    case BatteryKind::kLorentzGrid:
      return "lorentz-grid";
    case BatteryKind::kEmMonotone:
      return "em-monotone";
  }
  return "unknown";
}

Json run_battery(BatteryKind kind, const BatteryConfig& config) {
  Rng rng(config.seed);
  switch (kind) {
    case BatteryKind::kRectMConvex:
      return run_rect(config, rng);
    case BatteryKind::kPsrMConvex:
      return run_psr(config, rng);
    case BatteryKind::kExchangeConstructive:
      return run_exchange(config, rng);
    case BatteryKind::kLorentzGrid:
      return run_lorentz(config, rng);
    case BatteryKind::kEmMonotone:
      return run_em(config, rng);
  }
  return Json();
}

}  // namespace mconvex
