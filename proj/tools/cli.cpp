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

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "mconvex/battery.hpp"
#include "mconvex/certification.hpp"
#include "mconvex/constraints.hpp"
#include "mconvex/error.hpp"
#include "mconvex/inference.hpp"
#include "mconvex/json_io.hpp"
#include "mconvex/mconvexity.hpp"
#include "mconvex/polynomial.hpp"

#ifndef MCONVEX_FIXTURE_DIR
#define MCONVEX_FIXTURE_DIR "fixtures"
#endif

namespace mconvex::cli {

namespace {

using json_io::Json;

[[noreturn]] void invalid(const std::string& message) {
  throw Error(ErrorKind::kValidation, message);
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    out.push_back(item);
  }
  return out;
}

std::vector<int> int_list(const std::string& text, const char* what) {
  std::vector<int> out;
  for (const auto& s : split(text)) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != s.size()) invalid(std::string(what) + ": not an integer list");
    out.push_back(v);
  }
  return out;
}

std::vector<Rational> rational_list(const std::string& text, const char* what) {
  std::vector<Rational> out;
  for (const auto& s : split(text)) {
    try {
      out.push_back(json_io::rational_from_json(Json(s)));
    } catch (const Error&) {
      invalid(std::string(what) + ": not a list of rationals");
    }
  }
  return out;
}

// Decimal or rational entries.
std::vector<double> double_list(const std::string& text, const char* what) {
  std::vector<double> out;
  for (const auto& s : split(text)) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != 0 && used == s.size()) {
      out.push_back(v);
    } else {
      out.push_back(rational_list(s, what).front().get_d());
    }
  }
  return out;
}

std::size_t one_based(int i, const char* what) {
  if (i < 1) invalid(std::string(what) + " must be a 1-based index");
  return static_cast<std::size_t>(i - 1);
}

// PATH, "-" for standard input, or inline JSON text.
Json load_json(const std::string& source, std::istream& in) {
  if (source == "-") {
    std::stringstream ss;
    ss << in.rdbuf();
    return json_io::parse(ss.str());
  }
  const auto first = source.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (source[first] == '{' || source[first] == '[')) {
    return json_io::parse(source);
  }
  std::ifstream file(source);
  if (!file) invalid("cannot read " + source);
  std::stringstream ss;
  ss << file.rdbuf();
  return json_io::parse(ss.str());
}

Json points_json(const std::vector<LatticePoint>& pts) {
  Json out = Json::array();
  for (const auto& p : pts) out.push_back(json_io::to_json(p));
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------
// Counterexample fixtures.

Json rectangle_m3_report() {
  const Rectangle r(SimplexSpec(3, 8), {1, 2, 2}, {3, 4, 4});
  const auto members = enumerate_constraint(r);
  const PartialSumRectangle w = minimal_bounding_psr(ExplicitSet(r.spec(), members));
  const auto w_members = enumerate_constraint(w);
  Json extra = Json::array();
  Json extra_in = Json::array();
  for (const auto& x : w_members) {
    if (!std::binary_search(members.begin(), members.end(), x)) {
      extra.push_back(json_io::to_json(x));
      extra_in.push_back(rectangle_contains(r, x));
    }
  }
  // Every partial-sum rectangle whose bounds admit R.
  int searched = 0;
  bool all_strict = true;
  for (int l2 = w.lower()[0]; l2 <= w.lower()[1]; ++l2) {
    for (int u2 = w.upper()[1]; u2 <= r.spec().n(); ++u2) {
      const PartialSumRectangle c(r.spec(), {w.lower()[0], l2}, {w.upper()[0], u2});
      ++searched;
      all_strict = all_strict && enumerate_constraint(c).size() > members.size();
    }
  }
  return Json{{"rectangle", json_io::to_json(ConstraintSet{r})},
              {"members", points_json(members)},
              {"bounding_psr", json_io::to_json(ConstraintSet{w})},
              {"bounding_psr_members", points_json(w_members)},
              {"extra_points", extra},
              {"extra_in_rectangle", extra_in},
              {"containing_psrs_searched", searched},
              {"all_strictly_larger", all_strict}};
}

Json psr_m4_report() {
  const PartialSumRectangle w(SimplexSpec(4, 5), {2, 3, 4}, {3, 4, 5});
  const auto members = enumerate_constraint(w);
  const Rectangle r = minimal_bounding_rectangle(ExplicitSet(w.spec(), members));
  const auto r_members = enumerate_constraint(r);
  Json extra = Json::array();
  Json extra_in = Json::array();
  for (const auto& x : r_members) {
    if (!std::binary_search(members.begin(), members.end(), x)) {
      extra.push_back(json_io::to_json(x));
      extra_in.push_back(psr_contains(w, x));
    }
  }
  // Every rectangle whose bounds admit W.
  int searched = 0;
  bool all_strict = true;
  const int n = w.spec().n();
  std::vector<int> lo(4, 0), hi(4, 0);
  const auto visit = [&](auto&& self, std::size_t k) -> void {
    if (k == 4) {
      const Rectangle c(w.spec(), lo, hi);
      ++searched;
      all_strict = all_strict && enumerate_constraint(c).size() > members.size();
      return;
    }
    for (int l = 0; l <= r.lower()[k]; ++l) {
      for (int u = r.upper()[k]; u <= n; ++u) {
        lo[k] = l;
        hi[k] = u;
        self(self, k + 1);
      }
    }
  };
  visit(visit, 0);
  return Json{{"psr", json_io::to_json(ConstraintSet{w})},
              {"members", points_json(members)},
              {"bounding_rectangle", json_io::to_json(ConstraintSet{r})},
              {"bounding_rectangle_members", points_json(r_members)},
              {"extra_points", extra},
              {"extra_in_psr", extra_in},
              {"containing_rectangles_searched", searched},
              {"all_strictly_larger", all_strict}};
}

struct FixtureFile {
  std::string name;
  Json content;
};

std::vector<FixtureFile> fixture_files(const Json& report) {
  return {
      {"rect_m3n8.json", report["rectangle_m3n8"]["rectangle"]},
      {"psr_m3n8.json", report["rectangle_m3n8"]["bounding_psr"]},
      {"psr_m4n5.json", report["psr_m4n5"]["psr"]},
      {"rect_m4n5_bounding.json", report["psr_m4n5"]["bounding_rectangle"]},
      {"counterexamples.json", report},
  };
}

// ---------------------------------------------------------------------------

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  Execution exec = Execution::kParallel;
};

struct InputFlags {
  std::string constraint;
  std::string polynomial;
};

ConstraintSet require_constraint(const InputFlags& f, Context& ctx) {
  if (f.constraint.empty()) invalid("--constraint is required");
  return json_io::constraint_from_json(load_json(f.constraint, ctx.in));
}

HomogeneousPolynomial require_polynomial(const InputFlags& f, Context& ctx) {
  if (!f.polynomial.empty() && !f.constraint.empty()) {
    invalid("give either --polynomial or --constraint, not both");
  }
  if (!f.polynomial.empty()) {
    return json_io::polynomial_from_json(load_json(f.polynomial, ctx.in));
  }
  if (!f.constraint.empty()) return likelihood_polynomial(require_constraint(f, ctx));
  invalid("--polynomial or --constraint is required");
}

void add_input(CLI::App* sub, InputFlags& f, bool polynomial) {
  sub->add_option("--constraint", f.constraint, "constraint JSON: PATH, - or inline");
  if (polynomial) {
    sub->add_option("--polynomial", f.polynomial, "polynomial JSON: PATH, - or inline");
  }
}

}  // namespace

const std::vector<SubcommandInfo>& dispatch_table() {
  static const std::vector<SubcommandInfo> table = {
      {"enumerate",
       {"enumerate_simplex", "simplex_size", "partial_sums", "multinomial_coefficient",
        "enumerate_constraint", "rectangle_contains", "psr_contains", "rectangle_from_psr_m2",
        "psr_to_rectangle_m3", "minimal_bounding_rectangle", "minimal_bounding_psr"}},
      {"check-mconvex",
       {"exchange", "is_mconvex_bruteforce", "find_feasible_index", "verify_exchange_theorem",
        "rectangle_exchange_index", "verify_rectangle_exchange"}},
      {"likelihood",
       {"likelihood_polynomial", "evaluate", "partial_derivative", "directional_derivative",
        "hessian", "support"}},
      {"certify", {"certify_lorentzian"}},
      {"strict-check", {"strictly_lorentzian_check"}},
      {"spot-logconcave",
       {"check_strong_logconcavity_spot", "check_complete_logconcavity_spot",
        "log_hessian_max_eigenvalue"}},
      {"mle", {"log_likelihood", "conditional_expectation", "em_step", "mle"}},
      {"counterexamples", {"minimal_bounding_rectangle", "minimal_bounding_psr"}},
      {"battery", {"run_battery"}},
  };
  return table;
}

int run_impl(const std::vector<std::string>& args, Context& ctx) {
  CLI::App app{"Multinomial likelihoods under rectangle and partial-sum constraints", "mconvex"};
  app.require_subcommand(1);
  bool serial = false;
  app.add_flag("--serial", serial, "use the serial reference kernels");

  // enumerate
  InputFlags en_in;
  int en_m = -1, en_n = -1;
  std::string en_contains;
  bool en_count_only = false, en_sums = false, en_multi = false, en_convert = false,
       en_bounding = false;
  auto* en = app.add_subcommand("enumerate", "list the points of a constraint set or simplex");
  add_input(en, en_in, false);
  en->add_option("--m", en_m, "categories (full simplex)");
  en->add_option("--n", en_n, "sample size (full simplex)");
  en->add_option("--contains", en_contains, "test membership of a point, e.g. 3,1,4");
  en->add_flag("--count-only", en_count_only);
  en->add_flag("--partial-sums", en_sums);
  en->add_flag("--multinomial", en_multi);
  en->add_flag("--convert", en_convert, "equivalent rectangle of an m=2 or m=3 PSR");
  en->add_flag("--bounding", en_bounding, "minimal bounding rectangle and PSR");

  // check-mconvex
  InputFlags cm_in;
  bool cm_constructive = false;
  std::string cm_order = "above-first", cm_alpha, cm_beta;
  int cm_i = 0, cm_j = 0;
  auto* cm = app.add_subcommand("check-mconvex", "decide M-convexity of a constraint set");
  add_input(cm, cm_in, false);
  cm->add_flag("--constructive", cm_constructive, "also run the constructive exchange check");
  cm->add_option("--order", cm_order, "above-first or below-first")
      ->check(CLI::IsMember({"above-first", "below-first"}));
  cm->add_option("--alpha", cm_alpha);
  cm->add_option("--beta", cm_beta);
  cm->add_option("--i", cm_i, "1-based exchange source index");
  cm->add_option("--j", cm_j, "1-based exchange target index");

  // likelihood
  InputFlags lk_in;
  std::string lk_gamma, lk_direction, lk_eval, lk_hessian;
  bool lk_support = false;
  auto* lk = app.add_subcommand("likelihood", "likelihood polynomial and its derivatives");
  add_input(lk, lk_in, true);
  lk->add_option("--gamma", lk_gamma, "differentiate by w^gamma first");
  lk->add_option("--direction", lk_direction, "then differentiate along these directions (;-separated)");
  lk->add_option("--evaluate", lk_eval, "exact evaluation point");
  lk->add_option("--hessian-at", lk_hessian, "exact Hessian point");
  lk->add_flag("--support", lk_support);

  // certify
  InputFlags ce_in;
  double ce_tol = kDefaultTolerance;
  bool ce_summary = false;
  auto* ce = app.add_subcommand("certify", "Lorentzian certificate");
  add_input(ce, ce_in, true);
  ce->add_option("--tol", ce_tol);
  ce->add_flag("--summary", ce_summary);

  // strict-check
  InputFlags sc_in;
  double sc_tol = kDefaultTolerance;
  auto* sc = app.add_subcommand("strict-check", "strictly Lorentzian recursion");
  add_input(sc, sc_in, true);
  sc->add_option("--tol", sc_tol);

  // spot-logconcave
  InputFlags sp_in;
  std::uint64_t sp_seed = 7;
  int sp_draws = 1000;
  double sp_tol = kDefaultTolerance;
  std::string sp_at;
  auto* sp = app.add_subcommand("spot-logconcave", "randomized log-concavity spot checks");
  add_input(sp, sp_in, true);
  sp->add_option("--seed", sp_seed);
  sp->add_option("--draws", sp_draws)->check(CLI::NonNegativeNumber);
  sp->add_option("--tol", sp_tol);
  sp->add_option("--at", sp_at, "report the log-Hessian maximum eigenvalue at this point");

  // mle
  InputFlags ml_in;
  std::string ml_p0 = "uniform";
  MleOptions ml_opts;
  int ml_restarts = 0;
  std::uint64_t ml_seed = 7;
  bool ml_step = false;
  auto* ml = app.add_subcommand("mle", "censored multinomial MLE by EM");
  add_input(ml, ml_in, false);
  ml->add_option("--p0", ml_p0, "uniform or a comma list");
  ml->add_option("--tol", ml_opts.tol);
  ml->add_option("--max-iter", ml_opts.max_iter)->check(CLI::PositiveNumber);
  ml->add_flag("--trace", ml_opts.trace);
  ml->add_option("--restarts", ml_restarts)->check(CLI::NonNegativeNumber);
  ml->add_option("--seed", ml_seed);
  ml->add_flag("--step", ml_step, "one EM step from p0 instead of the full run");

  // counterexamples
  std::string cx_dir = MCONVEX_FIXTURE_DIR;
  bool cx_write = false;
  auto* cx = app.add_subcommand("counterexamples", "regenerate and diff the bounding-set fixtures");
  cx->add_option("--fixtures", cx_dir);
  cx->add_flag("--write", cx_write, "overwrite the fixture files");

  // battery
  std::string bt_kind;
  BatteryConfig bt;
  auto* ba = app.add_subcommand("battery", "property batteries");
  ba->add_option("--kind", bt_kind)
      ->required()
      ->check(CLI::IsMember({"rect-mconvex", "psr-mconvex", "exchange-constructive",
                             "lorentz-grid", "em-monotone"}));
  ba->add_option("--seed", bt.seed);
  ba->add_option("--count", bt.random_count, "random instances (kind default if omitted)");
  ba->add_option("--n-min", bt.n_min);
  ba->add_option("--n-max", bt.n_max);
  ba->add_option("--random-n-max", bt.random_n_max);
  ba->add_flag("--grid", bt.include_grid, "exchange-constructive: include the m=3 grid");
  ba->add_option("--tol", bt.tol);

  const auto first = std::find_if(args.begin(), args.end(),
                                  [](const std::string& a) { return !a.starts_with("-"); });
  if (first != args.end()) {
    const auto& table = dispatch_table();
    const bool known = std::any_of(table.begin(), table.end(),
                                   [&](const SubcommandInfo& s) { return s.name == *first; });
    if (!known) {
      ctx.err << json_io::error_json("usage", "unknown subcommand " + *first).dump() << "\n";
      return kExitInput;
    }
  }

  std::vector<const char*> argv{"mconvex"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    ctx.out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    ctx.out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    ctx.err << json_io::error_json("usage", e.what()).dump() << "\n";
    return kExitInput;
  }
  ctx.exec = serial ? Execution::kSerial : Execution::kParallel;
  bt.exec = ctx.exec;
  ml_opts.exec = ctx.exec;

  if (en->parsed()) {
    Json out;
    std::vector<LatticePoint> pts;
    if (!en_in.constraint.empty()) {
      if (en_m >= 0 || en_n >= 0) invalid("give either --constraint or --m/--n");
      const ConstraintSet c = require_constraint(en_in, ctx);
      out["constraint"] = json_io::to_json(c);
      out["simplex_size"] = simplex_size(spec_of(c)).get_str();
      if (!en_contains.empty()) {
        out["contains"] = contains(c, LatticePoint(int_list(en_contains, "--contains")));
      }
      if (en_convert) {
        const auto* w = std::get_if<PartialSumRectangle>(&c);
        if (w == nullptr) invalid("--convert needs a partial sum rectangle");
        const Rectangle r = w->spec().m() == 2 ? rectangle_from_psr_m2(*w) : psr_to_rectangle_m3(*w);
        out["rectangle"] = json_io::to_json(ConstraintSet{r});
      }
      pts = enumerate_constraint(c);
    } else {
      if (en_m < 0 || en_n < 0) invalid("--constraint or both --m and --n are required");
      const SimplexSpec spec(en_m, en_n);
      out["spec"] = json_io::to_json(spec);
      out["simplex_size"] = simplex_size(spec).get_str();
      if (!en_contains.empty()) {
        out["contains"] = belongs_to(LatticePoint(int_list(en_contains, "--contains")), spec);
      }
      pts = enumerate_simplex(spec);
    }
    out["count"] = pts.size();
    if (en_bounding && !pts.empty()) {
      const ExplicitSet set(SimplexSpec(static_cast<int>(pts[0].size()), pts[0].total()), pts);
      out["bounding_rectangle"] = json_io::to_json(ConstraintSet{minimal_bounding_rectangle(set)});
      out["bounding_psr"] = json_io::to_json(ConstraintSet{minimal_bounding_psr(set)});
    }
    if (!en_count_only) {
      Json list = Json::array();
      for (const auto& p : pts) {
        if (!en_sums && !en_multi) {
          list.push_back(json_io::to_json(p));
          continue;
        }
        Json item{{"point", json_io::to_json(p)}};
        if (en_sums) item["partial_sums"] = partial_sums(p);
        if (en_multi) item["multinomial"] = multinomial_coefficient(p).get_str();
        list.push_back(item);
      }
      out["points"] = list;
    }
    ctx.out << dump(out);
    return kExitOk;
  }

  if (cm->parsed()) {
    const ConstraintSet c = require_constraint(cm_in, ctx);
    const bool exchange_query = !cm_alpha.empty() || !cm_beta.empty() || cm_i != 0;
    if (exchange_query) {
      if (cm_alpha.empty() || cm_i == 0) invalid("--alpha and --i are required");
      const LatticePoint alpha(int_list(cm_alpha, "--alpha"));
      const std::size_t i = one_based(cm_i, "--i");
      ExchangeWitness wit{alpha, LatticePoint{}, i, std::nullopt, std::nullopt};
      Json out;
      if (cm_j != 0) {
        wit.j = one_based(cm_j, "--j");
      } else {
        if (cm_beta.empty()) invalid("--beta is required unless --j is given");
        wit.beta = LatticePoint(int_list(cm_beta, "--beta"));
        if (const auto* w = std::get_if<PartialSumRectangle>(&c)) {
          const auto order = cm_order == "below-first" ? SelectorOrder::kBelowFirst
                                                       : SelectorOrder::kAboveFirst;
          const FeasibleIndex f = find_feasible_index(*w, alpha, wit.beta, i, order);
          wit.j = f.j;
          out["branch"] = f.branch == ExchangeBranch::kAbove ? "above" : "below";
        } else if (const auto* r = std::get_if<Rectangle>(&c)) {
          wit.j = rectangle_exchange_index(*r, alpha, wit.beta, i);
        } else {
          invalid("exchange index selection needs a rectangle or partial sum rectangle");
        }
      }
      wit.result = exchange(alpha, i, *wit.j);
      out["exchange"] = json_io::to_json(wit);
      if (wit.beta.size() == 0) out["exchange"].erase("beta");
      const bool member = contains(c, *wit.result);
      out["result_in_constraint"] = member;
      ctx.out << dump(out);
      return member ? kExitOk : kExitFalse;
    }
    const MConvexityReport rep = is_mconvex_bruteforce(c, ctx.exec);
    Json out = json_io::to_json(rep);
    bool ok = rep.verdict;
    if (cm_constructive) {
      ExchangeTheoremReport th;
      if (const auto* w = std::get_if<PartialSumRectangle>(&c)) {
        th = verify_exchange_theorem(*w,
                                     cm_order == "below-first" ? SelectorOrder::kBelowFirst
                                                               : SelectorOrder::kAboveFirst,
                                     ctx.exec);
      } else if (const auto* r = std::get_if<Rectangle>(&c)) {
        th = verify_rectangle_exchange(*r, ctx.exec);
      } else {
        invalid("--constructive needs a rectangle or partial sum rectangle");
      }
      out["constructive"] = json_io::to_json(th);
      ok = ok && th.passed();
    }
    ctx.out << dump(out);
    return ok ? kExitOk : kExitFalse;
  }

  if (lk->parsed()) {
    HomogeneousPolynomial f = require_polynomial(lk_in, ctx);
    Json out;
    if (!lk_gamma.empty()) f = partial_derivative(f, int_list(lk_gamma, "--gamma"));
    if (!lk_direction.empty()) {
      std::stringstream ss(lk_direction);
      std::string one;
      while (std::getline(ss, one, ';')) {
        f = directional_derivative(f, DirectionVector(rational_list(one, "--direction")));
      }
    }
    out["polynomial"] = json_io::to_json(f);
    if (!lk_eval.empty()) {
      out["value"] = json_io::to_json(evaluate(f, rational_list(lk_eval, "--evaluate")));
    }
    if (!lk_hessian.empty()) {
      out["hessian"] = json_io::matrix_to_json(hessian(f, rational_list(lk_hessian, "--hessian-at")));
    }
    if (lk_support) out["support"] = points_json(support(f).points());
    ctx.out << dump(out);
    return kExitOk;
  }

  if (ce->parsed()) {
    const auto cert = certify_lorentzian(require_polynomial(ce_in, ctx), ce_tol, ctx.exec);
    ctx.out << dump(json_io::to_json(cert, ce_summary));
    return cert.verdict ? kExitOk : kExitFalse;
  }

  if (sc->parsed()) {
    const auto res = strictly_lorentzian_check(require_polynomial(sc_in, ctx), sc_tol);
    ctx.out << dump(json_io::to_json(res));
    return res.passed ? kExitOk : kExitFalse;
  }

  if (sp->parsed()) {
    const HomogeneousPolynomial f = require_polynomial(sp_in, ctx);
    Rng rng(sp_seed);
    const SpotSuiteResult suite = random_spot_suite(f, rng, sp_draws, sp_tol);
    const bool ok = suite.strong.verdict && suite.complete.verdict;
    Json out{{"seed", sp_seed},
             {"strong", json_io::to_json(suite.strong)},
             {"complete", json_io::to_json(suite.complete)},
             {"verdict", ok}};
    if (!sp_at.empty()) {
      out["log_hessian_max_eigenvalue"] =
          json_io::number(log_hessian_max_eigenvalue(f, double_list(sp_at, "--at")));
    }
    ctx.out << dump(out);
    return ok ? kExitOk : kExitFalse;
  }

  if (ml->parsed()) {
    const ConstraintSet c = require_constraint(ml_in, ctx);
    const int m = spec_of(c).m();
    const ProbabilityVector p0 = ml_p0 == "uniform" ? ProbabilityVector::uniform(m)
                                                    : ProbabilityVector(double_list(ml_p0, "--p0"));
    if (ml_step) {
      const CensoredLikelihood model(c, ctx.exec);
      Json out{{"p", p0.values()},
               {"log_likelihood", json_io::number(model.log_likelihood(p0.values()))},
               {"conditional_expectation", model.conditional_expectation(p0.values())},
               {"em_step", model.em_step(p0).values()}};
      ctx.out << dump(out);
      return kExitOk;
    }
    if (ml_restarts > 0) {
      const auto runs = mle_restarts(c, ml_restarts, ml_seed, ml_opts);
      Json list = Json::array();
      std::size_t best = 0;
      for (std::size_t k = 0; k < runs.size(); ++k) {
        list.push_back(json_io::to_json(runs[k]));
        if (runs[k].log_likelihood > runs[best].log_likelihood) best = k;
      }
      ctx.out << dump(Json{{"runs", list}, {"best", best}, {"seed", ml_seed}});
      return kExitOk;
    }
    ctx.out << dump(json_io::to_json(mle(c, p0, ml_opts)));
    return kExitOk;
  }

  if (cx->parsed()) {
    const Json report{{"rectangle_m3n8", rectangle_m3_report()}, {"psr_m4n5", psr_m4_report()}};
    const auto files = fixture_files(report);
    namespace fs = std::filesystem;
    Json status{{"checked", Json::array()}, {"mismatches", Json::array()}};
    if (cx_write) {
      fs::create_directories(cx_dir);
      for (const auto& f : files) {
        std::ofstream(fs::path(cx_dir) / f.name) << dump(f.content);
        status["checked"].push_back(f.name);
      }
      status["written"] = true;
    } else {
      for (const auto& f : files) {
        status["checked"].push_back(f.name);
        std::ifstream file(fs::path(cx_dir) / f.name);
        bool same = false;
        if (file) {
          std::stringstream ss;
          ss << file.rdbuf();
          try {
            same = Json::parse(ss.str()) == f.content;
          } catch (const Json::parse_error&) {
            same = false;
          }
        }
        if (!same) status["mismatches"].push_back(f.name);
      }
    }
    Json out = report;
    out["fixtures"] = status;
    ctx.out << dump(out);
    return status["mismatches"].empty() ? kExitOk : kExitFalse;
  }

  if (ba->parsed()) {
    const auto kind = battery_kind_from_string(bt_kind);
    const auto t0 = std::chrono::steady_clock::now();
    const Json out = run_battery(*kind, bt);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    ctx.err << Json{{"wall_time_s", secs}}.dump() << "\n";
    ctx.out << dump(out);
    return out["failures"].get<std::uint64_t>() == 0 ? kExitOk : kExitFalse;
  }
  return kExitInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Context ctx{std::cin, out, err};
  try {
    return run_impl(args, ctx);
  } catch (const Error& e) {
    err << json_io::error_json(e).dump() << "\n";
    return kExitInput;
  } catch (const nlohmann::json::exception& e) {
    err << json_io::error_json("validation", e.what()).dump() << "\n";
    return kExitInput;
  }
}

}  // namespace mconvex::cli
