// Command-line front end: coefficient tables, function evaluation and the
// identity suite, with JSON/CSV/human output.
//
// Exit codes: 0 success (all pass), 1 internal error, 2 precondition
// failure (or skips under --strict), 64 usage error.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "norlund/buhring.hpp"
#include "norlund/errors.hpp"
#include "norlund/gfunction.hpp"
#include "norlund/hyper.hpp"
#include "norlund/identities.hpp"
#include "norlund/norlund.hpp"
#include "norlund/serialize.hpp"

namespace {

using namespace norlund;

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kPrecondition = 2;
constexpr int kUsage = 64;

long long max_terms_from_env(long long fallback) {
  if (const char* env = std::getenv("NORLUND_MAX_TERMS")) {
    try {
      long long v = std::stoll(env);
      if (v > 0) return v;
    } catch (...) {
    }
  }
  return fallback;
}

std::vector<Scalar> parse_csv(const std::string& text, bool exact) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    out.push_back(scalar_from_string(item, exact));
  }
  return out;
}

struct Usage : std::runtime_error {
  using std::runtime_error::runtime_error;
};

ParamSet parse_params(const std::string& a_csv, const std::string& b_csv,
                      bool exact) {
  ParamSet params;
  params.a = parse_csv(a_csv, exact);
  params.b = parse_csv(b_csv, exact);
  if (params.a.empty() || params.a.size() != params.b.size())
    throw Usage("--a and --b must be nonempty lists of equal length");
  return params;
}

int cmd_coeffs(const std::string& kind, const std::string& a_csv,
               const std::string& b_csv, int k, int s, int n,
               std::string method, const std::string& mode, double tol,
               const std::string& output) {
  const bool exact = (mode == "exact");
  if (exact && kind != "g")
    throw Usage("--mode exact is only available for --kind g");
  ParamSet params = parse_params(a_csv, b_csv, exact);

  CoeffTable table;
  if (kind == "g") {
    if (method.empty()) method = "young";
    if (method == "young") {
      table = g_young(params, k, n);
    } else if (method == "recurrence_n") {
      table = g_recurrence_n(params, k, n);
    } else if (method == "recurrence_p") {
      table = g_recurrence_p(params, k, n);
    } else if (method == "bernoulli" || method == "bernoulli_psi") {
      table = g_bernoulli(params, k, n, BernoulliForm::Psi);
    } else if (method == "bernoulli_tilde") {
      table = g_bernoulli(params, k, n, BernoulliForm::Tilde);
    } else {
      throw Usage("unknown g method '" + method + "'");
    }
  } else if (kind == "f") {
    table = f_from_g(g_young(params, s > 0 ? s : k, n), params);
  } else if (kind == "h") {
    int anchor = s > 0 ? s : k;
    if (method.empty()) method = "multisum";
    if (method == "multisum") {
      table = h_multisum(params, anchor, n, tol);
    } else if (method == "from_D") {
      table = h_from_D(params, anchor, n, tol);
    } else {
      throw Usage("unknown h method '" + method + "'");
    }
  } else if (kind == "D") {
    if (method.empty()) method = "v535";
    DVariant v;
    if (method == "v535") {
      v = DVariant::v535;
    } else if (method == "v536") {
      v = DVariant::v536;
    } else {
      throw Usage("unknown D method '" + method + "'");
    }
    table = D_coeffs(params, k, s, n, v, tol);
  } else {
    throw Usage("unknown --kind '" + kind + "'");
  }

  if (output == "csv") {
    std::cout << "n,value\n";
    for (int i = 0; i <= table.N(); ++i)
      std::cout << i << "," << scalar_to_string(table.values[i]) << "\n";
  } else if (output == "human") {
    for (int i = 0; i <= table.N(); ++i)
      std::cout << kind << "(" << i
                << ") = " << scalar_to_string(table.values[i]) << "\n";
  } else {
    std::cout << coeff_table_to_json(table).dump() << "\n";
  }
  return kOk;
}

int cmd_eval(const std::string& fn, const std::string& a_csv,
             const std::string& b_csv, double zv, int k, int s, double tol,
             long long max_terms) {
  if (zv <= 0.0 || zv == 1.0)
    throw Usage("--z must lie in (0,1) or (1,inf)");
  ParamSet params = parse_params(a_csv, b_csv, false);
  nlohmann::json meta;
  Scalar value;
  if (fn == "gp0pp") {
    value = gp0pp_eval(params, Scalar(zv), tol);
    meta["regime"] = zv > 1.0 ? "zero" : (zv <= 0.5 ? "near-0" : "near-1");
  } else if (fn == "g2ppp") {
    if (zv > 1.0) {
      value = Scalar(Complex(0.0, 0.0));
      meta["regime"] = "zero";
    } else {
      int terms = 40;
      SeriesExpansion exp = g2ppp_near1(params, k, s, terms, tol);
      value = exp.eval_at(Scalar(1.0 - zv));
      meta["regime"] = "near-1";
      meta["terms"] = terms + 1;
    }
  } else if (fn == "pfq") {
    HyperSpec spec = HyperSpec::make(params.a, params.b);
    value = eval_pfq(spec, Scalar(zv), tol, max_terms);
    meta["regime"] = spec.terminating_index ? "terminating" : "series";
  } else {
    throw Usage("unknown --fn '" + fn + "'");
  }
  nlohmann::json out;
  out["value"] = {value.cx().real(), value.cx().imag()};
  out["meta"] = meta;
  std::cout << out.dump() << "\n";
  return kOk;
}

int cmd_verify(const std::string& suites_csv, int trials, long long seed,
               const std::string& p_range, const std::string& tol_profile_path,
               const std::string& output, bool strict) {
  static const std::vector<std::string> known = {
      "all",          "ptolemy",      "identity1", "identity2",
      "circular",     "three_term_G", "three_term_D", "connection",
      "corollary37",  "gauss",        "terminating"};
  std::vector<std::string> suites;
  {
    std::stringstream ss(suites_csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty()) continue;
      bool ok = false;
      for (const auto& name : known) ok = ok || (name == item);
      if (!ok) throw Usage("unknown identity suite '" + item + "'");
      suites.push_back(item);
    }
  }
  if (suites.empty()) throw Usage("--suite must name at least one suite");

  int p_lo = 0, p_hi = 0;
  if (!p_range.empty()) {
    auto dots = p_range.find("..");
    if (dots == std::string::npos) {
      p_lo = p_hi = std::stoi(p_range);
    } else {
      p_lo = std::stoi(p_range.substr(0, dots));
      p_hi = std::stoi(p_range.substr(dots + 2));
    }
    if (p_lo < 1 || p_hi < p_lo) throw Usage("bad --p range");
  }

  TolProfile profile;
  if (!tol_profile_path.empty()) {
    std::ifstream in(tol_profile_path);
    if (!in) throw Usage("cannot open tol-profile file");
    nlohmann::json j;
    in >> j;
    profile.finite = j.value("finite", profile.finite);
    profile.single_series = j.value("single_series", profile.single_series);
    profile.composed = j.value("composed", profile.composed);
  }

  long long failures = 0, skips = 0;
  if (output == "csv")
    std::cout << "identity_id,seed,trial,verdict,abs_residual,rel_residual,"
                 "tolerance\n";
  for (const auto& suite : suites) {
    auto reports = run_suite(seed, trials, profile, suite, p_lo, p_hi);
    for (const auto& r : reports) {
      if (r.verdict == "fail") ++failures;
      if (r.verdict == "skipped") ++skips;
      if (output == "csv") {
        std::cout << r.identity_id << "," << r.seed << "," << r.trial << ","
                  << r.verdict << "," << r.abs_residual << ","
                  << r.rel_residual << "," << r.tolerance << "\n";
      } else if (output == "human") {
        std::cout << r.identity_id << " trial " << r.trial << ": " << r.verdict;
        if (r.skipped_reason) std::cout << " (" << *r.skipped_reason << ")";
        std::cout << "\n";
      } else {
        std::cout << report_to_json(r).dump() << "\n";
      }
    }
  }
  std::cerr << "failures=" << failures << " skipped=" << skips << "\n";
  if (failures > 0) return kInternal;
  if (strict && skips > 0) return kPrecondition;
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Expansion coefficients and identity checks for balanced "
               "Meijer G-functions and pF(p-1) around z = 1"};
  app.require_subcommand(1);

  std::string mode = "float", output = "json";
  double tol = 1e-10;
  long long max_terms = 10000, seed = 42;
  app.add_option("--mode", mode)->check(CLI::IsMember({"exact", "float"}));
  app.add_option("--tol", tol)->check(CLI::PositiveNumber);
  app.add_option("--max-terms", max_terms)->check(CLI::PositiveNumber);
  app.add_option("--output", output)
      ->check(CLI::IsMember({"json", "csv", "human"}));
  app.add_option("--seed", seed);

  auto* coeffs = app.add_subcommand("coeffs", "print a coefficient table");
  coeffs->fallthrough();
  std::string kind, a_csv, b_csv, method;
  int kk = 1, ss = 0, nn = 0;
  coeffs->add_option("--kind", kind)->required()
      ->check(CLI::IsMember({"g", "f", "h", "D"}));
  coeffs->add_option("--a", a_csv)->required();
  coeffs->add_option("--b", b_csv)->required();
  coeffs->add_option("--k", kk);
  coeffs->add_option("--s", ss);
  coeffs->add_option("--n", nn)->required()->check(CLI::NonNegativeNumber);
  coeffs->add_option("--method", method);

  auto* eval = app.add_subcommand("eval", "evaluate a function at a point");
  eval->fallthrough();
  std::string fn;
  double zv = 0.5;
  eval->add_option("--fn", fn)->required()
      ->check(CLI::IsMember({"gp0pp", "g2ppp", "pfq"}));
  eval->add_option("--a", a_csv)->required();
  eval->add_option("--b", b_csv)->required();
  eval->add_option("--z", zv)->required();
  eval->add_option("--k", kk);
  eval->add_option("--s", ss);

  auto* verify = app.add_subcommand("verify", "run the identity suite");
  verify->fallthrough();
  std::string suites = "all", p_range, tol_profile_path;
  int trials = 10;
  bool strict = false;
  verify->add_option("--suite", suites);
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify->add_option("--p", p_range);
  verify->add_option("--tol-profile", tol_profile_path);
  verify->add_flag("--strict", strict);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return kUsage;
  }

  max_terms = max_terms_from_env(max_terms);

  try {
    if (coeffs->parsed())
      return cmd_coeffs(kind, a_csv, b_csv, kk, ss, nn, method, mode, tol,
                        output);
    if (eval->parsed())
      return cmd_eval(fn, a_csv, b_csv, zv, kk, ss, tol, max_terms);
    if (verify->parsed())
      return cmd_verify(suites, trials, seed, p_range, tol_profile_path,
                        output, strict);
  } catch (const Usage& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const PoleError& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ConvergenceViolation& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const DegenerateParameters& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const UnsupportedOrder& e) {
    std::cerr << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  }
  return kUsage;
}
