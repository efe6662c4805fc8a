#include "norlund/hyper.hpp"

#include <cmath>
#include <complex>
#include <functional>
#include <sstream>

#include "highprec.hpp"
#include "norlund/buhring.hpp"
#include "norlund/errors.hpp"
#include "norlund/norlund.hpp"
#include "norlund/serialize.hpp"

namespace norlund {

namespace {

// terminating pFq(-n, num; den; 1), summed over the n+1 terms by the ratio
// recurrence; stays rational for rational inputs
Scalar tpfq1(long long n, const std::vector<Scalar>& num,
             const std::vector<Scalar>& den) {
  Scalar s(0), t(1);
  for (long long k = 0; k <= n; ++k) {
    s += t;
    if (k == n) break;
    Scalar ratio = Scalar(k - n);
    for (const auto& u : num) ratio *= u + Scalar(k);
    for (const auto& v : den) {
      Scalar d = v + Scalar(k);
      if (d.is_zero())
        throw PoleError("terminating series: lower parameter hits a nonpositive integer");
      ratio /= d;
    }
    ratio /= Scalar(k + 1);
    t *= ratio;
  }
  return s;
}

double scale_of(const Scalar& lhs, const Scalar& rhs) {
  return std::max({1.0, abs_val(lhs), abs_val(rhs)});
}

nlohmann::json scalars_json(
    std::initializer_list<std::pair<const char*, Scalar>> kv) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, v] : kv) j[name] = scalar_to_json(v);
  return j;
}

}  // namespace

HyperSpec HyperSpec::make(std::vector<Scalar> upper, std::vector<Scalar> lower) {
  HyperSpec spec;
  spec.upper = std::move(upper);
  spec.lower = std::move(lower);
  for (const auto& u : spec.upper) {
    if (u.is_nonpos_integer()) {
      long long t = -u.to_integer();
      if (!spec.terminating_index || t < *spec.terminating_index)
        spec.terminating_index = t;
    }
  }
  for (const auto& v : spec.lower) {
    if (v.is_nonpos_integer()) {
      long long pole_at = -v.to_integer();
      if (!spec.terminating_index || pole_at < *spec.terminating_index)
        throw PoleError("pFq: lower parameter is a nonpositive integer");
    }
  }
  return spec;
}

Scalar eval_pfq(const HyperSpec& spec, const Scalar& z, double tol,
                long long max_terms) {
  if (spec.terminating_index) {
    long long n = *spec.terminating_index;
    Scalar s(0), t(1);
    for (long long k = 0; k <= n; ++k) {
      s += t;
      if (k == n) break;
      Scalar ratio(1);
      for (const auto& u : spec.upper) ratio *= u + Scalar(k);
      for (const auto& v : spec.lower) {
        Scalar d = v + Scalar(k);
        if (d.is_zero()) throw PoleError("pFq: lower parameter pole before termination");
        ratio /= d;
      }
      t *= ratio * z / Scalar(k + 1);
    }
    return s;
  }

  const Complex cz = z.cx();
  const double az = std::abs(cz);
  if (az < 1.0) {
    Complex acc(0.0, 0.0), t(1.0, 0.0);
    int consec = 0;
    for (long long k = 0; k < max_terms; ++k) {
      acc += t;
      double scale = std::max(1.0, std::abs(acc));
      if (std::abs(t) <= tol * scale) {
        if (++consec >= 3) return Scalar(acc);
      } else {
        consec = 0;
      }
      Complex ratio(1.0, 0.0);
      for (const auto& u : spec.upper) ratio *= u.cx() + Complex(k);
      for (const auto& v : spec.lower) {
        Complex d = v.cx() + Complex(k);
        if (d == Complex(0.0, 0.0))
          throw PoleError("pFq: lower parameter hits a nonpositive integer");
        ratio /= d;
      }
      t *= ratio * cz / Complex(k + 1);
    }
    throw NoConvergence("pFq: term cap reached before stagnation");
  }

  if (cz == Complex(1.0, 0.0)) {
    Complex excess(0.0, 0.0);
    for (const auto& v : spec.lower) excess += v.cx();
    for (const auto& u : spec.upper) excess -= u.cx();
    if (excess.real() <= 0.0)
      throw ConvergenceViolation(
          "pFq(1): needs Re(sum lower - sum upper) > 0");
    std::vector<hp::HC> num, den;
    for (const auto& u : spec.upper) num.push_back(hp::from_cx(u.cx()));
    for (const auto& v : spec.lower) den.push_back(hp::from_cx(v.cx()));
    auto res = hp::pfq_at_1(num, den, 150);
    if (!res.converged && res.est_err > 1e-5 * std::max(1.0, static_cast<double>(abs(res.value))))
      throw NoConvergence("pFq(1): accelerated sum did not settle");
    return Scalar(hp::to_cx(res.value));
  }

  throw ConvergenceViolation("pFq: series diverges for |z| > 1 (and z != 1)");
}

IdentityReport gauss_connection_residual(const Scalar& alpha1,
                                         const Scalar& alpha2,
                                         const Scalar& beta, const Scalar& z,
                                         double tol) {
  nlohmann::json params = scalars_json(
      {{"alpha1", alpha1}, {"alpha2", alpha2}, {"beta", beta}, {"z", z}});
  const Complex a1 = alpha1.cx(), a2 = alpha2.cx(), be = beta.cx(), cz = z.cx();
  const Complex diff = be - a1 - a2;
  if (near_integer(diff))
    throw DegenerateParameters(
        "gauss_connection: beta - alpha1 - alpha2 is (nearly) an integer");

  // Sum the series to machine precision regardless of the reporting
  // tolerance; otherwise truncation error masquerades as a residual.
  const double inner = std::min(tol * 1e-6, 1e-15);
  Scalar one_minus_z = Scalar(1) - z;
  Scalar lhs =
      eval_pfq(HyperSpec::make({alpha1, alpha2}, {beta}), one_minus_z, inner);

  Complex c1 = gamma_ratio_product({be, diff}, {be - a1, be - a2});
  Complex c2 = gamma_ratio_product({be, -diff}, {a1, a2});
  Complex t1 = c1 * eval_pfq(HyperSpec::make({alpha1, alpha2},
                                             {alpha1 + alpha2 - beta + Scalar(1)}),
                             z, inner)
                   .cx();
  Complex t2 = c2 * std::pow(cz, diff) *
               eval_pfq(HyperSpec::make({beta - alpha1, beta - alpha2},
                                        {beta - alpha1 - alpha2 + Scalar(1)}),
                        z, inner)
                   .cx();
  Scalar rhs(t1 + t2);
  double scale = std::max({1.0, std::abs(t1), std::abs(t2), abs_val(lhs)});
  return make_report("gauss_connection", params, lhs, rhs, scale, tol);
}

Scalar buhring_expansion_eval(const ParamSet& params, int s, const Scalar& z,
                              int N, double tol) {
  const Complex psi = params.psi_p().cx();
  if (near_integer(psi))
    throw DegenerateParameters("buhring_expansion_eval: psi_p is (nearly) an integer");
  const Complex omz = Complex(1.0, 0.0) - z.cx();
  if (std::abs(omz) >= 1.0)
    throw ConvergenceViolation("buhring_expansion_eval: needs |1 - z| < 1");

  CoeffTable f = f_from_g(g_young(params, s, N), params);
  CoeffTable h = h_multisum(params, s, N, tol);

  Complex fsum(0.0, 0.0), hsum(0.0, 0.0);
  for (int n = N; n >= 0; --n) {
    fsum = fsum * omz + f.values[n].cx();
    hsum = hsum * omz + h.values[n].cx();
  }
  return Scalar(std::pow(omz, psi - Complex(1.0, 0.0)) * fsum + hsum);
}

IdentityReport sheppard_residual_p3(long long n, const Scalar& alpha1,
                                    const Scalar& alpha2, const Scalar& beta1,
                                    const Scalar& beta2) {
  nlohmann::json params = scalars_json({{"n", Scalar(n)},
                                        {"alpha1", alpha1},
                                        {"alpha2", alpha2},
                                        {"beta1", beta1},
                                        {"beta2", beta2}});
  Scalar lhs = tpfq1(n, {alpha1, alpha2}, {beta1, beta2});
  Scalar rhs = rising_factorial(beta2 - alpha2, n) /
               rising_factorial(beta2, n) *
               tpfq1(n, {beta1 - alpha1, alpha2},
                     {beta1, Scalar(1) - beta2 + alpha2 - Scalar(n)});
  return make_report("sheppard_p3", params, lhs, rhs, scale_of(lhs, rhs), 0.0);
}

IdentityReport buhring_p4_residual(long long n, const Scalar& alpha1,
                                   const Scalar& alpha2, const Scalar& beta1,
                                   const Scalar& beta2, const Scalar& gamma1,
                                   const Scalar& gamma2) {
  nlohmann::json params = scalars_json({{"n", Scalar(n)},
                                        {"alpha1", alpha1},
                                        {"alpha2", alpha2},
                                        {"beta1", beta1},
                                        {"beta2", beta2},
                                        {"gamma1", gamma1},
                                        {"gamma2", gamma2}});
  Scalar lhs(0);
  for (long long k = 0; k <= n; ++k) {
    Scalar t = rising_factorial(Scalar(-n), k) * rising_factorial(alpha1, k) *
               rising_factorial(alpha2, k) /
               (rising_factorial(beta1, k) * rising_factorial(beta2, k) *
                factorial_scalar(k));
    lhs += t * tpfq1(k, {gamma1, gamma2}, {alpha1, alpha2});
  }
  Scalar rsum(0);
  for (long long k = 0; k <= n; ++k) {
    Scalar t = rising_factorial(Scalar(-n), k) * rising_factorial(alpha2, k) *
               rising_factorial(beta1 - alpha1, k) /
               (rising_factorial(beta1, k) *
                rising_factorial(Scalar(1) + alpha2 - beta2 - Scalar(n), k) *
                factorial_scalar(k));
    rsum += t * tpfq1(k, {gamma1, gamma2},
                      {alpha2, Scalar(1) + alpha1 - beta1 - Scalar(k)});
  }
  Scalar rhs = rising_factorial(beta2 - alpha2, n) /
               rising_factorial(beta2, n) * rsum;
  return make_report("buhring_p4", params, lhs, rhs, scale_of(lhs, rhs), 0.0);
}

IdentityReport multiseries_transform_residual(const ParamSet& params, int n) {
  const int p = params.p();
  if (p < 3) throw UnsupportedOrder("multiseries_transform: needs p >= 3");
  if (n > 8 || p > 5)
    throw Error("multiseries_transform: enumeration bounded at n <= 8, p <= 5");
  nlohmann::json jp = param_set_to_json(params);
  jp["n"] = n;

  const Scalar psi_p = params.psi(p);
  Scalar lhs(0);
  // outer index: the level of the next-to-last chain entry
  for (int jtop = 0; jtop <= n; ++jtop) {
    Scalar outer = rising_factorial(
        psi_p + params.a[p - 1] - params.b[p - 2] + Scalar(jtop), n - jtop);
    if (jtop % 2 == 1) outer = -outer;
    // weakly increasing chains j_1 <= ... <= j_{p-3} <= jtop, boundary
    // values 0, jtop, n appended
    Scalar inner(0);
    std::vector<int> js(p + 1);
    js[0] = 0;
    js[p - 2] = jtop;
    js[p - 1] = n;
    std::function<void(int, int, Scalar)> rec = [&](int pos, int lo, Scalar prod) {
      if (pos == p - 2) {
        Scalar t = prod;
        for (int m = pos; m <= p - 1; ++m) {
          int d = js[m] - js[m - 1];
          if (d < 0) return;
          t *= rising_factorial(params.psi(m) + Scalar(js[m - 1]), d) /
               factorial_scalar(d);
          if (m <= p - 2)
            t *= rising_factorial(params.b[m - 1] - params.a[m], d);
        }
        inner += t;
        return;
      }
      for (int v = lo; v <= jtop; ++v) {
        js[pos] = v;
        int d = v - js[pos - 1];
        Scalar t = prod *
                   rising_factorial(params.psi(pos) + Scalar(js[pos - 1]), d) /
                   factorial_scalar(d) *
                   rising_factorial(params.b[pos - 1] - params.a[pos], d);
        rec(pos + 1, v, t);
      }
    };
    rec(1, 0, Scalar(1));
    lhs += outer * inner;
  }
  CoeffTable g = g_young(params, p, n);
  Scalar rhs = g.values[n];
  return make_report("multiseries_transform", jp, lhs, rhs, scale_of(lhs, rhs),
                     0.0);
}

}  // namespace norlund
