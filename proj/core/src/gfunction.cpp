#include "norlund/gfunction.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <sstream>

#include "highprec.hpp"
#include "norlund/errors.hpp"
#include "norlund/hyper.hpp"
#include "norlund/norlund.hpp"
#include "norlund/serialize.hpp"

namespace norlund {

namespace {

using hp::HC;

constexpr double kPi = 3.14159265358979323846;

bool psi_is_nonpos_integer(const Scalar& psi) {
  return psi.exact() ? psi.is_nonpos_integer() : near_nonpos_integer(psi.cx());
}

int pick_terms(double r, double tol) {
  if (r <= 0.0) return 1;
  int n = static_cast<int>(std::ceil(std::log(tol) / std::log(r))) + 20;
  return std::clamp(n, 24, 800);
}

void check_levin(const hp::SumResult& res, const char* what) {
  if (res.converged) return;
  if (res.est_err > 1e-5 * std::max(1.0, static_cast<double>(abs(res.value)))) {
    std::ostringstream os;
    os << what << ": accelerated series did not settle after " << res.terms
       << " terms";
    throw NoConvergence(os.str());
  }
}

// Residue-series value around z = 0. Terms whose 1/Gamma(b - a_k) prefactor
// vanishes are skipped rather than treated as poles.
Complex g_near0_value(const ParamSet& params, Complex z, double tol) {
  const int p = params.p();
  for (int k = 1; k <= p; ++k)
    for (int i = k + 1; i <= p; ++i)
      if (near_integer(params.a[i - 1].cx() - params.a[k - 1].cx()))
        throw DegenerateParameters(
            "G series around 0: a-parameters congruent modulo an integer");
  Complex tot(0.0, 0.0);
  for (int k = 1; k <= p; ++k) {
    const Complex ak = params.a[k - 1].cx();
    bool dead = false;
    std::vector<Complex> num, den;
    for (int i = 1; i <= p; ++i) {
      if (i == k) continue;
      num.push_back(params.a[i - 1].cx() - ak);
    }
    for (const auto& bj : params.b) {
      Complex d = bj.cx() - ak;
      if (near_nonpos_integer(d)) {
        dead = true;  // 1/Gamma pole: the whole k-term vanishes
        break;
      }
      den.push_back(d);
    }
    if (dead) continue;
    std::vector<Scalar> up, lo;
    for (const auto& bj : params.b) up.emplace_back(Complex(1.0, 0.0) - bj.cx() + ak);
    for (int i = 1; i <= p; ++i) {
      if (i == k) continue;
      lo.emplace_back(Complex(1.0, 0.0) - params.a[i - 1].cx() + ak);
    }
    Complex pref = std::pow(z, ak) * gamma_ratio_product(num, den);
    tot += pref * eval_pfq(HyperSpec::make(up, lo), Scalar(z), tol).cx();
  }
  return tot;
}

// Double-exponential quadrature on (0, 1). The integrand receives the
// distances to both endpoints (x and 1-x) so endpoint-singular factors can
// be formed without cancellation.
Complex tanh_sinh_01(const std::function<Complex(double, double)>& f,
                     double tol) {
  const double tmax = 6.5;
  auto eval_at = [&](double t) -> Complex {
    double u = 0.5 * kPi * std::sinh(t);
    double eu = std::exp(u), emu = std::exp(-u);
    double den = eu + emu;
    double d0 = emu / den, d1 = eu / den;
    double w = kPi * std::cosh(t) / (den * den);
    if (w < 1e-300 || d0 <= 0.0 || d1 <= 0.0) return Complex(0.0, 0.0);
    return w * f(d0, d1);
  };
  double h = 1.0;
  Complex total(0.0, 0.0);
  for (double t = -tmax; t <= tmax + 1e-12; t += h) total += eval_at(t);
  total *= h;
  Complex prev = total;
  for (int level = 1; level <= 12; ++level) {
    h *= 0.5;
    Complex odd(0.0, 0.0);
    for (double t = -tmax + h; t <= tmax + 1e-12; t += 2.0 * h)
      odd += eval_at(t);
    total = total * 0.5 + odd * h;
    if (level >= 3 &&
        std::abs(total - prev) <= tol * std::max(1.0, std::abs(total)))
      return total;
    prev = total;
  }
  throw QuadratureFailure(
      "tanh-sinh quadrature did not reach the requested tolerance");
}

}  // namespace

Scalar SeriesExpansion::eval_at(const Scalar& one_minus_z) const {
  const Complex omz = one_minus_z.cx();
  const Complex z = Complex(1.0, 0.0) - omz;
  Complex acc(0.0, 0.0);
  for (int n = static_cast<int>(coefficients.size()) - 1; n >= 0; --n)
    acc = acc * omz + coefficients[n].cx();
  Complex pref(1.0, 0.0);
  if (!z_power.is_zero()) pref *= std::pow(z, z_power.cx());
  if (!omz_power.is_zero()) pref *= std::pow(omz, omz_power.cx());
  return Scalar(pref * acc);
}

SeriesExpansion gp0pp_near1(const ParamSet& params, int k, int N) {
  const int p = params.p();
  if (k < 1 || k > p) throw Error("gp0pp_near1: k out of range");
  SeriesExpansion exp;
  exp.center = SeriesExpansion::Center::one;
  exp.anchor_index = k;
  exp.z_power = params.a[k - 1];
  exp.validity = "|1-z|<1";
  const Scalar psi = params.psi_p();
  if (psi_is_nonpos_integer(psi)) {
    long long l = -psi.to_integer();
    CoeffTable g = g_young(params, k, N + static_cast<int>(l) + 1);
    exp.omz_power = Scalar(0);
    exp.coefficients.reserve(N + 1);
    for (int n = 0; n <= N; ++n)
      exp.coefficients.push_back(g.values[n + l + 1] / factorial_scalar(n));
  } else {
    CoeffTable g = g_young(params, k, N);
    exp.omz_power = psi - Scalar(1);
    const Complex gam = gamma_cx(psi.cx());
    exp.coefficients.reserve(N + 1);
    for (int n = 0; n <= N; ++n) {
      Complex poch = rising_factorial(psi.cx(), n);
      exp.coefficients.emplace_back(g.values[n].cx() / (poch * gam));
    }
  }
  return exp;
}

Scalar gp0pp_near0(const ParamSet& params, const Scalar& z, double tol) {
  if (std::abs(z.cx()) >= 1.0)
    throw ConvergenceViolation("G series around 0: needs |z| < 1");
  return Scalar(g_near0_value(params, z.cx(), tol));
}

Scalar gp0pp_eval(const ParamSet& params, const Scalar& z, double tol) {
  const Complex cz = z.cx();
  const double az = std::abs(cz);
  if (az > 1.0) return Scalar(Complex(0.0, 0.0));
  if (az <= 0.5) return Scalar(g_near0_value(params, cz, tol));
  const Complex omz = Complex(1.0, 0.0) - cz;
  const double r = std::abs(omz);
  if (r >= 1.0)
    throw ConvergenceViolation(
        "G evaluation: |z| in (1/2, 1] with |1-z| >= 1 is outside both series regions");
  SeriesExpansion exp = gp0pp_near1(params, params.p(), pick_terms(r, tol));
  return exp.eval_at(Scalar(omz));
}

SeriesExpansion g2ppp_near1(const ParamSet& params, int k, int s, int N,
                            double tol) {
  SeriesExpansion exp;
  exp.center = SeriesExpansion::Center::one;
  exp.anchor_index = s;
  exp.z_power = params.a[s - 1];
  exp.omz_power = Scalar(0);
  exp.validity = "|1-z|<1";
  CoeffTable D;
  try {
    D = D_coeffs(params, k, s, N, DVariant::v535, tol);
  } catch (const ConvergenceViolation&) {
    D = D_coeffs(params, k, s, N, DVariant::v536, tol);
  }
  exp.coefficients = D.values;
  return exp;
}

Scalar g2ppp_polyseries(const ParamSet& params, int k, int s, const Scalar& z,
                        PolyVariant variant, double tol) {
  const int p = params.p();
  if (k < 1 || k > p || s < 1 || s > p || k == s)
    throw Error("g2ppp_polyseries: bad anchor indices");
  const Complex cz = z.cx();
  if (std::abs(Complex(1.0, 0.0) - cz) >= 1.0)
    throw ConvergenceViolation("g2ppp_polyseries: needs |z - 1| < 1");

  const Complex ak = params.a[k - 1].cx();
  const Complex asv = params.a[s - 1].cx();
  std::vector<Complex> b;
  for (const auto& bj : params.b) b.push_back(bj.cx());
  std::vector<Complex> aks, akk;
  for (const auto& ai : params.a_without(k, s)) aks.push_back(ai.cx());
  for (const auto& ai : params.a_without(k)) akk.push_back(ai.cx());

  int first_free;
  switch (variant) {
    case PolyVariant::v520: first_free = 2; break;
    case PolyVariant::v522:
    case PolyVariant::v523: first_free = 1; break;
    default: first_free = 0; break;
  }
  for (int i = first_free; i < p; ++i) {
    if ((Complex(1.0, 0.0) - b[i] + asv).real() <= 0.0) {
      std::ostringstream os;
      os << "g2ppp_polyseries: series diverges, needs Re(1 - b_" << (i + 1)
         << " + a_s) > 0";
      throw ConvergenceViolation(os.str());
    }
  }

  const HC hz = hp::from_cx(cz);
  Complex pref;
  std::function<HC(int)> term;
  std::vector<HC> knum, kden;

  switch (variant) {
    case PolyVariant::v520: {
      std::vector<Complex> gnum, gden;
      for (const auto& bj : b) gnum.push_back(Complex(1.0, 0.0) - bj + ak);
      gnum.push_back(Complex(1.0, 0.0) - b[0] + asv);
      gnum.push_back(Complex(1.0, 0.0) - b[1] + asv);
      for (const auto& ai : aks) gden.push_back(Complex(1.0, 0.0) - ai + ak);
      Complex c2 = Complex(2.0, 0.0) + ak + asv - b[0] - b[1];
      gden.push_back(c2);
      pref = std::pow(cz, ak) * gamma_ratio_product(gnum, gden);
      for (int i = 2; i < p; ++i)
        knum.push_back(hp::from_cx(Complex(1.0, 0.0) - b[i] + ak));
      for (const auto& ai : aks)
        kden.push_back(hp::from_cx(Complex(1.0, 0.0) - ai + ak));
      HC u1 = hp::from_cx(Complex(1.0, 0.0) - b[0] + ak);
      HC u2 = hp::from_cx(Complex(1.0, 0.0) - b[1] + ak);
      HC hc2 = hp::from_cx(c2);
      term = [=](int n) -> HC {
        HC den = hp::fact(n) * hp::rf(hc2, n);
        if (den == HC(0)) throw PoleError("g2ppp_polyseries: denominator vanishes");
        // the 1/n! is required for agreement with the direct expansion
        return hp::rf(u1, n) * hp::rf(u2, n) / den *
               hp::f_term_z(n, knum, kden, hz);
      };
      break;
    }
    case PolyVariant::v522: {
      std::vector<Complex> gnum, gden;
      gnum.push_back(Complex(1.0, 0.0) - ak + asv);
      for (const auto& bj : b) gnum.push_back(Complex(1.0, 0.0) - bj + ak);
      for (const auto& ai : aks) gden.push_back(Complex(1.0, 0.0) - ai + ak);
      pref = std::pow(cz, ak) * gamma_ratio_product(gnum, gden);
      for (int i = 1; i < p; ++i)
        knum.push_back(hp::from_cx(Complex(1.0, 0.0) - b[i] + ak));
      kden.push_back(HC(1));
      for (const auto& ai : aks)
        kden.push_back(hp::from_cx(Complex(1.0, 0.0) - ai + ak));
      HC u1 = hp::from_cx(Complex(1.0, 0.0) - b[0] + ak);
      HC v1 = hp::from_cx(Complex(1.0, 0.0) - b[0] + asv);
      term = [=](int n) -> HC {
        HC den = hp::rf(v1, n + 1);
        if (den == HC(0)) throw PoleError("g2ppp_polyseries: denominator vanishes");
        return hp::rf(u1, n) / den * hp::f_term_z(n, knum, kden, hz);
      };
      break;
    }
    case PolyVariant::v523: {
      std::vector<Complex> gnum, gden;
      gnum.push_back(Complex(1.0, 0.0) - b[0] + asv);
      for (int i = 1; i < p; ++i) gnum.push_back(Complex(1.0, 0.0) - b[i] + ak);
      for (const auto& ai : aks) gden.push_back(Complex(1.0, 0.0) - ai + ak);
      pref = std::pow(cz, ak) * gamma_ratio_product(gnum, gden);
      for (int i = 1; i < p; ++i)
        knum.push_back(hp::from_cx(Complex(1.0, 0.0) - b[i] + ak));
      for (const auto& ai : akk)
        kden.push_back(hp::from_cx(Complex(1.0, 0.0) - ai + ak));
      HC u1 = hp::from_cx(Complex(1.0, 0.0) - asv + ak);
      HC b0k = hp::from_cx(Complex(1.0, 0.0) - b[0] + ak);
      term = [=](int n) -> HC {
        HC den = hp::fact(n) * (b0k + HC(n));
        if (den == HC(0)) throw PoleError("g2ppp_polyseries: denominator vanishes");
        return hp::rf(u1, n) / den * hp::f_term_z(n, knum, kden, hz);
      };
      break;
    }
    case PolyVariant::v531: {
      std::vector<Complex> gnum, gden;
      for (const auto& bj : b) gnum.push_back(Complex(1.0, 0.0) - bj + ak);
      for (const auto& ai : akk) gden.push_back(Complex(1.0, 0.0) - ai + ak);
      Complex d = ak - asv;
      Complex limit_factor = (std::abs(d) < 1e-12)
                                 ? Complex(1.0, 0.0)
                                 : kPi * d / sin_pi(d);
      pref = limit_factor * std::pow(cz, ak) * gamma_ratio_product(gnum, gden);
      for (const auto& bj : b)
        knum.push_back(hp::from_cx(Complex(1.0, 0.0) - bj + ak));
      kden.push_back(HC(1));
      for (const auto& ai : akk)
        kden.push_back(hp::from_cx(Complex(1.0, 0.0) - ai + ak));
      HC u1 = hp::from_cx(Complex(1.0, 0.0) - asv + ak);
      term = [=](int n) -> HC {
        return hp::rf(u1, n) / hp::fact(n + 1) *
               hp::f_term_z(n, knum, kden, hz);
      };
      break;
    }
  }

  auto res = hp::levin_sum(term, 140, std::max(1e-17, tol * 1e-3));
  check_levin(res, "g2ppp_polyseries");
  return Scalar(pref * hp::to_cx(res.value));
}

ParamSet shift_parameters(const ParamSet& params, const Scalar& alpha) {
  ParamSet out = params;
  for (auto& ai : out.a) ai += alpha;
  for (auto& bj : out.b) bj += alpha;
  return out;
}

Scalar mellin_correction_polynomial(const ParamSet& params, int k,
                                    const Scalar& s) {
  const Scalar psi = params.psi_p();
  if (!psi_is_nonpos_integer(psi))
    throw DegenerateParameters(
        "mellin_correction_polynomial: psi_p must be a nonpositive integer");
  const long long m = -psi.to_integer();
  CoeffTable g = g_young(params, k, static_cast<int>(m));
  Scalar q(0);
  for (long long j = 0; j <= m; ++j)
    q += g.values[m - j] *
         rising_factorial(s + params.a[k - 1] - Scalar(j), j);
  return q;
}

IdentityReport mellin_check(const ParamSet& params, const Scalar& s,
                            double quad_tol) {
  const int p = params.p();
  double min_re_a = params.a[0].cx().real();
  for (const auto& ai : params.a)
    min_re_a = std::min(min_re_a, ai.cx().real());
  if (s.cx().real() <= -min_re_a)
    throw ConvergenceViolation("mellin_check: needs Re(s) > -min Re(a)");

  const Scalar psi = params.psi_p();
  const bool integer_case = psi_is_nonpos_integer(psi);
  if (!integer_case && psi.cx().real() <= 0.0)
    throw DegenerateParameters(
        "mellin_check: needs Re(psi_p) > 0 or psi_p a nonpositive integer");

  std::vector<Complex> gnum, gden;
  for (const auto& ai : params.a) gnum.push_back(ai.cx() + s.cx());
  for (const auto& bj : params.b) gden.push_back(bj.cx() + s.cx());
  Complex expected = gamma_ratio_product(gnum, gden);
  if (integer_case)
    expected -= mellin_correction_polynomial(params, p, s).cx();

  const double series_tol = quad_tol * 1e-3;
  SeriesExpansion near1 = gp0pp_near1(params, p, pick_terms(0.5, series_tol));
  const Complex sc = s.cx();
  auto integrand = [&](double d0, double d1) -> Complex {
    Complex g = (d0 <= 0.5)
                    ? g_near0_value(params, Complex(d0, 0.0), series_tol)
                    : near1.eval_at(Scalar(Complex(d1, 0.0))).cx();
    return std::pow(Complex(d0, 0.0), sc - Complex(1.0, 0.0)) * g;
  };
  Complex integral = tanh_sinh_01(integrand, quad_tol);

  nlohmann::json jp = param_set_to_json(params);
  jp["s"] = scalar_to_json(s);
  double scale = std::max({1.0, std::abs(integral), std::abs(expected)});
  return make_report("mellin", jp, Scalar(integral), Scalar(expected), scale,
                     quad_tol);
}

}  // namespace norlund
