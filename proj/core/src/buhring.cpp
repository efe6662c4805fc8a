#include "norlund/buhring.hpp"

#include <cmath>
#include <functional>
#include <sstream>
#include <vector>

#include "highprec.hpp"
#include "norlund/errors.hpp"

namespace norlund {

namespace {

using hp::HC;

constexpr double kPinchTol = 1e-280;  // treat smaller magnitudes as a pole

double inner_tol(double tol) { return std::max(1e-17, tol * 1e-3); }

std::vector<Complex> to_cx_vec(const std::vector<Scalar>& v) {
  std::vector<Complex> r;
  r.reserve(v.size());
  for (const auto& x : v) r.push_back(x.cx());
  return r;
}

Complex psi_cx(const std::vector<Complex>& a, const std::vector<Complex>& b,
               int m) {
  Complex s(0.0, 0.0);
  for (int i = 0; i < m; ++i) s += b[i] - a[i];
  return s;
}

// Inner chain sum of h_multisum: weakly increasing j_1 <= ... <= j_{p-3}
// in [0, J], with the boundary values j_0 = 0, j_{p-2} = J fixed.
HC chain_sum(const std::vector<HC>& psis, const std::vector<HC>& bma, int p,
             int J) {
  const int top = p - 2;  // index of the fixed right endpoint
  HC total(0);
  std::function<void(int, int, HC)> rec = [&](int pos, int lo, HC prod) {
    if (pos == top) {
      int d = J - lo;
      total += prod * hp::rf(psis[pos] + HC(lo), d) / hp::fact(d) *
               hp::rf(bma[pos], d);
      return;
    }
    for (int v = lo; v <= J; ++v) {
      int d = v - lo;
      HC t = prod * hp::rf(psis[pos] + HC(lo), d) / hp::fact(d) *
             hp::rf(bma[pos], d);
      rec(pos + 1, v, t);
    }
  };
  rec(1, 0, HC(1));
  return total;
}

void check_sum(const hp::SumResult& res, const char* what) {
  if (res.converged) return;
  double scale = std::max(1.0, static_cast<double>(abs(res.value)));
  if (res.est_err > 1e-6 * scale) {
    std::ostringstream os;
    os << what << ": accelerated series did not settle after " << res.terms
       << " terms (estimated error " << res.est_err << ")";
    throw NoConvergence(os.str());
  }
}

void merge_trunc(std::optional<Truncation>& agg, const hp::SumResult& res) {
  if (!agg || res.terms > agg->terms_used)
    agg = Truncation{res.terms, res.last_term};
}

// Terminating kernel of the direct D series; for a single parameter pair the
// Chu-Vandermonde evaluation replaces the j+1-term sum.
HC d_kernel(int j, const std::vector<HC>& num, const std::vector<HC>& den) {
  if (num.size() == 1 && den.size() == 1) {
    HC dj = hp::rf(den[0], j);
    if (dj == HC(0))
      throw PoleError("D series kernel: lower parameter hits a nonpositive integer");
    return hp::rf(den[0] - num[0], j) / dj;
  }
  return hp::f_term(j, num, den);
}

}  // namespace

CoeffTable f_from_g(const CoeffTable& gtable, const ParamSet& params) {
  const Complex psi = params.psi_p().cx();
  if (near_integer(psi) && psi.real() > 0.5)
    throw PoleError("f_from_g: Gamma(1 - psi_p) pole, psi_p is a positive integer");
  const Complex gam = gamma_cx(Complex(1.0, 0.0) - psi);
  CoeffTable f;
  f.kind = 'f';
  f.p = gtable.p;
  f.k = gtable.k;
  f.method = "from_g:" + gtable.method;
  f.mode = "float";
  f.values.reserve(gtable.values.size());
  for (int n = 0; n <= gtable.N(); ++n) {
    Complex poch = rising_factorial(psi, n);
    if (std::abs(poch) < kPinchTol) {
      std::ostringstream os;
      os << "f_from_g: (psi_p)_" << n << " vanishes (psi_p near "
         << psi.real() << ")";
      throw PoleError(os.str());
    }
    f.values.emplace_back(gam * gtable.values[n].cx() / poch);
  }
  return f;
}

CoeffTable h_multisum(const ParamSet& params, int s, int N, double tol) {
  const int p = params.p();
  if (s < 1 || s > p) throw Error("h_multisum: s out of range");
  ParamSet sw = params.with_swapped_a(s, p);
  const auto aa = to_cx_vec(sw.a);
  const auto bb = to_cx_vec(sw.b);
  const Complex ap = aa[p - 1];

  for (int i = 1; i <= p - 2; ++i) {
    if ((Complex(1.0, 0.0) - bb[i - 1] + ap).real() <= 0.0) {
      std::ostringstream os;
      os << "h_multisum: outer series diverges, Re(1 - b_" << i
         << " + a_s) = " << (Complex(1.0, 0.0) - bb[i - 1] + ap).real()
         << " <= 0";
      throw ConvergenceViolation(os.str());
    }
  }

  const Complex ps = psi_cx(aa, bb, p);
  const Complex psm1 = psi_cx(aa, bb, p - 1);

  std::vector<HC> psis(p), bma(p);
  for (int m = 1; m <= p - 1; ++m) {
    psis[m] = hp::from_cx(psi_cx(aa, bb, m));
    bma[m] = hp::from_cx(bb[m - 1] - aa[m]);  // b_m - a_{m+1} after the swap
  }

  CoeffTable h;
  h.kind = 'h';
  h.p = p;
  h.s = s;
  h.method = "multisum";
  h.mode = "float";

  for (int n = 0; n <= N; ++n) {
    Complex poch = rising_factorial(Complex(1.0, 0.0) - ps, n + 1);
    if (std::abs(poch) < kPinchTol)
      throw PoleError("h_multisum: (1 - psi_p)_{n+1} vanishes");
    Complex pref =
        -gamma_ratio_product(
            {ps, Complex(1.0, 0.0) - bb[p - 1] + ap + Complex(n),
             Complex(1.0, 0.0) - bb[p - 2] + ap + Complex(n)},
            {psm1, ps - bb[p - 2] + ap}) /
        (poch * factorial_d(n));
    if (p == 2) {
      h.values.emplace_back(pref);
      continue;
    }
    HC hps = hp::from_cx(ps), hpsm1 = hp::from_cx(psm1);
    HC hdn2 = hp::from_cx(ps - bb[p - 2] + ap);
    auto term = [&](int J) -> HC {
      HC den = hp::rf(hpsm1, J) * hp::rf(hdn2, J);
      if (den == HC(0))
        throw PoleError("h_multisum: outer series denominator vanishes");
      return hp::rf(hps - HC(n + 1), J) / den * chain_sum(psis, bma, p, J);
    };
    auto res = hp::levin_sum(term, 160, inner_tol(tol));
    check_sum(res, "h_multisum");
    merge_trunc(h.truncation, res);
    h.values.emplace_back(pref * hp::to_cx(res.value));
  }
  return h;
}

Scalar h_closed_p3(const ParamSet& params, int s, int n, double tol) {
  if (params.p() != 3) throw UnsupportedOrder("h_closed_p3 requires p = 3");
  if (s < 1 || s > 3) throw Error("h_closed_p3: s out of range");
  const auto a = to_cx_vec(params.a);
  const auto b = to_cx_vec(params.b);
  const Complex ps = psi_cx(a, b, 3);
  const Complex asv = a[s - 1];
  const auto ai = to_cx_vec(params.a_without(s));

  Complex top = ps - Complex(1.0 + n);
  if (!near_nonpos_integer(top) &&
      (Complex(1.0, 0.0) - b[0] + asv + Complex(n)).real() <= 0.0)
    throw ConvergenceViolation(
        "h_closed_p3: 3F2(1) diverges, needs Re(1 - b_1 + a_s + n) > 0");

  Complex poch = rising_factorial(Complex(1.0, 0.0) - ps, n + 1);
  if (std::abs(poch) < kPinchTol)
    throw PoleError("h_closed_p3: (1 - psi_p)_{n+1} vanishes");
  Complex pref =
      -gamma_ratio_product({ps, Complex(1.0, 0.0) - b[1] + asv + Complex(n),
                            Complex(1.0, 0.0) - b[2] + asv + Complex(n)},
                           {ps - b[1] + asv, ps - b[2] + asv}) /
      (poch * factorial_d(n));

  auto res = hp::pfq_at_1(
      {hp::from_cx(top), hp::from_cx(b[0] - ai[0]), hp::from_cx(b[0] - ai[1])},
      {hp::from_cx(ps - b[1] + asv), hp::from_cx(ps - b[2] + asv)}, 150);
  check_sum(res, "h_closed_p3");
  (void)tol;
  return Scalar(pref * hp::to_cx(res.value));
}

Scalar h_closed_p4(const ParamSet& params, int s, int n, double tol) {
  if (params.p() != 4) throw UnsupportedOrder("h_closed_p4 requires p = 4");
  if (s < 1 || s > 4) throw Error("h_closed_p4: s out of range");
  const auto a = to_cx_vec(params.a);
  const auto b = to_cx_vec(params.b);
  const Complex ps = psi_cx(a, b, 4);
  const Complex asv = a[s - 1];
  const auto ai = to_cx_vec(params.a_without(s));

  Complex top = ps - Complex(1.0 + n);
  if (!near_nonpos_integer(top)) {
    for (int i = 0; i < 2; ++i) {
      if ((Complex(1.0, 0.0) - b[i] + asv + Complex(n)).real() <= 0.0) {
        std::ostringstream os;
        os << "h_closed_p4: outer series diverges, needs Re(1 - b_" << (i + 1)
           << " + a_s + n) > 0";
        throw ConvergenceViolation(os.str());
      }
    }
  }

  Complex poch = rising_factorial(Complex(1.0, 0.0) - ps, n + 1);
  if (std::abs(poch) < kPinchTol)
    throw PoleError("h_closed_p4: (1 - psi_p)_{n+1} vanishes");
  Complex pref =
      -gamma_ratio_product({ps, Complex(1.0, 0.0) - b[2] + asv + Complex(n),
                            Complex(1.0, 0.0) - b[3] + asv + Complex(n)},
                           {ps - b[2] + asv, ps - b[3] + asv}) /
      (poch * factorial_d(n));

  HC x = hp::from_cx(b[0] + b[1] - ai[0] - ai[1]);
  HC y = hp::from_cx(b[0] + b[1] - ai[0] - ai[2]);
  HC u = hp::from_cx(ps - b[2] + asv);
  HC v = hp::from_cx(ps - b[3] + asv);
  HC htop = hp::from_cx(top);
  std::vector<HC> knum = {hp::from_cx(b[0] - ai[0]), hp::from_cx(b[1] - ai[0])};
  std::vector<HC> kden = {x, y};
  auto term = [&](int k) -> HC {
    HC den = hp::rf(u, k) * hp::rf(v, k);
    if (den == HC(0))
      throw PoleError("h_closed_p4: outer series denominator vanishes");
    // the 1/k! is required for cross-method agreement
    return hp::rf(htop, k) * hp::rf(x, k) * hp::rf(y, k) / den / hp::fact(k) *
           hp::f_term(k, knum, kden);
  };
  auto res = hp::levin_sum(term, 160, inner_tol(tol));
  check_sum(res, "h_closed_p4");
  return Scalar(pref * hp::to_cx(res.value));
}

CoeffTable D_coeffs(const ParamSet& params, int k, int s, int N,
                    DVariant variant, double tol) {
  const int p = params.p();
  if (k < 1 || k > p || s < 1 || s > p) throw Error("D_coeffs: index out of range");
  if (k == s) throw Error("D_coeffs: k and s must differ");
  const auto a = to_cx_vec(params.a);
  const auto b = to_cx_vec(params.b);
  const Complex ak = a[k - 1];
  const Complex asv = a[s - 1];
  const auto aks = to_cx_vec(params.a_without(k, s));

  const int first_free = (variant == DVariant::v535) ? 2 : 1;
  for (int i = first_free; i < p; ++i) {
    if ((Complex(1.0, 0.0) - b[i] + asv).real() <= 0.0) {
      std::ostringstream os;
      os << "D_coeffs: series diverges, needs Re(1 - b_" << (i + 1)
         << " + a_s) > 0; move that b entry to the front of b and retry";
      throw ConvergenceViolation(os.str());
    }
  }

  CoeffTable D;
  D.kind = 'D';
  D.p = p;
  D.k = k;
  D.s = s;
  D.method = (variant == DVariant::v535) ? "v535" : "v536";
  D.mode = "float";

  std::vector<Complex> gden;
  for (const auto& ai : aks) gden.push_back(Complex(1.0, 0.0) - ai + ak);

  if (variant == DVariant::v535) {
    std::vector<HC> knum, kden;
    for (int i = 2; i < p; ++i) knum.push_back(hp::from_cx(Complex(1.0, 0.0) - b[i] + ak));
    for (const auto& ai : aks) kden.push_back(hp::from_cx(Complex(1.0, 0.0) - ai + ak));
    HC u1 = hp::from_cx(Complex(1.0, 0.0) - b[0] + ak);
    HC u2 = hp::from_cx(Complex(1.0, 0.0) - b[1] + ak);
    for (int n = 0; n <= N; ++n) {
      std::vector<Complex> gnum;
      for (const auto& bj : b) gnum.push_back(Complex(1.0, 0.0) - bj + ak);
      gnum.push_back(Complex(1.0, 0.0) - b[0] + asv + Complex(n));
      gnum.push_back(Complex(1.0, 0.0) - b[1] + asv + Complex(n));
      Complex c2 = Complex(2.0 + n) + ak + asv - b[0] - b[1];
      auto gd = gden;
      gd.push_back(c2);
      Complex pref = gamma_ratio_product(gnum, gd) / factorial_d(n);
      HC hc2 = hp::from_cx(c2);
      auto term = [&](int j) -> HC {
        HC den = hp::fact(j) * hp::rf(hc2, j);
        if (den == HC(0)) throw PoleError("D_coeffs: series denominator vanishes");
        return hp::rf(u1, j) * hp::rf(u2, j) / den * d_kernel(j, knum, kden);
      };
      auto res = hp::levin_sum(term, 160, inner_tol(tol));
      check_sum(res, "D_coeffs v535");
      merge_trunc(D.truncation, res);
      D.values.emplace_back(pref * hp::to_cx(res.value));
    }
  } else {
    std::vector<HC> knum, kden;
    for (int i = 1; i < p; ++i) knum.push_back(hp::from_cx(Complex(1.0, 0.0) - b[i] + ak));
    kden.push_back(HC(1));
    for (const auto& ai : aks) kden.push_back(hp::from_cx(Complex(1.0, 0.0) - ai + ak));
    HC u1 = hp::from_cx(Complex(1.0, 0.0) - b[0] + ak);
    for (int n = 0; n <= N; ++n) {
      std::vector<Complex> gnum;
      for (const auto& bj : b) gnum.push_back(Complex(1.0, 0.0) - bj + ak);
      gnum.push_back(Complex(1.0, 0.0) - ak + asv + Complex(n));
      Complex pref = gamma_ratio_product(gnum, gden) / factorial_d(n);
      HC v1 = hp::from_cx(Complex(1.0, 0.0) - b[0] + asv + Complex(n));
      auto term = [&](int j) -> HC {
        HC den = hp::rf(v1, j + 1);
        if (den == HC(0)) throw PoleError("D_coeffs: series denominator vanishes");
        return hp::rf(u1, j) / den * hp::f_term(j, knum, kden);
      };
      auto res = hp::levin_sum(term, 160, inner_tol(tol));
      check_sum(res, "D_coeffs v536");
      merge_trunc(D.truncation, res);
      D.values.emplace_back(pref * hp::to_cx(res.value));
    }
  }
  return D;
}

CoeffTable h_from_D(const ParamSet& params, int s, int N, double tol,
                    DVariant variant) {
  const int p = params.p();
  if (s < 1 || s > p) throw Error("h_from_D: s out of range");
  const auto a = to_cx_vec(params.a);
  const auto b = to_cx_vec(params.b);
  const Complex ps = params.psi_p().cx();
  if (near_integer(ps))
    throw DegenerateParameters("h_from_D: psi_p is (nearly) an integer");
  for (int k = 1; k <= p; ++k) {
    if (k == s) continue;
    for (int i = 1; i <= p; ++i) {
      if (i == k || i == s) continue;
      if (near_integer(a[i - 1] - a[k - 1]))
        throw DegenerateParameters(
            "h_from_D: a-parameter difference is (nearly) an integer");
    }
  }

  CoeffTable h;
  h.kind = 'h';
  h.p = p;
  h.s = s;
  h.method = "from_D:" + std::string(variant == DVariant::v535 ? "v535" : "v536");
  h.mode = "float";
  h.values.assign(N + 1, Scalar(Complex(0.0, 0.0)));

  std::vector<Complex> acc(N + 1, Complex(0.0, 0.0));
  for (int k = 1; k <= p; ++k) {
    if (k == s) continue;
    Complex w(1.0, 0.0);
    for (const auto& bj : b) w *= sin_pi(bj - a[k - 1]);
    for (int i = 1; i <= p; ++i) {
      if (i == k || i == s) continue;
      w /= sin_pi(a[i - 1] - a[k - 1]);
    }
    CoeffTable D = D_coeffs(params, k, s, N, variant, tol);
    if (D.truncation) {
      if (!h.truncation || D.truncation->terms_used > h.truncation->terms_used)
        h.truncation = D.truncation;
    }
    for (int n = 0; n <= N; ++n) acc[n] += w * D.values[n].cx();
  }
  const double pi = 3.14159265358979323846;
  Complex denom = -pi * sin_pi(ps);
  for (int n = 0; n <= N; ++n) h.values[n] = Scalar(acc[n] / denom);
  return h;
}

}  // namespace norlund
