#include <doctest.h>

#include <cmath>

#include "norlund/gfunction.hpp"
#include "norlund/hyper.hpp"
#include "norlund/norlund.hpp"

using namespace norlund;

namespace {

double rel_diff(const Scalar& x, const Scalar& y) {
  double scale = std::max({1.0, abs_val(x), abs_val(y)});
  return abs_val(x - y) / scale;
}

ParamSet p2_params() {
  return ParamSet({Scalar(0.2), Scalar(-0.4)}, {Scalar(0.9), Scalar(1.3)});
}

ParamSet p3_params() {
  return ParamSet({Scalar(0.31), Scalar(-0.52), Scalar(0.27)},
                  {Scalar(0.15), Scalar(0.74), Scalar(-0.33)});
}

}  // namespace

TEST_CASE("first-kind G, order one closed forms") {
  // a=(0), b=(2): z^0 (1-z)^1 / Gamma(2) = 1 - z
  ParamSet ps({Scalar(0)}, {Scalar(2)});
  CHECK(std::abs(gp0pp_eval(ps, Scalar(0.5), 1e-12).cx() -
                 Complex(0.5, 0.0)) < 1e-12);
  // a=(0), b=(1): constant 1 on (0,1)
  ParamSet unit({Scalar(0)}, {Scalar(1)});
  CHECK(std::abs(gp0pp_eval(unit, Scalar(0.35), 1e-12).cx() -
                 Complex(1.0, 0.0)) < 1e-12);
}

TEST_CASE("first-kind G vanishes outside the unit disk") {
  auto ps = p2_params();
  CHECK(gp0pp_eval(ps, Scalar(2.0), 1e-12).cx() == Complex(0.0, 0.0));
  CHECK(gp0pp_eval(ps, Scalar(1.5), 1e-12).cx() == Complex(0.0, 0.0));
}

TEST_CASE("first-kind G, p=2 closed form") {
  // G^{2,0}_{2,2} = z^{a_2}(1-z)^{psi-1}/Gamma(psi) 2F1(b1-a1, b2-a1; psi; 1-z)
  auto ps = p2_params();
  const Complex psi = ps.psi_p().cx();
  for (double z : {0.3, 0.7}) {
    Complex omz(1.0 - z, 0.0);
    Complex f = eval_pfq(HyperSpec::make({ps.b[0] - ps.a[0], ps.b[1] - ps.a[0]},
                                         {ps.psi_p()}),
                         Scalar(1.0 - z), 1e-15)
                    .cx();
    Complex closed = std::pow(Complex(z, 0.0), ps.a[1].cx()) *
                     std::pow(omz, psi - Complex(1.0, 0.0)) / gamma_cx(psi) * f;
    CHECK(std::abs(gp0pp_eval(ps, Scalar(z), 1e-12).cx() - closed) < 1e-10);
  }
}

TEST_CASE("near-zero and near-one routes agree in the overlap") {
  for (const auto& ps : {p2_params(), p3_params()}) {
    for (double z : {0.45, 0.5, 0.6}) {
      Scalar v0 = gp0pp_near0(ps, Scalar(z), 1e-13);
      auto exp1 = gp0pp_near1(ps.promoted(), ps.p(), 120);
      Scalar v1 = exp1.eval_at(Scalar(1.0 - z));
      CHECK(rel_diff(v0, v1) < 1e-9);
    }
  }
}

TEST_CASE("near-one expansion is anchor-independent") {
  auto ps = p2_params();
  auto e1 = gp0pp_near1(ps.promoted(), 1, 80);
  auto e2 = gp0pp_near1(ps.promoted(), 2, 80);
  Scalar omz(0.2);
  CHECK(rel_diff(e1.eval_at(omz), e2.eval_at(omz)) < 1e-10);
}

TEST_CASE("second-kind G: expansion and polynomial-kernel series agree") {
  // all b entries below the a entries: every series precondition holds
  ParamSet ps({Scalar(0.31), Scalar(-0.22), Scalar(0.27)},
              {Scalar(-0.5), Scalar(-0.3), Scalar(-0.8)});
  const int k = 1, s = 2;
  auto exp1 = g2ppp_near1(ps, k, s, 48, 1e-12);
  for (double z : {0.85, 0.9}) {
    Scalar ref = exp1.eval_at(Scalar(1.0 - z));
    for (auto variant : {PolyVariant::v520, PolyVariant::v522,
                         PolyVariant::v523, PolyVariant::v531}) {
      Scalar v = g2ppp_polyseries(ps, k, s, Scalar(z), variant, 1e-12);
      CHECK(rel_diff(ref, v) < 1e-8);
    }
  }
}

TEST_CASE("argument-power shift identity") {
  auto ps = p2_params();
  Scalar alpha = Scalar(1.0 / 3.0);
  auto shifted = shift_parameters(ps, alpha);
  CHECK(std::abs(shifted.psi_p().cx() - ps.psi_p().cx()) < 1e-15);
  for (double z : {0.45, 0.7}) {
    Complex lhs = std::pow(Complex(z, 0.0), alpha.cx()) *
                  gp0pp_eval(ps, Scalar(z), 1e-12).cx();
    Complex rhs = gp0pp_eval(shifted, Scalar(z), 1e-12).cx();
    CHECK(std::abs(lhs - rhs) < 1e-12 * std::max(1.0, std::abs(lhs)));
  }
}

TEST_CASE("Mellin moments against the Gamma ratio") {
  // order one: int_0^1 (1-z) dz = 1/2 = Gamma(1)/Gamma(3)
  ParamSet ps({Scalar(0)}, {Scalar(2)});
  auto r = mellin_check(ps, Scalar(1.0), 1e-10);
  CHECK(r.rel_residual < 1e-9);

  auto r2 = mellin_check(p2_params(), Scalar(0.8), 1e-10);
  CHECK(r2.rel_residual < 1e-7);
}

TEST_CASE("Mellin moments with integer exponent sum and correction") {
  // psi_p = -1 exactly: moment equals Gamma ratio minus the degree-1 polynomial
  ParamSet ps({Scalar(0.2), Scalar(-0.4)}, {Scalar(0.5), Scalar(-1.7)});
  CHECK(std::abs(ps.psi_p().cx() - Complex(-1.0, 0.0)) < 1e-12);
  auto r = mellin_check(ps, Scalar(1.1), 1e-10);
  CHECK(r.rel_residual < 1e-7);

  CHECK(abs_val(mellin_correction_polynomial(ps, 1, Scalar(0.9)) -
                mellin_correction_polynomial(ps, 2, Scalar(0.9))) < 1e-12);
}

TEST_CASE("correction polynomial basics") {
  // psi_p = 0 (m=0): q(s) = g(0) = 1
  ParamSet ps({Scalar(0.3), Scalar(-0.2)}, {Scalar(0.4), Scalar(-0.3)});
  CHECK(std::abs(ps.psi_p().cx()) < 1e-12);
  CHECK(std::abs(mellin_correction_polynomial(ps, 1, Scalar(0.7)).cx() -
                 Complex(1.0, 0.0)) < 1e-14);
}
