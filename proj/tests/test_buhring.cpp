#include <doctest.h>

#include <cmath>

#include "norlund/buhring.hpp"
#include "norlund/norlund.hpp"

using namespace norlund;

namespace {

// every b entry sits well below every a entry, so each outer series involved
// in the h and D computations decays with a comfortable margin for any anchor
ParamSet p3_params() {
  return ParamSet({Scalar(0.31), Scalar(-0.52), Scalar(0.27)},
                  {Scalar(-0.55), Scalar(-0.84), Scalar(-0.93)});
}

ParamSet p4_params() {
  return ParamSet({Scalar(0.4), Scalar(-0.3), Scalar(0.6), Scalar(-0.1)},
                  {Scalar(-0.5), Scalar(-1.2), Scalar(-0.8), Scalar(-1.0)});
}

double rel_diff(const Scalar& x, const Scalar& y) {
  double scale = std::max({1.0, abs_val(x), abs_val(y)});
  return abs_val(x - y) / scale;
}

}  // namespace

TEST_CASE("f table from g table") {
  auto ps = p3_params();
  auto g = g_young(ps.promoted(), 3, 4);
  auto f = f_from_g(g, ps);
  const Complex psi = ps.psi_p().cx();
  // n=0: f(0) = Gamma(1 - psi_p)
  CHECK(std::abs(f.values[0].cx() - gamma_cx(Complex(1.0, 0.0) - psi)) <
        1e-12);
  // inverting the relation reproduces g
  for (int n = 0; n <= 4; ++n) {
    Complex back = f.values[n].cx() * rising_factorial(psi, n) /
                   gamma_cx(Complex(1.0, 0.0) - psi);
    CHECK(std::abs(back - g.values[n].cx()) < 1e-10);
  }
}

TEST_CASE("h for p=3: multiple sum, closed form and D assembly agree") {
  auto ps = p3_params();
  for (int s = 1; s <= 3; ++s) {
    auto hm = h_multisum(ps, s, 4, 1e-12);
    auto hd5 = h_from_D(ps, s, 4, 1e-12, DVariant::v535);
    auto hd6 = h_from_D(ps, s, 4, 1e-12, DVariant::v536);
    for (int n = 0; n <= 4; ++n) {
      Scalar hc = h_closed_p3(ps, s, n, 1e-12);
      CHECK(rel_diff(hm.values[n], hc) < 1e-9);
      CHECK(rel_diff(hm.values[n], hd5.values[n]) < 1e-9);
      CHECK(rel_diff(hm.values[n], hd6.values[n]) < 1e-9);
    }
  }
}

TEST_CASE("h for p=4: multiple sum, closed form and D assembly agree") {
  auto ps = p4_params();
  for (int s : {1, 3}) {
    auto hm = h_multisum(ps, s, 3, 1e-12);
    auto hd = h_from_D(ps, s, 3, 1e-12, DVariant::v535);
    for (int n = 0; n <= 3; ++n) {
      Scalar hc = h_closed_p4(ps, s, n, 1e-12);
      CHECK(rel_diff(hm.values[n], hc) < 1e-9);
      CHECK(rel_diff(hm.values[n], hd.values[n]) < 1e-9);
    }
  }
}

TEST_CASE("the two D series agree where both converge") {
  for (const auto& ps : {p3_params(), p4_params()}) {
    const int p = ps.p();
    for (int k = 1; k <= p; ++k) {
      for (int s = 1; s <= p; ++s) {
        if (k == s) continue;
        CoeffTable d5, d6;
        try {
          d5 = D_coeffs(ps, k, s, 3, DVariant::v535, 1e-12);
          d6 = D_coeffs(ps, k, s, 3, DVariant::v536, 1e-12);
        } catch (const ConvergenceViolation&) {
          continue;
        }
        for (int n = 0; n <= 3; ++n)
          CHECK(rel_diff(d5.values[n], d6.values[n]) < 1e-10);
      }
    }
  }
}

TEST_CASE("closed p=3 h is invariant under b permutations") {
  auto ps = p3_params();
  auto perm = ps;
  std::swap(perm.b[0], perm.b[1]);
  for (int n = 0; n <= 2; ++n)
    CHECK(rel_diff(h_closed_p3(ps, 1, n, 1e-12),
                   h_closed_p3(perm, 1, n, 1e-12)) < 1e-11);
}

TEST_CASE("p=2 h reduces to a pure Gamma prefactor sequence") {
  ParamSet ps({Scalar(0.2), Scalar(-0.4)}, {Scalar(-0.7), Scalar(-0.6)});
  auto hm = h_multisum(ps, 1, 2, 1e-12);
  // For p=2 the multiple sum collapses to its prefactor; finite values only.
  for (int n = 0; n <= 2; ++n) CHECK(std::isfinite(abs_val(hm.values[n])));
}

TEST_CASE("divergent D preconditions are reported") {
  // b entry far above a_s makes the trailing condition fail
  ParamSet ps({Scalar(0.1), Scalar(-0.2), Scalar(0.3)},
              {Scalar(0.4), Scalar(0.2), Scalar(1.9)});
  CHECK_THROWS_AS(D_coeffs(ps, 2, 1, 2, DVariant::v535, 1e-10),
                  ConvergenceViolation);
}
