#include <doctest.h>

#include <cmath>
#include <random>

#include "norlund/hyper.hpp"

using namespace norlund;

namespace {
// one fixed prime denominator per slot: no nontrivial combination of the
// sampled values can be an integer, so no Pochhammer denominator vanishes
Scalar rnd_over(std::mt19937_64& eng, int den) {
  for (;;) {
    long long num = static_cast<long long>(eng() % 41) - 20;
    if (num % den != 0) return Scalar(Rational(num, den));
  }
}
}  // namespace

TEST_CASE("series oracles") {
  // 1F0(1;;1/2) = 2
  auto s =
      eval_pfq(HyperSpec::make({Scalar(1)}, {}), Scalar::ratio(1, 2), 1e-14);
  CHECK(std::abs(s.cx() - Complex(2.0, 0.0)) < 1e-12);

  // 2F1(a,b;b;z) = (1-z)^{-a}
  auto t = eval_pfq(HyperSpec::make({Scalar(0.75), Scalar(1.25)},
                                    {Scalar(1.25)}),
                    Scalar(0.4), 1e-15);
  CHECK(std::abs(t.cx() - std::pow(Complex(0.6, 0.0), -0.75)) < 1e-12);

  // Gauss summation at unit argument: 2F1(1/2,1/2;3/2;1) = pi/2
  auto u = eval_pfq(HyperSpec::make({Scalar(0.5), Scalar(0.5)},
                                    {Scalar(1.5)}),
                    Scalar(1), 1e-13);
  CHECK(std::abs(u.cx() - Complex(M_PI / 2.0, 0.0)) < 1e-11);
}

TEST_CASE("terminating series stay exact") {
  // 2F1(-3, 1/2; 1/3; 1) summed over 4 rational terms
  auto v = eval_pfq(HyperSpec::make({Scalar(-3), Scalar::ratio(1, 2)},
                                    {Scalar::ratio(1, 3)}),
                    Scalar(1), 0.0);
  CHECK(v.exact());
}

TEST_CASE("divergence outside the unit disk is refused") {
  CHECK_THROWS_AS(eval_pfq(HyperSpec::make({Scalar(0.5), Scalar(0.5)},
                                           {Scalar(1.5)}),
                           Scalar(1.5), 1e-10),
                  ConvergenceViolation);
  // z=1 without the convergence margin
  CHECK_THROWS_AS(eval_pfq(HyperSpec::make({Scalar(1.0), Scalar(1.0)},
                                           {Scalar(1.5)}),
                           Scalar(1), 1e-10),
                  ConvergenceViolation);
}

TEST_CASE("two-term connection between z and 1-z") {
  auto r = gauss_connection_residual(Scalar::ratio(1, 3), Scalar::ratio(1, 5),
                                     Scalar::ratio(7, 4), Scalar(0.3), 1e-10);
  CHECK(r.verdict == "pass");
  CHECK(r.rel_residual < 1e-10);
  // symmetric in the two upper parameters
  auto r2 = gauss_connection_residual(Scalar::ratio(1, 5), Scalar::ratio(1, 3),
                                      Scalar::ratio(7, 4), Scalar(0.3), 1e-10);
  CHECK(std::abs(r.rel_residual - r2.rel_residual) < 1e-12);
}

TEST_CASE("terminating transformation, three upper parameters") {
  std::mt19937_64 eng(31);
  for (long long n : {0, 1, 5}) {
    auto r = sheppard_residual_p3(n, rnd_over(eng, 13), rnd_over(eng, 17),
                                  rnd_over(eng, 19), rnd_over(eng, 23));
    CHECK(r.verdict == "pass");
    CHECK(r.abs_residual == 0.0);
  }
}

TEST_CASE("terminating double-sum transformation") {
  std::mt19937_64 eng(32);
  for (long long n : {0, 3, 6}) {
    auto r = buhring_p4_residual(n, rnd_over(eng, 13), rnd_over(eng, 17),
                                 rnd_over(eng, 19), rnd_over(eng, 23),
                                 rnd_over(eng, 29), rnd_over(eng, 31));
    CHECK(r.verdict == "pass");
    CHECK(r.abs_residual == 0.0);
  }
}

TEST_CASE("nested chain transformation") {
  std::mt19937_64 eng(33);
  for (int p = 3; p <= 5; ++p) {
    std::vector<Scalar> a, b;
    for (int i = 0; i < p; ++i) {
      a.push_back(rnd_over(eng, 7));
      b.push_back(rnd_over(eng, 11));
    }
    ParamSet ps(a, b);
    for (int n : {0, 2, 4}) {
      auto r = multiseries_transform_residual(ps, n);
      CHECK(r.verdict == "pass");
      CHECK(r.abs_residual == 0.0);
    }
  }
}
