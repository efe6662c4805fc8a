#include <doctest.h>

#include <cmath>
#include <complex>

#include "norlund/scalar.hpp"
#include "norlund/serialize.hpp"

using namespace norlund;

TEST_CASE("rising factorial") {
  CHECK(rising_factorial(Scalar(1), 3) == Scalar(6));
  CHECK(rising_factorial(Scalar::ratio(7, 3), 0) == Scalar(1));
  CHECK(rising_factorial(Scalar::ratio(1, 2), 2) == Scalar::ratio(3, 4));
}

TEST_CASE("falling factorial") {
  CHECK(falling_factorial(Scalar(3), 2) == Scalar(6));
  CHECK(falling_factorial(Scalar::ratio(-5, 7), 0) == Scalar(1));
  CHECK(falling_factorial(Scalar::ratio(1, 2), 2) == Scalar::ratio(-1, 4));
}

TEST_CASE("log gamma at small integers and half") {
  CHECK(std::abs(log_gamma({1.0, 0.0})) < 1e-14);
  CHECK(std::abs(log_gamma({2.0, 0.0})) < 1e-14);
  const double log_sqrt_pi = 0.5 * std::log(M_PI);
  CHECK(std::abs(log_gamma({0.5, 0.0}) - Complex(log_sqrt_pi, 0.0)) < 1e-13);
}

TEST_CASE("sin of pi x") {
  CHECK(sin_pi(Scalar(1)) == Scalar(0));
  CHECK(sin_pi(Scalar::ratio(1, 2)) == Scalar(1));
  CHECK(sin_pi(Scalar::ratio(1, 6)) == Scalar::ratio(1, 2));
  // integer real part -> exactly zero, even in float mode
  CHECK(sin_pi(Complex(4.0, 0.0)) == Complex(0.0, 0.0));
}

TEST_CASE("gamma ratio products") {
  CHECK(std::abs(gamma_ratio_product({{3.0, 0.0}}, {{2.0, 0.0}}) -
                 Complex(2.0, 0.0)) < 1e-13);
  CHECK(std::abs(gamma_ratio_product({}, {}) - Complex(1.0, 0.0)) < 1e-15);
  CHECK(std::abs(gamma_ratio_product({{0.5, 0.0}, {0.5, 0.0}}, {{1.0, 0.0}}) -
                 Complex(M_PI, 0.0)) < 1e-13);
}

TEST_CASE("gamma ratio refuses poles") {
  CHECK_THROWS_AS(gamma_ratio_product({{0.0, 0.0}}, {{1.0, 0.0}}), PoleError);
  CHECK_THROWS_AS(gamma_ratio_product({{-3.0, 0.0}}, {{1.0, 0.0}}), PoleError);
}

TEST_CASE("exact arithmetic never rounds, promotion is one-way") {
  Scalar x = Scalar::ratio(1, 3) + Scalar::ratio(1, 6);
  CHECK(x == Scalar::ratio(1, 2));
  CHECK(x.exact());
  Scalar y = x * Scalar(0.5);
  CHECK_FALSE(y.exact());
}

TEST_CASE("scalar string round trips") {
  CHECK(scalar_to_string(Scalar::ratio(-22, 7)) == "-22/7");
  CHECK(scalar_from_string("-22/7", true) == Scalar::ratio(-22, 7));
  CHECK(scalar_from_string("5", true) == Scalar(5));
  // decimals are accepted in exact mode as exact decimal fractions
  CHECK(scalar_from_string("0.25", true) == Scalar::ratio(1, 4));

  Scalar z(Complex(1.25, -0.5));
  Scalar back = scalar_from_string(scalar_to_string(z), false);
  CHECK(back.cx() == z.cx());
  Scalar re_only(Complex(-3.75, 0.0));
  CHECK(scalar_from_string(scalar_to_string(re_only), false).cx() ==
        re_only.cx());
}

TEST_CASE("report residuals and verdicts") {
  auto r = make_report("x", {}, Scalar::ratio(1, 3), Scalar::ratio(1, 3), 1.0,
                       1e-12);
  CHECK(r.verdict == "pass");
  CHECK(r.abs_residual == 0.0);
  CHECK(r.rel_residual == 0.0);

  auto bad = make_report("x", {}, Scalar(1.0), Scalar(1.001), 1.0, 1e-6);
  CHECK(bad.verdict == "fail");

  auto sk = make_skipped("x", {}, "precondition", 1e-6);
  CHECK(sk.verdict == "skipped");
  CHECK(sk.skipped_reason.has_value());
}
