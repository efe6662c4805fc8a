#include <doctest.h>

#include <random>

#include "norlund/identities.hpp"
#include "norlund/serialize.hpp"

using namespace norlund;

namespace {

ParamSet complex_params(std::mt19937_64& eng, int p) {
  auto uni = [&](double lo, double hi) {
    double u = static_cast<double>(eng() >> 11) * (1.0 / 9007199254740992.0);
    return lo + (hi - lo) * u;
  };
  std::vector<Scalar> a, b;
  for (int i = 0; i < p; ++i) {
    a.push_back(Scalar(Complex(uni(-2, 2), uni(-1, 1))));
    b.push_back(Scalar(Complex(uni(-2, 2), uni(-1, 1))));
  }
  return ParamSet(a, b);
}

}  // namespace

TEST_CASE("sine identity at order one") {
  ParamSet ps({Scalar(0.37)}, {Scalar(-0.83)});
  auto r = verify_ptolemy(ps, 1e-13);
  CHECK(r.verdict == "pass");
  CHECK(r.rel_residual < 1e-15);
}

TEST_CASE("sine identity with exponent sum one half") {
  ParamSet ps({Scalar(0.0), Scalar(0.3)}, {Scalar(0.1), Scalar(0.7)});
  auto r = verify_ptolemy(ps, 1e-13);
  CHECK(r.verdict == "pass");
  CHECK(std::abs(r.rhs.cx() - Complex(1.0, 0.0)) < 1e-15);
  CHECK(r.rel_residual < 1e-13);
}

TEST_CASE("sine identity at order eight with complex parameters") {
  std::mt19937_64 eng(5);
  auto ps = complex_params(eng, 8);
  auto r = verify_ptolemy(ps, 1e-10);
  CHECK(r.verdict == "pass");
  CHECK(r.rel_residual < 1e-10);
}

TEST_CASE("coefficient identity at m=0 bit-matches the sine identity") {
  std::mt19937_64 eng(6);
  for (int p = 2; p <= 4; ++p) {
    auto ps = complex_params(eng, p);
    auto r0 = verify_ptolemy(ps, 1e-9);
    for (int s = 1; s <= p; ++s) {
      auto r = verify_identity2(ps, 0, s, 1e-9);
      // the reports frame lhs/rhs differently (two sides vs sum-to-zero),
      // but the residuals come from the same arithmetic, bit for bit
      CHECK(r.abs_residual == r0.abs_residual);
      CHECK(r.rel_residual == r0.rel_residual);
    }
  }
}

TEST_CASE("coefficient identity for higher m, every anchor") {
  ParamSet ps({Scalar(0.31), Scalar(-0.52), Scalar(0.27)},
              {Scalar(0.15), Scalar(0.74), Scalar(-0.33)});
  for (int m = 1; m <= 2; ++m)
    for (int s = 1; s <= 3; ++s) {
      auto r = verify_identity2(ps, m, s, 1e-9);
      CHECK(r.verdict == "pass");
    }
}

TEST_CASE("h-weighted identity for p=3") {
  ParamSet ps({Scalar(0.31), Scalar(-0.52), Scalar(0.27)},
              {Scalar(-0.15), Scalar(-0.74), Scalar(-0.33)});
  for (int m = 0; m <= 2; ++m) {
    auto r = verify_identity1(ps, m, 1e-8);
    CHECK(r.verdict == "pass");
  }
}

TEST_CASE("cyclic unit-argument relations") {
  ParamSet ps({Scalar(0.2), Scalar(-0.35), Scalar(0.4)},
              {Scalar(0.55), Scalar(0.8), Scalar(1.05)});
  for (auto which : {CircularKind::first, CircularKind::second}) {
    auto r = verify_3f2_circular(ps, 1, which, 1e-9);
    CHECK(r.verdict == "pass");
  }
}

TEST_CASE("three-term relation at a point") {
  ParamSet ps({Scalar(0.31), Scalar(-0.22), Scalar(0.27)},
              {Scalar(-0.5), Scalar(-0.3), Scalar(-0.8)});
  auto r = verify_three_term_G(ps, 1, 2, 3, Scalar(0.8), 1e-7);
  CHECK(r.verdict == "pass");
}

TEST_CASE("three-term relation on coefficients") {
  ParamSet ps({Scalar(0.31), Scalar(-0.22), Scalar(0.27)},
              {Scalar(-0.5), Scalar(-0.3), Scalar(-0.8)});
  for (int n = 0; n <= 2; ++n) {
    auto r = verify_three_term_D(ps, 1, 2, 3, n, 1e-8);
    CHECK(r.verdict == "pass");
  }
}

TEST_CASE("series connection between the two G kinds") {
  ParamSet ps({Scalar(0.31), Scalar(-0.22), Scalar(0.27)},
              {Scalar(-0.5), Scalar(-0.3), Scalar(-0.8)});
  for (int s = 1; s <= 2; ++s) {
    auto r = verify_connection_540(ps, s, Scalar(0.75), 1e-7);
    CHECK(r.verdict == "pass");
  }
}

TEST_CASE("gamma-weighted three-term relation") {
  ParamSet ps({Scalar(0.2), Scalar(-0.35), Scalar(0.4)},
              {Scalar(0.55), Scalar(0.8), Scalar(1.05)});
  for (int n = 0; n <= 2; ++n) {
    auto r = verify_corollary_37(ps, n, 1e-9);
    CHECK(r.verdict == "pass");
  }
}

TEST_CASE("suite runs are deterministic") {
  auto a = run_suite(7, 3, {}, "ptolemy");
  auto b = run_suite(7, 3, {}, "ptolemy");
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i)
    CHECK(report_to_json(a[i]).dump() == report_to_json(b[i]).dump());
}

TEST_CASE("suite reports carry seed and trial indices") {
  auto reports = run_suite(42, 2, {}, "gauss");
  REQUIRE_FALSE(reports.empty());
  for (const auto& r : reports) {
    CHECK(r.seed == 42);
    CHECK((r.verdict == "pass" || r.verdict == "skipped"));
  }
}
