#include <doctest.h>

#include <random>

#include "norlund/norlund.hpp"

using namespace norlund;

namespace {

ParamSet make_params(std::vector<Scalar> a, std::vector<Scalar> b) {
  return ParamSet(std::move(a), std::move(b));
}

Scalar rnd_rational(std::mt19937_64& eng) {
  static const int dens[] = {3, 5, 7, 11};
  long long num = static_cast<long long>(eng() % 41) - 20;
  return Scalar(Rational(num, dens[eng() % 4]));
}

ParamSet random_rational_params(std::mt19937_64& eng, int p) {
  std::vector<Scalar> a, b;
  for (int i = 0; i < p; ++i) {
    a.push_back(rnd_rational(eng));
    b.push_back(rnd_rational(eng));
  }
  return make_params(a, b);
}

// closed p=2 form anchored at k: g(n) = (b1 - a_{3-k})_n (b2 - a_{3-k})_n / n!
Scalar g2_closed(const ParamSet& ps, int k, int n) {
  const Scalar& other = ps.a[2 - k];  // a_{3-k}, 1-based k
  return rising_factorial(ps.b[0] - other, n) *
         rising_factorial(ps.b[1] - other, n) / factorial_scalar(n);
}

}  // namespace

TEST_CASE("leading coefficient is one") {
  auto ps = make_params({Scalar::ratio(1, 3), Scalar::ratio(-1, 2)},
                        {Scalar::ratio(1, 5), Scalar::ratio(3, 4)});
  for (int k = 1; k <= 2; ++k) {
    CHECK(g_young(ps, k, 0).values[0] == Scalar(1));
    CHECK(g_recurrence_n(ps, k, 0).values[0] == Scalar(1));
  }
}

TEST_CASE("p=2 closed form") {
  auto ps = make_params({Scalar(0), Scalar::ratio(-1, 3)},
                        {Scalar(1), Scalar::ratio(3, 2)});
  // k=2 anchor, n=1: (1-0)(3/2-0) = 3/2
  CHECK(g_young(ps, 2, 1).values[1] == Scalar::ratio(3, 2));
  for (int k = 1; k <= 2; ++k) {
    auto t = g_recurrence_n(ps, k, 10);
    for (int n = 0; n <= 10; ++n) CHECK(t.values[n] == g2_closed(ps, k, n));
  }
}

TEST_CASE("p=1 table is the unit sequence") {
  auto ps = make_params({Scalar::ratio(2, 7)}, {Scalar::ratio(-1, 5)});
  auto t = g_recurrence_n(ps, 1, 5);
  CHECK(t.values[0] == Scalar(1));
  for (int n = 1; n <= 5; ++n) CHECK(t.values[n] == Scalar(0));
}

TEST_CASE("cross-method exact agreement at p=3") {
  std::mt19937_64 eng(11);
  auto ps = random_rational_params(eng, 3);
  for (int k = 1; k <= 3; ++k) {
    auto ty = g_young(ps, k, 6);
    auto tn = g_recurrence_n(ps, k, 6);
    auto tp = g_recurrence_p(ps, k, 6);
    auto tb = g_bernoulli(ps, k, 6, BernoulliForm::Psi);
    auto tt = g_bernoulli(ps, k, 6, BernoulliForm::Tilde);
    for (int n = 0; n <= 6; ++n) {
      CHECK(ty.values[n] == tn.values[n]);
      CHECK(ty.values[n] == tp.values[n]);
      CHECK(ty.values[n] == tb.values[n]);
      CHECK(ty.values[n] == tt.values[n]);
    }
  }
}

TEST_CASE("order recursion is independent of the inner anchor") {
  std::mt19937_64 eng(12);
  auto ps = random_rational_params(eng, 4);
  auto t1 = g_recurrence_p(ps, 2, 5, 1);
  auto t3 = g_recurrence_p(ps, 2, 5, 3);
  for (int n = 0; n <= 5; ++n) CHECK(t1.values[n] == t3.values[n]);
}

TEST_CASE("anchor connection formula") {
  std::mt19937_64 eng(13);
  auto ps = random_rational_params(eng, 3);
  auto t3 = g_young(ps, 3, 6);
  auto t1 = g_connect(ps, 1, 3, t3, 6);
  auto t1_direct = g_young(ps, 1, 6);
  for (int n = 0; n <= 6; ++n) CHECK(t1.values[n] == t1_direct.values[n]);
  // round trip back to anchor 3
  auto t3_back = g_connect(ps, 3, 1, t1, 6);
  for (int n = 0; n <= 6; ++n) CHECK(t3_back.values[n] == t3.values[n]);
}

TEST_CASE("small-n closed forms") {
  std::mt19937_64 eng(14);
  auto ps = random_rational_params(eng, 5);
  auto ty = g_young(ps, 5, 3);
  for (int n = 0; n <= 3; ++n) CHECK(g_closed_small_n(ps, n) == ty.values[n]);

  auto ps2 = make_params({Scalar::ratio(1, 3), Scalar::ratio(-2, 5)},
                         {Scalar::ratio(2, 7), Scalar::ratio(5, 4)});
  // n=1, p=2, anchor s=2: (b2 - a_1)(b_1 - a_1)
  CHECK(g_closed_small_p(ps2, 2, 1) ==
        (ps2.b[1] - ps2.a[0]) * (ps2.b[0] - ps2.a[0]));
}

TEST_CASE("small-p closed forms match the chain enumeration") {
  std::mt19937_64 eng(15);
  for (int p = 2; p <= 4; ++p) {
    auto ps = random_rational_params(eng, p);
    for (int s = 1; s <= p; ++s) {
      auto ty = g_young(ps, s, 5);
      for (int n = 0; n <= 5; ++n)
        CHECK(g_closed_small_p(ps, s, n) == ty.values[n]);
    }
  }
}

TEST_CASE("b-permutation invariance of the closed p=4 form") {
  std::mt19937_64 eng(16);
  auto ps = random_rational_params(eng, 4);
  auto ps_swapped = ps;
  std::swap(ps_swapped.b[0], ps_swapped.b[2]);
  for (int n = 0; n <= 4; ++n)
    CHECK(g_closed_small_p(ps, 2, n) == g_closed_small_p(ps_swapped, 2, n));
}

TEST_CASE("symmetric combination is anchor-independent") {
  std::mt19937_64 eng(17);
  auto ps = random_rational_params(eng, 4);
  CHECK(F_symmetric(ps, 0, 1) == Scalar(1));
  for (int m = 1; m <= 3; ++m) {
    Scalar ref = F_symmetric(ps, m, 1);
    for (int k = 2; k <= 4; ++k) CHECK(F_symmetric(ps, m, k) == ref);
  }
  // invariance under separate permutations of a and b
  auto pa = ps;
  std::swap(pa.a[0], pa.a[3]);
  std::swap(pa.b[1], pa.b[2]);
  CHECK(F_symmetric(pa, 2, 1) == F_symmetric(ps, 2, 1));
}
