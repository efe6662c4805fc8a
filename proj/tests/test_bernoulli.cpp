#include <doctest.h>

#include "norlund/bernoulli.hpp"

using namespace norlund;

namespace {
ParamSet make_params(std::initializer_list<Scalar> a,
                     std::initializer_list<Scalar> b) {
  return ParamSet(std::vector<Scalar>(a), std::vector<Scalar>(b));
}
}  // namespace

TEST_CASE("classical Bernoulli numbers") {
  CHECK(bernoulli_number(0) == Scalar(1));
  CHECK(bernoulli_number(1) == Scalar::ratio(-1, 2));
  CHECK(bernoulli_number(2) == Scalar::ratio(1, 6));
  CHECK(bernoulli_number(3) == Scalar(0));
  CHECK(bernoulli_number(12) == Scalar::ratio(-691, 2730));
}

TEST_CASE("generalized Bernoulli polynomial") {
  Scalar sigma = Scalar::ratio(5, 3);
  Scalar x = Scalar::ratio(-2, 7);
  CHECK(gen_bernoulli(sigma, 0, x) == Scalar(1));
  // first order: B^(1)_1(x) = x - 1/2
  CHECK(gen_bernoulli(Scalar(1), 1, x) == x - Scalar::ratio(1, 2));
  // B^(1)_2(0) = 1/6
  CHECK(gen_bernoulli(Scalar(1), 2, Scalar(0)) == Scalar::ratio(1, 6));
  // B^(sigma)_1(x) = x - sigma/2
  CHECK(gen_bernoulli(sigma, 1, x) == x - sigma / Scalar(2));
}

TEST_CASE("q vanishes when the parameter vectors coincide") {
  auto ps = make_params({Scalar::ratio(1, 3), Scalar::ratio(-2, 5)},
                        {Scalar::ratio(1, 3), Scalar::ratio(-2, 5)});
  for (int m = 1; m <= 5; ++m) CHECK(q_m(ps, m, LVariant::plain()) == Scalar(0));
}

TEST_CASE("q at p=1 and m=1 uses the Bernoulli polynomial difference") {
  // B_2(0) = B_2(1), so the difference cancels
  auto ps = make_params({Scalar(0)}, {Scalar(1)});
  CHECK(q_m(ps, 1, LVariant::plain()) == Scalar(0));
}

TEST_CASE("l sequence: recurrence, partitions and determinant agree") {
  auto ps = make_params({Scalar::ratio(1, 3), Scalar::ratio(-1, 2),
                         Scalar::ratio(2, 7)},
                        {Scalar::ratio(1, 5), Scalar::ratio(3, 4),
                         Scalar::ratio(-1, 3)});
  auto l = l_sequence(ps, 6, LVariant::plain());
  REQUIRE(l.size() == 7);
  CHECK(l[0] == Scalar(1));
  CHECK(l[1] == q_m(ps, 1, LVariant::plain()));
  Scalar q1 = q_m(ps, 1, LVariant::plain());
  Scalar q2 = q_m(ps, 2, LVariant::plain());
  CHECK(l[2] == (q2 + q1 * q1) / Scalar(2));
  for (int r = 0; r <= 6; ++r) {
    CHECK(l_explicit(ps, r) == l[r]);
    CHECK(l_determinant(ps, r) == l[r]);
  }
}
