#pragma once
#include <boost/multiprecision/cpp_int.hpp>
#include <complex>
#include <vector>

#include "norlund/errors.hpp"

namespace norlund {

using Rational = boost::multiprecision::cpp_rational;
using Complex = std::complex<double>;

// Differences within this distance of an integer make the sine denominators
// numerically meaningless; exact mode tests integrality exactly instead.
inline constexpr double kIntegerTol = 1e-9;

// Tagged numeric value: an exact big rational (real) or a complex double.
// Rational arithmetic never rounds; mixing an exact value with a float one
// promotes the result to float. Promotion is one-way.
class Scalar {
 public:
  Scalar() : exact_(true), q_(0) {}
  Scalar(int v) : exact_(true), q_(v) {}
  Scalar(long v) : exact_(true), q_(v) {}
  Scalar(long long v) : exact_(true), q_(v) {}
  Scalar(const Rational& q) : exact_(true), q_(q) {}
  Scalar(Rational&& q) : exact_(true), q_(std::move(q)) {}
  Scalar(double v) : exact_(false), z_(v, 0.0) {}
  Scalar(Complex v) : exact_(false), z_(v) {}

  static Scalar ratio(long long num, long long den) {
    return Scalar(Rational(num, den));
  }

  bool exact() const { return exact_; }

  const Rational& rat() const {
    if (!exact_) throw Error("Scalar: float value has no exact rational form");
    return q_;
  }

  Complex cx() const {
    if (!exact_) return z_;
    return Complex(static_cast<double>(q_), 0.0);
  }

  Scalar promoted() const { return Scalar(cx()); }

  bool is_zero() const { return exact_ ? q_.is_zero() : (z_ == Complex(0.0, 0.0)); }

  // Exact nonnegative-integer test (exact mode) / tolerance test (float mode).
  bool is_integer(double tol = kIntegerTol) const;
  bool is_nonpos_integer(double tol = kIntegerTol) const;
  // Nearest integer of the real part; only meaningful after is_integer().
  long long to_integer() const;

  Scalar operator-() const {
    if (exact_) return Scalar(Rational(-q_));
    return Scalar(-z_);
  }

  friend Scalar operator+(const Scalar& x, const Scalar& y) {
    if (x.exact_ && y.exact_) return Scalar(Rational(x.q_ + y.q_));
    return Scalar(x.cx() + y.cx());
  }
  friend Scalar operator-(const Scalar& x, const Scalar& y) {
    if (x.exact_ && y.exact_) return Scalar(Rational(x.q_ - y.q_));
    return Scalar(x.cx() - y.cx());
  }
  friend Scalar operator*(const Scalar& x, const Scalar& y) {
    if (x.exact_ && y.exact_) return Scalar(Rational(x.q_ * y.q_));
    return Scalar(x.cx() * y.cx());
  }
  friend Scalar operator/(const Scalar& x, const Scalar& y) {
    if (x.exact_ && y.exact_) {
      if (y.q_.is_zero()) throw PoleError("Scalar: exact division by zero");
      return Scalar(Rational(x.q_ / y.q_));
    }
    return Scalar(x.cx() / y.cx());
  }

  Scalar& operator+=(const Scalar& o) { *this = *this + o; return *this; }
  Scalar& operator-=(const Scalar& o) { *this = *this - o; return *this; }
  Scalar& operator*=(const Scalar& o) { *this = *this * o; return *this; }
  Scalar& operator/=(const Scalar& o) { *this = *this / o; return *this; }

  // Equality is exact in rational mode and bitwise in float mode; use
  // approx_equal for toleranced comparison.
  friend bool operator==(const Scalar& x, const Scalar& y) {
    if (x.exact_ && y.exact_) return x.q_ == y.q_;
    return x.cx() == y.cx();
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

 private:
  bool exact_;
  Rational q_;
  Complex z_{0.0, 0.0};
};

inline double abs_cx(Complex z) { return std::abs(z); }
inline double abs_val(const Scalar& s) { return std::abs(s.cx()); }

// |x - y| <= tol * max(1, |x|, |y|)
bool approx_equal(const Scalar& x, const Scalar& y, double tol);
bool approx_equal(Complex x, Complex y, double tol);

// (a)_n = a(a+1)...(a+n-1); exact stays exact.
Scalar rising_factorial(const Scalar& a, long long n);
// [a]_j = a(a-1)...(a-j+1)
Scalar falling_factorial(const Scalar& a, long long j);
Complex rising_factorial(Complex a, long long n);
Complex falling_factorial(Complex a, long long j);
Scalar factorial_scalar(long long n);
double factorial_d(long long n);

// Principal-branch log Gamma, Lanczos approximation with reflection for
// Re z < 0.5; 13+ significant digits on |z| <= 50.
Complex log_gamma(Complex z);
Complex gamma_cx(Complex z);

// sin(pi x) with argument reduction on the real part, so integer real parts
// give exactly zero. The Scalar overload keeps exact results for arguments
// whose sine is rational (denominator 1, 2 or 6).
Complex sin_pi(Complex x);
Scalar sin_pi(const Scalar& x);

// exp(sum log Gamma(num) - sum log Gamma(den)); refuses to cancel poles.
Complex gamma_ratio_product(const std::vector<Complex>& num,
                            const std::vector<Complex>& den);

bool near_integer(Complex z, double tol = kIntegerTol);
bool near_nonpos_integer(Complex z, double tol = kIntegerTol);

}  // namespace norlund
