#include "norlund/scalar.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>

namespace norlund {

bool Scalar::is_integer(double tol) const {
  if (exact_) return boost::multiprecision::denominator(q_) == 1;
  return near_integer(z_, tol);
}

bool Scalar::is_nonpos_integer(double tol) const {
  if (exact_) return boost::multiprecision::denominator(q_) == 1 && q_ <= 0;
  return near_nonpos_integer(z_, tol);
}

long long Scalar::to_integer() const {
  if (exact_) {
    if (boost::multiprecision::denominator(q_) != 1)
      throw Error("Scalar: not an integer");
    return static_cast<long long>(boost::multiprecision::numerator(q_));
  }
  return std::llround(z_.real());
}

bool approx_equal(Complex x, Complex y, double tol) {
  double scale = std::max(1.0, std::max(std::abs(x), std::abs(y)));
  return std::abs(x - y) <= tol * scale;
}

bool approx_equal(const Scalar& x, const Scalar& y, double tol) {
  if (x.exact() && y.exact()) return x == y;
  return approx_equal(x.cx(), y.cx(), tol);
}

Scalar rising_factorial(const Scalar& a, long long n) {
  Scalar r(1);
  Scalar x = a;
  for (long long i = 0; i < n; ++i) {
    r *= x;
    x += Scalar(1);
  }
  return r;
}

Scalar falling_factorial(const Scalar& a, long long j) {
  Scalar r(1);
  Scalar x = a;
  for (long long i = 0; i < j; ++i) {
    r *= x;
    x -= Scalar(1);
  }
  return r;
}

Complex rising_factorial(Complex a, long long n) {
  Complex r(1.0, 0.0);
  for (long long i = 0; i < n; ++i) r *= a + Complex(double(i), 0.0);
  return r;
}

Complex falling_factorial(Complex a, long long j) {
  Complex r(1.0, 0.0);
  for (long long i = 0; i < j; ++i) r *= a - Complex(double(i), 0.0);
  return r;
}

Scalar factorial_scalar(long long n) {
  Rational r = 1;
  for (long long i = 2; i <= n; ++i) r *= i;
  return Scalar(r);
}

double factorial_d(long long n) {
  double r = 1.0;
  for (long long i = 2; i <= n; ++i) r *= double(i);
  return r;
}

bool near_integer(Complex z, double tol) {
  return std::abs(z.imag()) <= tol &&
         std::abs(z.real() - std::round(z.real())) <= tol;
}

bool near_nonpos_integer(Complex z, double tol) {
  return near_integer(z, tol) && z.real() <= tol;
}

Complex sin_pi(Complex x) {
  // reduce the real part to [-1/2, 1/2] and fold the sign out;
  // sin(pi(n+f)) = (-1)^n sin(pi f)
  double re = x.real();
  double n = std::round(re);
  double f = re - n;
  Complex val = std::sin(Complex(M_PI, 0.0) * Complex(f, x.imag()));
  if (std::fmod(std::fabs(n), 2.0) == 1.0) val = -val;
  return val;
}

Scalar sin_pi(const Scalar& x) {
  if (x.exact()) {
    const Rational& q = x.rat();
    using boost::multiprecision::cpp_int;
    cpp_int den = boost::multiprecision::denominator(q);
    cpp_int num = boost::multiprecision::numerator(q);
    if (den == 1 || den == 2 || den == 6) {
      // sine is rational here: 0, +-1, +-1/2
      cpp_int period = 2 * den;
      cpp_int r = num % period;
      if (r < 0) r += period;
      long long rr = static_cast<long long>(r);
      if (den == 1) return Scalar(0);
      if (den == 2) return Scalar(rr == 1 ? 1 : -1);
      // den == 6: rr in {1,5} -> 1/2; {7,11} -> -1/2
      return Scalar(Rational(rr < 6 ? 1 : -1, 2));
    }
  }
  return Scalar(sin_pi(x.cx()));
}

namespace {
// Lanczos coefficients, g = 607/128, 15 terms (Godfrey / Boost tables).
const double kLanczosG = 607.0 / 128.0;
const double kLanczos[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

Complex log_gamma_lanczos(Complex z) {
  // valid for Re z >= 0.5; z shifted internally
  z -= 1.0;
  Complex x(kLanczos[0], 0.0);
  for (int i = 1; i < 15; ++i) x += kLanczos[i] / (z + double(i));
  Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * M_PI) + (z + 0.5) * std::log(t) - t + std::log(x);
}
}  // namespace

Complex log_gamma(Complex z) {
  if (near_nonpos_integer(z))
    throw PoleError("log_gamma: argument at nonpositive integer");
  if (z.real() >= 0.5) return log_gamma_lanczos(z);
  // reflection: log Gamma(z) = log(pi / sin(pi z)) - log Gamma(1-z)
  return std::log(Complex(M_PI, 0.0) / sin_pi(z)) - log_gamma_lanczos(1.0 - z);
}

Complex gamma_cx(Complex z) { return std::exp(log_gamma(z)); }

Complex gamma_ratio_product(const std::vector<Complex>& num,
                            const std::vector<Complex>& den) {
  Complex acc(0.0, 0.0);
  for (size_t i = 0; i < den.size(); ++i) {
    if (near_nonpos_integer(den[i]))
      throw PoleError("gamma_ratio_product: denominator pole at index " +
                      std::to_string(i));
    acc -= log_gamma(den[i]);
  }
  for (size_t i = 0; i < num.size(); ++i) {
    if (near_nonpos_integer(num[i]))
      throw PoleError("gamma_ratio_product: numerator pole at index " +
                      std::to_string(i));
    acc += log_gamma(num[i]);
  }
  return std::exp(acc);
}

}  // namespace norlund
