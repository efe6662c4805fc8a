#pragma once
// Internal: extended-precision kernels for the slowly convergent series.
//
// Two effects make double precision insufficient here:
//  - terminating pFq(-j,...;1) sums lose up to ~j decimal digits to
//    cancellation (binomial sized terms, algebraically small result);
//  - the Levin u-transform weights grow like C(k, k/2), which is another
//    ~log10 C(k, k/2) ~ 0.3*k digits of intrinsic cancellation.
// With a series cap of 160 terms the budget is roughly
//   target(12) + terms(160) + levin(~48) ~ 220 digits,
// so 250 working digits leave a real margin above the 1e-10..1e-12
// accuracy the verifications ask of these kernels.
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>
#include <complex>
#include <functional>
#include <vector>

namespace norlund::hp {

using HC = boost::multiprecision::cpp_complex<250>;
using HR = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<250>>;

inline HC from_cx(std::complex<double> z) { return HC(z.real(), z.imag()); }
inline std::complex<double> to_cx(const HC& z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

inline HC rf(HC x, long long n) {
  HC r(1);
  for (long long i = 0; i < n; ++i) {
    r *= x;
    x += 1;
  }
  return r;
}

inline HR fact(long long n) {
  HR r(1);
  for (long long i = 2; i <= n; ++i) r *= i;
  return r;
}

struct SumResult {
  HC value{0};
  int terms = 0;
  double last_term = 0.0;
  double est_err = 0.0;  // change between the last two estimates
  bool converged = false;
};

// Levin u-transform acceleration of sum_{j>=0} term(j). A zero term is taken
// as termination of the series (the transform cannot use zero remainder
// estimates). Stagnation of successive transforms ends the summation.
SumResult levin_sum(const std::function<HC(int)>& term, int maxterms = 60,
                    double tol = 1e-17);

// Plain summation with the three-consecutive-small-terms stagnation rule.
SumResult direct_sum(const std::function<HC(int)>& term, long long maxterms,
                     double tol);

// terminating pFq(-j, num; den; 1) summed over j+1 terms
HC f_term(int j, const std::vector<HC>& num, const std::vector<HC>& den);

// terminating pFq(-j, num; den; z)
HC f_term_z(int j, const std::vector<HC>& num, const std::vector<HC>& den,
            const HC& z);

// pFq(num; den; 1) by Levin acceleration (slow algebraic convergence is fine)
SumResult pfq_at_1(const std::vector<HC>& num, const std::vector<HC>& den,
                   int maxterms = 80);

}  // namespace norlund::hp
