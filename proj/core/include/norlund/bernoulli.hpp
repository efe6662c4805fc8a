#pragma once
#include <vector>

#include "norlund/params.hpp"
#include "norlund/scalar.hpp"

namespace norlund {

// Which of the two auxiliary sequences of the Bernoulli-based coefficient
// formulas to use. Tilde carries the anchor index k (1-based).
struct LVariant {
  bool tilde = false;
  int k = 0;  // required when tilde
  static LVariant plain() { return {false, 0}; }
  static LVariant tilde_k(int k) { return {true, k}; }
};

// Classical Bernoulli number B_k (exact).
Scalar bernoulli_number(int k);

// Generalized Bernoulli polynomial B^(sigma)_k(x): k! times the t^k
// coefficient of (t/(e^t-1))^sigma e^{xt}. Exact when sigma, x are exact.
Scalar gen_bernoulli(const Scalar& sigma, int k, const Scalar& x);

// q_m = ((-1)^{m+1}/(m+1)) [sum_j (B_{m+1}(a_j) - B_{m+1}(b_j))], with the
// tilde variant adding B_{m+1}(a_k + psi_p - 1) - B_{m+1}(a_k).
Scalar q_m(const ParamSet& params, int m, const LVariant& variant);

// l_0..l_R by the convolution recurrence l_r = (1/r) sum_m q_m l_{r-m}.
std::vector<Scalar> l_sequence(const ParamSet& params, int R,
                               const LVariant& variant);

// Same value by direct enumeration of partitions of r (r <= 20).
Scalar l_explicit(const ParamSet& params, int r);

// Same value as det(Omega_r)/r! with Omega_r lower Hessenberg; evaluated by
// the leading-principal-minor recurrence (r <= 30).
Scalar l_determinant(const ParamSet& params, int r);

}  // namespace norlund
