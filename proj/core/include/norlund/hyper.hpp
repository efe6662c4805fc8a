#pragma once
#include <optional>
#include <vector>

#include "norlund/params.hpp"
#include "norlund/report.hpp"
#include "norlund/scalar.hpp"

namespace norlund {

// Generalized hypergeometric series sum_n prod(upper)_n / prod(lower)_n z^n/n!
// with termination detected from nonpositive-integer upper parameters.
struct HyperSpec {
  std::vector<Scalar> upper;
  std::vector<Scalar> lower;
  std::optional<long long> terminating_index;

  static HyperSpec make(std::vector<Scalar> upper, std::vector<Scalar> lower);
};

// Terminating series are summed exactly over all terms (rational arithmetic
// when the inputs are rational). Convergent cases: |z| < 1 by direct
// summation with the stagnation rule, z = 1 via Levin acceleration when
// Re(sum lower - sum upper) > 0.
Scalar eval_pfq(const HyperSpec& spec, const Scalar& z, double tol,
                long long max_terms = 10000);

// Two-term 2F1 connection between expansions at z and 1-z.
IdentityReport gauss_connection_residual(const Scalar& alpha1,
                                         const Scalar& alpha2,
                                         const Scalar& beta, const Scalar& z,
                                         double tol);

// Right-hand side of the expansion of the front pF(p-1) around z = 1:
// (1-z)^{psi_p - 1} sum f_p^s(n)(1-z)^n + sum h_p^s(n)(1-z)^n.
Scalar buhring_expansion_eval(const ParamSet& params, int s, const Scalar& z,
                              int N, double tol);

// Terminating 3F2(1) transformation (two (n+1)-term polynomials).
IdentityReport sheppard_residual_p3(long long n, const Scalar& alpha1,
                                    const Scalar& alpha2, const Scalar& beta1,
                                    const Scalar& beta2);

// Terminating double-sum transformation with an inner terminating 3F2 kernel.
IdentityReport buhring_p4_residual(long long n, const Scalar& alpha1,
                                   const Scalar& alpha2, const Scalar& beta1,
                                   const Scalar& beta2, const Scalar& gamma1,
                                   const Scalar& gamma2);

// Nested-chain transformation: the weighted chain double sum equals the plain
// chain sum g_p^p(n). Finite, enumerated directly.
IdentityReport multiseries_transform_residual(const ParamSet& params, int n);

}  // namespace norlund
