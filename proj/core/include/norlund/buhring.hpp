#pragma once
#include "norlund/params.hpp"
#include "norlund/scalar.hpp"

namespace norlund {

// Expansion coefficients around z = 1 for the two-fold G-function of equal
// orders: h_p^s(n) and f_p^s(n) drive the logarithmic-free part, D_n^[k,s]
// the direct series. Everything here is float-mode (the prefactors carry
// Gamma values); the slowly convergent outer series are accelerated with the
// Levin u-transform in extended precision.

// f_p^s(n) = Gamma(1 - psi_p) g_p^s(n) / (psi_p)_n, entrywise from a g table.
CoeffTable f_from_g(const CoeffTable& gtable, const ParamSet& params);

// Buehring's explicit multiple-sum formula for h_p^s(n): an outer series over
// the top chain index with inner chain sums of length p-3. Requires
// Re(1 - b_i + a_s + n) > 0 for i = 1..p-2 at the smallest requested n.
CoeffTable h_multisum(const ParamSet& params, int s, int N, double tol);

// Closed forms: a single 3F2(1) for p = 3, an accelerated outer series with a
// terminating 3F2 kernel for p = 4.
Scalar h_closed_p3(const ParamSet& params, int s, int n, double tol);
Scalar h_closed_p4(const ParamSet& params, int s, int n, double tol);

// Two independent series representations of D_n^[k,s]; they agree wherever
// both converge (checked in the tests, not assumed here).
enum class DVariant { v535, v536 };

CoeffTable D_coeffs(const ParamSet& params, int k, int s, int N,
                    DVariant variant, double tol);

// h_p^s(n) assembled from the D tables:
//   h = -(1/(pi sin(pi psi_p))) sum_{k != s} w_k D_n^[k,s],
//   w_k = prod_j sin(pi(b_j - a_k)) / prod_{i != k,s} sin(pi(a_i - a_k)).
CoeffTable h_from_D(const ParamSet& params, int s, int N, double tol,
                    DVariant variant = DVariant::v535);

}  // namespace norlund
