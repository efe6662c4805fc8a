#pragma once
#include <string>
#include <vector>

#include "norlund/buhring.hpp"
#include "norlund/params.hpp"
#include "norlund/report.hpp"
#include "norlund/scalar.hpp"

namespace norlund {

// A series z^{z_power} (1-z)^{omz_power} sum_n c_n (1-z)^n (center one) or
// the analogous series in powers of z (center zero). Evaluation takes 1-z to
// stay cancellation-free near the expansion point.
struct SeriesExpansion {
  enum class Center { zero, one };
  Center center = Center::one;
  Scalar z_power;    // exponent on z
  Scalar omz_power;  // exponent on (1-z)
  std::vector<Scalar> coefficients;
  std::string validity;  // region tag, e.g. "|1-z|<1"
  int anchor_index = 0;  // index of the a entry in the z^{a} prefactor

  // value at z = 1 - one_minus_z, principal branches
  Scalar eval_at(const Scalar& one_minus_z) const;
};

// All-pole G of first kind around z = 1:
//   z^{a_k} (1-z)^{psi_p - 1} / Gamma(psi_p) sum_n g_p^k(n)/(psi_p)_n (1-z)^n,
// with the limit form (coefficients g(n+l+1)/n!, no (1-z) prefactor) when
// psi_p = -l is a nonpositive integer.
SeriesExpansion gp0pp_near1(const ParamSet& params, int k, int N);

// Around z = 0: sum over residue series z^{a_k} Gamma-ratio pF(p-1)(z).
Scalar gp0pp_near0(const ParamSet& params, const Scalar& z, double tol);

// Dispatch: exactly 0 for |z| > 1, the near-0 series for |z| <= 1/2, the
// near-1 series otherwise.
Scalar gp0pp_eval(const ParamSet& params, const Scalar& z, double tol);

// Second-kind G around z = 1: z^{a_s} sum_n D_n^[k,s] (1-z)^n.
SeriesExpansion g2ppp_near1(const ParamSet& params, int k, int s, int N,
                            double tol);

// The four single-series representations with terminating polynomial kernels.
enum class PolyVariant { v520, v522, v523, v531 };

Scalar g2ppp_polyseries(const ParamSet& params, int k, int s, const Scalar& z,
                        PolyVariant variant, double tol);

// z^alpha G(z | a, b) = G(z | a + alpha, b + alpha)
ParamSet shift_parameters(const ParamSet& params, const Scalar& alpha);

// Checks int_0^1 x^{s-1} G^{p,0}(x) dx against Gamma(a+s)/Gamma(b+s), minus
// the degree-m correction polynomial when psi_p = -m.
IdentityReport mellin_check(const ParamSet& params, const Scalar& s,
                            double quad_tol);

// q(s) = sum_j g_p^k(m-j) (s + a_k - j)_j, for psi_p = -m; k-independent.
Scalar mellin_correction_polynomial(const ParamSet& params, int k,
                                    const Scalar& s);

}  // namespace norlund
