#pragma once
#include <string>
#include <vector>

#include "norlund/params.hpp"
#include "norlund/report.hpp"
#include "norlund/scalar.hpp"

namespace norlund {

// Each verify_* evaluates one identity as a residual at the given parameter
// point. Degenerate or precondition-violating inputs give verdict "skipped"
// with the reason; residuals are scale-normalized by the largest term.

// sum_k prod_j sin(pi(b_j - a_k)) / prod_{i != k} sin(pi(a_i - a_k))
//   = sin(pi psi_p)
IdentityReport verify_ptolemy(const ParamSet& params, double tol);

// Double sum over j <= m and k of sine-weighted h_p^k(m - j) terms; zero.
IdentityReport verify_identity1(const ParamSet& params, int m, double tol);

// The g-coefficient counterpart with (psi_p)_{m-j} denominators; zero for
// any choice of s. At m = 0 it reduces to the sine identity above.
IdentityReport verify_identity2(const ParamSet& params, int m, int s,
                                double tol);

enum class CircularKind { first, second };

// Cyclic three-term 3F2(1) relations for p = 3, parameterized by which b
// entry is distinguished.
IdentityReport verify_3f2_circular(const ParamSet& params3, int i,
                                   CircularKind which, double tol);

// sin(pi(a_s-a_i)) G^{2,p}[s,i] + sin(pi(a_i-a_k)) G^{2,p}[i,k]
//   + sin(pi(a_k-a_s)) G^{2,p}[k,s] = 0 at a point z
IdentityReport verify_three_term_G(const ParamSet& params, int s, int i, int k,
                                   const Scalar& z, double tol);

// The coefficient-level form: falling-factorial-weighted D_n three-term sum.
IdentityReport verify_three_term_D(const ParamSet& params, int s, int i, int k,
                                   int n, double tol);

// sin(pi psi_p) x (Gamma-weighted pF(p-1)) = pi G^{p,0}
//   - (1/pi) sum_{k != s} sine-weighted G^{2,p}
IdentityReport verify_connection_540(const ParamSet& params, int s,
                                     const Scalar& z, double tol);

// Three-term 3F2(1) relation with Gamma weights (p = 3 family), indexed by n.
IdentityReport verify_corollary_37(const ParamSet& params3, int n, double tol);

struct TolProfile {
  double finite = 1e-9;         // finite sums
  double single_series = 1e-8;  // one infinite series
  double composed = 1e-7;       // several series / quadrature composed
};

// Deterministic seeded sampling; every checker runs per trial (subject to
// the suite filter), parameters drawn away from degeneracy margins.
// suite: "all" or one of {ptolemy, identity1, identity2, circular,
// three_term_G, three_term_D, connection, corollary37, gauss, terminating}.
// p_lo/p_hi (when > 0) clamp the drawn order p; identities with a fixed
// order (the p = 3 families) ignore the clamp.
std::vector<IdentityReport> run_suite(long long seed, int trials,
                                      const TolProfile& profile = {},
                                      const std::string& suite = "all",
                                      int p_lo = 0, int p_hi = 0);

}  // namespace norlund
