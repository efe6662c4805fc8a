#pragma once
#include <vector>

#include "norlund/params.hpp"
#include "norlund/scalar.hpp"

namespace norlund {

// Coefficient tables for the expansion of the all-pole balanced G-function
// around z = 1, anchored at exponent a_k. Four independent constructions are
// provided; in exact mode they agree exactly.

enum class BernoulliForm { Psi, Tilde };

// Direct enumeration of weakly increasing index chains (Young diagrams in an
// n x (p-2) box). Always defined; cost O(C(n+p-2, p-2)).
CoeffTable g_young(const ParamSet& params, int k, int N);

// Banded difference equation in n derived from the operator identity
// Q(D) w = z R(D) w, Q(t) = prod(t - a_i), R(t) = prod(t + 1 - b_i),
// acting on w = sum_n c_n z^{a_k}(1-z)^{psi_p-1+n}. Order p; initial values
// from the triangular part of the same system.
CoeffTable g_recurrence_n(const ParamSet& params, int k, int N);

// Convolution recurrence building the order-p table from the order-(p-1)
// one. inner_k selects which lower-order anchor is used at each level; the
// result must not depend on it (assertion hook for tests).
CoeffTable g_recurrence_p(const ParamSet& params, int k, int N, int inner_k = 1);

// Via generalized Bernoulli polynomials and the l-sequences.
CoeffTable g_bernoulli(const ParamSet& params, int k, int N, BernoulliForm form);

// Connection formula: table for anchor k from an existing table for anchor l.
CoeffTable g_connect(const ParamSet& params, int k, int l,
                     const CoeffTable& table_l, int N);

// Closed forms for n <= 3 at the anchor k = p (use with_swapped_a for other k).
Scalar g_closed_small_n(const ParamSet& params, int n);

// Closed forms for p = 2, 3, 4 (the p = 4 outer sum carries 1/k!).
Scalar g_closed_small_p(const ParamSet& params, int s, int n);

// The k-independent symmetric combination
// F_{p,m} = sum_j ((-1)^j / j!) [a_k]_j [psi_p+m-1]_j g(m-j).
Scalar F_symmetric(const ParamSet& params, int m, int k);

}  // namespace norlund
