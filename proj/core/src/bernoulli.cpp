#include "norlund/bernoulli.hpp"

#include <mutex>

namespace norlund {

namespace {
// cache of exact Bernoulli numbers B_0..B_max
std::vector<Rational>& bernoulli_cache() {
  static std::vector<Rational> cache{Rational(1)};
  return cache;
}
std::mutex bern_mutex;

void extend_bernoulli(int k) {
  auto& B = bernoulli_cache();
  while (static_cast<int>(B.size()) <= k) {
    int n = static_cast<int>(B.size());
    // sum_{j=0}^{n} C(n+1, j) B_j = 0  for n >= 1
    Rational s = 0;
    Rational binom = 1;  // C(n+1, 0)
    for (int j = 0; j < n; ++j) {
      s += binom * B[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    B.push_back(-s / (n + 1));
  }
}
}  // namespace

Scalar bernoulli_number(int k) {
  std::lock_guard<std::mutex> lock(bern_mutex);
  extend_bernoulli(k);
  return Scalar(bernoulli_cache()[k]);
}

Scalar gen_bernoulli(const Scalar& sigma, int k, const Scalar& x) {
  // base series t/(e^t - 1) = sum B_j t^j / j!
  std::vector<Scalar> base(k + 1);
  for (int j = 0; j <= k; ++j)
    base[j] = bernoulli_number(j) / factorial_scalar(j);
  // powed = base^sigma via c_n = (1/n) sum_k (k sigma - n + k) base_k c_{n-k}
  std::vector<Scalar> c(k + 1);
  c[0] = Scalar(1);
  for (int n = 1; n <= k; ++n) {
    Scalar s(0);
    for (int j = 1; j <= n; ++j)
      s += (Scalar(j) * sigma - Scalar(n - j)) * base[j] * c[n - j];
    c[n] = s / Scalar(n);
  }
  // multiply by e^{xt} and take k! [t^k]
  Scalar acc(0);
  Scalar xpow(1);
  for (int j = k; j >= 0; --j) {
    // term c[j] * x^{k-j} / (k-j)!
    acc += c[j] * xpow / factorial_scalar(k - j);
    if (j > 0) xpow *= x;
  }
  return acc * factorial_scalar(k);
}

namespace {
Scalar bern_poly(int m, const Scalar& x) { return gen_bernoulli(Scalar(1), m, x); }
}  // namespace

Scalar q_m(const ParamSet& params, int m, const LVariant& variant) {
  const int p = params.p();
  Scalar s(0);
  for (int j = 0; j < p; ++j)
    s += bern_poly(m + 1, params.a[j]) - bern_poly(m + 1, params.b[j]);
  if (variant.tilde) {
    if (variant.k < 1 || variant.k > p)
      throw Error("q_m: tilde variant needs 1 <= k <= p");
    const Scalar& ak = params.a[variant.k - 1];
    s += bern_poly(m + 1, ak + params.psi_p() - Scalar(1)) - bern_poly(m + 1, ak);
  }
  Scalar sign = (m % 2 == 0) ? Scalar(-1) : Scalar(1);  // (-1)^{m+1}
  return sign * s / Scalar(m + 1);
}

std::vector<Scalar> l_sequence(const ParamSet& params, int R,
                               const LVariant& variant) {
  std::vector<Scalar> q(R + 1);
  for (int m = 1; m <= R; ++m) q[m] = q_m(params, m, variant);
  std::vector<Scalar> l(R + 1);
  l[0] = Scalar(1);
  for (int r = 1; r <= R; ++r) {
    Scalar s(0);
    for (int m = 1; m <= r; ++m) s += q[m] * l[r - m];
    l[r] = s / Scalar(r);
  }
  return l;
}

namespace {
// enumerate partitions of r as multiplicity maps part -> count
void partitions_rec(int rem, int maxpart, std::vector<std::pair<int, int>>& cur,
                    const std::vector<Scalar>& q, Scalar& total) {
  if (rem == 0) {
    Scalar t(1);
    for (auto [part, mult] : cur) {
      Scalar f = q[part] / Scalar(part);
      Scalar pw(1);
      for (int i = 0; i < mult; ++i) pw *= f;
      t *= pw / factorial_scalar(mult);
    }
    total += t;
    return;
  }
  for (int part = std::min(rem, maxpart); part >= 1; --part) {
    cur.emplace_back(part, 0);
    int take = 0;
    // try multiplicities 1.. while they fit, with smaller parts below
    while ((take + 1) * part <= rem) {
      ++take;
      cur.back().second = take;
      partitions_rec(rem - take * part, part - 1, cur, q, total);
    }
    cur.pop_back();
  }
}
}  // namespace

Scalar l_explicit(const ParamSet& params, int r) {
  if (r > 20) throw Error("l_explicit: partition enumeration bounded at r <= 20");
  if (r == 0) return Scalar(1);
  std::vector<Scalar> q(r + 1);
  for (int m = 1; m <= r; ++m) q[m] = q_m(params, m, LVariant::plain());
  Scalar total(0);
  std::vector<std::pair<int, int>> cur;
  partitions_rec(r, r, cur, q, total);
  return total;
}

Scalar l_determinant(const ParamSet& params, int r) {
  if (r > 30) throw Error("l_determinant: bounded at r <= 30");
  if (r == 0) return Scalar(1);
  std::vector<Scalar> q(r + 1);
  for (int m = 1; m <= r; ++m) q[m] = q_m(params, m, LVariant::plain());
  // omega_{i,j} = q_{i-j+1} (i-1)!/(j-1)! for i >= j, superdiagonal -1.
  // Leading-minor recurrence for lower Hessenberg with superdiagonal h:
  // d_m = sum_j (-1)^{m-j} omega_{m,j} (prod_{i=j..m-1} h_{i,i+1}) d_{j-1};
  // with h = -1 the sign factors cancel to +1.
  std::vector<Scalar> d(r + 1);
  d[0] = Scalar(1);
  for (int m = 1; m <= r; ++m) {
    Scalar s(0);
    for (int j = 1; j <= m; ++j) {
      Scalar omega = q[m - j + 1] * factorial_scalar(m - 1) / factorial_scalar(j - 1);
      s += omega * d[j - 1];
    }
    d[m] = s;
  }
  return d[r] / factorial_scalar(r);
}

}  // namespace norlund
