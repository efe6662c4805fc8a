#include "norlund/norlund.hpp"

#include <functional>
#include <map>

#include "norlund/bernoulli.hpp"

namespace norlund {

ParamSet::ParamSet(std::vector<Scalar> a_, std::vector<Scalar> b_)
    : a(std::move(a_)), b(std::move(b_)) {
  if (a.size() != b.size() || a.empty())
    throw Error("ParamSet: a and b must have equal positive length");
}

Scalar ParamSet::psi(int m) const {
  if (m < 0 || m > p()) throw Error("ParamSet::psi: index out of range");
  Scalar s(0);
  for (int i = 0; i < m; ++i) s += b[i] - a[i];
  return s;
}

bool ParamSet::exact() const {
  for (const auto& x : a)
    if (!x.exact()) return false;
  for (const auto& x : b)
    if (!x.exact()) return false;
  return true;
}

ParamSet ParamSet::promoted() const {
  ParamSet out = *this;
  for (auto& x : out.a) x = x.promoted();
  for (auto& x : out.b) x = x.promoted();
  return out;
}

ParamSet ParamSet::with_swapped_a(int k, int l) const {
  if (k < 1 || k > p() || l < 1 || l > p())
    throw Error("with_swapped_a: index out of range");
  ParamSet out = *this;
  std::swap(out.a[k - 1], out.a[l - 1]);
  return out;
}

std::vector<Scalar> ParamSet::a_without(int k) const {
  std::vector<Scalar> out;
  for (int i = 0; i < p(); ++i)
    if (i != k - 1) out.push_back(a[i]);
  return out;
}

std::vector<Scalar> ParamSet::a_without(int k, int s) const {
  std::vector<Scalar> out;
  for (int i = 0; i < p(); ++i)
    if (i != k - 1 && i != s - 1) out.push_back(a[i]);
  return out;
}

namespace {

std::string mode_of(const ParamSet& params) {
  return params.exact() ? "exact" : "float";
}

// visit all weakly increasing chains 0 <= j_1 <= ... <= j_len <= hi
void for_chains(int hi, int len, std::vector<int>& chain,
                const std::function<void(const std::vector<int>&)>& fn) {
  if (static_cast<int>(chain.size()) == len) {
    fn(chain);
    return;
  }
  int lo = chain.empty() ? 0 : chain.back();
  for (int v = lo; v <= hi; ++v) {
    chain.push_back(v);
    for_chains(hi, len, chain, fn);
    chain.pop_back();
  }
}

// g_p^p(n) for the given parameter order (anchor = last entry of a)
Scalar young_value(const ParamSet& ps, int n) {
  const int p = ps.p();
  if (p == 1) return n == 0 ? Scalar(1) : Scalar(0);
  std::vector<Scalar> psis(p + 1);
  for (int m = 0; m <= p; ++m) psis[m] = ps.psi(m);
  Scalar total(0);
  std::vector<int> chain;
  for_chains(n, p - 2, chain, [&](const std::vector<int>& ch) {
    // js = (0, ch..., n)
    Scalar term(1);
    int prev = 0;
    for (int m = 1; m < p; ++m) {
      int cur = (m - 1 < p - 2) ? ch[m - 1] : n;
      int d = cur - prev;
      if (d < 0) return;
      term *= rising_factorial(psis[m] + Scalar(prev), d) / factorial_scalar(d) *
              rising_factorial(ps.b[m] - ps.a[m - 1], d);
      prev = cur;
    }
    total += term;
  });
  return total;
}

CoeffTable make_table(const ParamSet& params, int k, std::vector<Scalar> vals,
                      const char* method) {
  CoeffTable t;
  t.kind = 'g';
  t.p = params.p();
  t.k = k;
  t.values = std::move(vals);
  t.method = method;
  t.mode = mode_of(params);
  return t;
}

}  // namespace

CoeffTable g_young(const ParamSet& params, int k, int N) {
  if (k < 1 || k > params.p()) throw Error("g_young: anchor out of range");
  ParamSet ps = params.with_swapped_a(k, params.p());
  std::vector<Scalar> vals;
  vals.reserve(N + 1);
  for (int n = 0; n <= N; ++n) vals.push_back(young_value(ps, n));
  return make_table(params, k, std::move(vals), "young");
}

namespace {

// coefficients of (Q(D) - z R(D)) e_mu on e_{mu-off}, off = -1..p, where
// e_mu = z^{ak} (1-z)^mu, D = z d/dz:
//   D e_mu = (ak + mu) e_mu - mu e_{mu-1},   z e_mu = e_mu - e_{mu+1}
std::map<int, Scalar> operator_coeffs(const ParamSet& ps, const Scalar& ak,
                                      const Scalar& mu) {
  auto apply_prod = [&](const std::vector<Scalar>& roots) {
    std::map<int, Scalar> vec{{0, Scalar(1)}};
    for (const auto& r : roots) {
      std::map<int, Scalar> nxt;
      for (const auto& [off, c] : vec) {
        Scalar m = mu - Scalar(off);
        nxt[off] += c * (ak + m) - r * c;
        nxt[off + 1] -= c * m;
      }
      vec = std::move(nxt);
    }
    return vec;
  };
  std::vector<Scalar> broots;
  for (const auto& bi : ps.b) broots.push_back(bi - Scalar(1));
  std::map<int, Scalar> out = apply_prod(ps.a);  // Q(D) e_mu
  std::map<int, Scalar> rv = apply_prod(broots); // R(D) e_mu
  for (const auto& [off, c] : rv) {              // subtract z * rv
    out[off] -= c;
    out[off - 1] += c;
  }
  return out;
}

}  // namespace

CoeffTable g_recurrence_n(const ParamSet& params, int k, int N) {
  const int p = params.p();
  if (k < 1 || k > p) throw Error("g_recurrence_n: anchor out of range");
  if (p == 1) {
    std::vector<Scalar> vals(N + 1, Scalar(0));
    vals[0] = Scalar(1);
    return make_table(params, k, std::move(vals), "recurrence_n");
  }
  const Scalar ak = params.a[k - 1];
  const Scalar psip = params.psi_p();
  // level m equation: sum_{n'=max(0,m-1)}^{m+p-1} C(m,n') g(n') = 0 where
  // C(m,n') = [e_{psi-1+m}] (Q(D)-zR(D)) e_{psi-1+n'} * (psi+n')_{top-n'};
  // the Pochhammer factor clears the (psi)_n denominators of the ansatz.
  std::vector<Scalar> g{Scalar(1)};
  for (int m = -p + 2; m <= N - p + 1; ++m) {
    int top = m + p - 1;
    Scalar acc(0);
    for (int nn = std::max(0, m - 1); nn < top; ++nn) {
      auto co = operator_coeffs(params, ak, psip - Scalar(1) + Scalar(nn));
      auto it = co.find(nn - m);
      if (it != co.end() && !it->second.is_zero())
        acc += it->second * rising_factorial(psip + Scalar(nn), top - nn) * g[nn];
    }
    auto lead_co = operator_coeffs(params, ak, psip - Scalar(1) + Scalar(top));
    Scalar lead = lead_co.count(p - 1) ? lead_co[p - 1] : Scalar(0);
    bool lead_zero = lead.exact() ? lead.is_zero()
                                  : std::abs(lead.cx()) < 1e-300;
    if (lead_zero)
      throw DegenerateRecurrence("g_recurrence_n: leading coefficient vanishes at step " +
                                 std::to_string(top));
    g.push_back(-acc / lead);
  }
  g.resize(N + 1, Scalar(0));
  return make_table(params, k, std::move(g), "recurrence_n");
}

namespace {

// table for the anchor sitting at the last position of ps.a
std::vector<Scalar> rec_p_values(const ParamSet& ps, int N, int inner_k) {
  const int p = ps.p();
  if (p == 1) {
    std::vector<Scalar> vals(N + 1, Scalar(0));
    vals[0] = Scalar(1);
    return vals;
  }
  ParamSet lower;
  lower.a.assign(ps.a.begin(), ps.a.end() - 1);
  lower.b.assign(ps.b.begin(), ps.b.end() - 1);
  int kk = std::min(inner_k, p - 1);
  std::vector<Scalar> sub =
      rec_p_values(lower.with_swapped_a(kk, p - 1), N, inner_k);
  const Scalar ak = lower.a[kk - 1];
  const Scalar psim1 = ps.psi(p - 1);
  std::vector<Scalar> out;
  out.reserve(N + 1);
  for (int n = 0; n <= N; ++n) {
    Scalar s(0);
    for (int j = 0; j <= n; ++j)
      s += rising_factorial(ps.b[p - 1] - ak, n - j) / factorial_scalar(n - j) *
           rising_factorial(psim1 + Scalar(j), n - j) * sub[j];
    out.push_back(s);
  }
  return out;
}

}  // namespace

CoeffTable g_recurrence_p(const ParamSet& params, int k, int N, int inner_k) {
  if (k < 1 || k > params.p()) throw Error("g_recurrence_p: anchor out of range");
  ParamSet ps = params.with_swapped_a(k, params.p());
  return make_table(params, k, rec_p_values(ps, N, inner_k), "recurrence_p");
}

CoeffTable g_bernoulli(const ParamSet& params, int k, int N, BernoulliForm form) {
  const int p = params.p();
  if (k < 1 || k > p) throw Error("g_bernoulli: anchor out of range");
  const Scalar psip = params.psi_p();
  const Scalar ak = params.a[k - 1];
  LVariant variant = (form == BernoulliForm::Psi) ? LVariant::plain()
                                                  : LVariant::tilde_k(k);
  std::vector<Scalar> l = l_sequence(params, N, variant);
  std::vector<Scalar> vals;
  vals.reserve(N + 1);
  for (int n = 0; n <= N; ++n) {
    Scalar s(0);
    for (int r = 0; r <= n; ++r) {
      Scalar sign = ((n - r) % 2 == 0) ? Scalar(1) : Scalar(-1);
      if (form == BernoulliForm::Psi) {
        s += sign * rising_factorial(psip + Scalar(r), n - r) /
             factorial_scalar(n - r) * l[r] *
             gen_bernoulli(Scalar(n) + psip, n - r, Scalar(1) - ak);
      } else {
        s += sign * rising_factorial(Scalar(r + 1), n - r) /
             factorial_scalar(n - r) * l[r] *
             gen_bernoulli(Scalar(n + 1), n - r, Scalar(2) - ak - psip);
      }
    }
    vals.push_back(s);
  }
  return make_table(params, k, std::move(vals),
                    form == BernoulliForm::Psi ? "bernoulli_psi" : "bernoulli_tilde");
}

CoeffTable g_connect(const ParamSet& params, int k, int l,
                     const CoeffTable& table_l, int N) {
  if (k == l) throw Error("g_connect: k and l must differ");
  if (table_l.N() < N) throw Error("g_connect: source table too short");
  const Scalar psip = params.psi_p();
  const Scalar diff = params.a[k - 1] - params.a[l - 1];
  std::vector<Scalar> vals;
  vals.reserve(N + 1);
  for (int n = 0; n <= N; ++n) {
    Scalar s(0);
    for (int j = 0; j <= n; ++j)
      s += rising_factorial(diff, n - j) / factorial_scalar(n - j) *
           rising_factorial(psip + Scalar(j), n - j) * table_l.values[j];
    vals.push_back(s);
  }
  return make_table(params, k, std::move(vals), "connect");
}

Scalar g_closed_small_n(const ParamSet& params, int n) {
  const int p = params.p();
  if (n < 0 || n > 3) throw Error("g_closed_small_n: only n <= 3");
  std::vector<Scalar> psis(p + 1);
  for (int m = 0; m <= p; ++m) psis[m] = params.psi(m);
  auto bma = [&](int m) { return params.b[m] - params.a[m - 1]; };  // b_{m+1}-a_m
  if (n == 0) return Scalar(1);
  if (n == 1) {
    Scalar t(0);
    for (int m = 1; m < p; ++m) t += bma(m) * psis[m];
    return t;
  }
  if (n == 2) {
    Scalar t(0);
    for (int m = 1; m < p; ++m)
      t += rising_factorial(bma(m), 2) * rising_factorial(psis[m], 2);
    t /= Scalar(2);
    for (int k = 2; k < p; ++k) {
      Scalar inner(0);
      for (int m = 1; m < k; ++m) inner += bma(m) * psis[m];
      t += bma(k) * (psis[k] + Scalar(1)) * inner;
    }
    return t;
  }
  // n == 3
  Scalar t(0);
  for (int m = 1; m < p; ++m)
    t += rising_factorial(bma(m), 3) * rising_factorial(psis[m], 3);
  t /= Scalar(6);
  {
    Scalar acc(0);
    for (int k = 2; k < p; ++k) {
      Scalar inner(0);
      for (int m = 1; m < k; ++m)
        inner += rising_factorial(bma(m), 2) * rising_factorial(psis[m], 2);
      acc += bma(k) * (psis[k] + Scalar(2)) * inner;
    }
    t += acc / Scalar(2);
  }
  {
    Scalar acc(0);
    for (int k = 2; k < p; ++k) {
      Scalar inner(0);
      for (int m = 1; m < k; ++m) inner += bma(m) * psis[m];
      acc += rising_factorial(psis[k] + Scalar(1), 2) *
             rising_factorial(bma(k), 2) * inner;
    }
    t += acc / Scalar(2);
  }
  for (int nn = 3; nn < p; ++nn) {
    Scalar mid(0);
    for (int k = 2; k < nn; ++k) {
      Scalar inner(0);
      for (int m = 1; m < k; ++m) inner += bma(m) * psis[m];
      mid += bma(k) * (psis[k] + Scalar(1)) * inner;
    }
    t += bma(nn) * (psis[nn] + Scalar(2)) * mid;
  }
  return t;
}

namespace {

// terminating pFq(-n, num; den; 1), summed exactly over n+1 terms
Scalar terminating_pfq1(int n, const std::vector<Scalar>& num,
                        const std::vector<Scalar>& den) {
  Scalar s(0);
  for (int j = 0; j <= n; ++j) {
    Scalar t = rising_factorial(Scalar(-n), j);
    for (const auto& u : num) t *= rising_factorial(u, j);
    for (const auto& v : den) {
      Scalar d = rising_factorial(v, j);
      if (d.exact() ? d.is_zero() : std::abs(d.cx()) == 0.0)
        throw PoleError("terminating series: lower parameter pole");
      t /= d;
    }
    s += t / factorial_scalar(j);
  }
  return s;
}

}  // namespace

Scalar g_closed_small_p(const ParamSet& params, int s, int n) {
  const int p = params.p();
  if (s < 1 || s > p) throw Error("g_closed_small_p: index out of range");
  const Scalar as = params.a[s - 1];
  if (p == 2) {
    return rising_factorial(params.b[0] - params.a[2 - s], n) *
           rising_factorial(params.b[1] - params.a[2 - s], n) /
           factorial_scalar(n);
  }
  if (p == 3) {
    auto ai = params.a_without(s);
    Scalar u = params.psi_p() - params.b[1] + as;
    Scalar v = params.psi_p() - params.b[2] + as;
    return rising_factorial(u, n) * rising_factorial(v, n) / factorial_scalar(n) *
           terminating_pfq1(n, {params.b[0] - ai[0], params.b[0] - ai[1]}, {u, v});
  }
  if (p == 4) {
    auto ai = params.a_without(s);
    Scalar u = params.psi_p() - params.b[2] + as;
    Scalar v = params.psi_p() - params.b[3] + as;
    Scalar x = params.b[0] + params.b[1] - ai[0] - ai[1];
    Scalar y = params.b[0] + params.b[1] - ai[0] - ai[2];
    Scalar tot(0);
    for (int k = 0; k <= n; ++k) {
      Scalar uk = rising_factorial(u, k), vk = rising_factorial(v, k);
      if ((uk.exact() && uk.is_zero()) || (vk.exact() && vk.is_zero()) ||
          (!uk.exact() && uk.cx() == Complex(0.0)) ||
          (!vk.exact() && vk.cx() == Complex(0.0)))
        throw PoleError("g_closed_small_p: denominator Pochhammer vanishes");
      Scalar t = rising_factorial(Scalar(-n), k) * rising_factorial(x, k) *
                 rising_factorial(y, k) / (uk * vk);
      t /= factorial_scalar(k);  // the 1/k! is required for cross-method agreement
      t *= terminating_pfq1(
          k, {params.b[0] - ai[0], params.b[1] - ai[0]}, {x, y});
      tot += t;
    }
    return rising_factorial(u, n) * rising_factorial(v, n) /
           factorial_scalar(n) * tot;
  }
  throw UnsupportedOrder("g_closed_small_p: closed forms exist for p in {2,3,4}");
}

Scalar F_symmetric(const ParamSet& params, int m, int k) {
  const Scalar psip = params.psi_p();
  CoeffTable g = g_young(params, k, m);
  Scalar s(0);
  for (int j = 0; j <= m; ++j) {
    Scalar sign = (j % 2 == 0) ? Scalar(1) : Scalar(-1);
    s += sign / factorial_scalar(j) *
         falling_factorial(params.a[k - 1], j) *
         falling_factorial(psip + Scalar(m - 1), j) * g.values[m - j];
  }
  return s;
}

}  // namespace norlund
