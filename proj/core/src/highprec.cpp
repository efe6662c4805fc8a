#include "highprec.hpp"

#include "norlund/errors.hpp"

namespace norlund::hp {

SumResult levin_sum(const std::function<HC(int)>& term, int maxterms,
                    double tol) {
  // Explicit Levin u-transform (beta = 1):
  //   L_k = sum_j (-1)^j C(k,j) c_{k,j} s_j/w_j  /  sum_j (-1)^j C(k,j) c_{k,j}/w_j,
  // with w_j = (1+j) a_j and c_{k,j} = ((1+j)/(1+k))^{k-1}.
  SumResult res;
  std::vector<HC> s, winv;  // partial sums and 1/w_j
  HC acc(0);
  HC prev(0);
  bool have_prev = false;
  int stagn = 0;
  for (int k = 0; k < maxterms; ++k) {
    HC a = term(k);
    res.terms = k + 1;
    res.last_term = static_cast<double>(abs(a));
    if (a == HC(0)) {
      // A zero term usually means the series terminates, in which case the
      // accumulated partial sum is exact. An isolated zero (next term
      // nonzero) cannot be fed to the transform; keep the last estimate.
      if (have_prev && term(k + 1) != HC(0)) {
        res.value = prev;
        res.converged = false;
      } else {
        res.value = acc;
        res.converged = true;
      }
      return res;
    }
    acc += a;
    s.push_back(acc);
    winv.push_back(HC(1) / (HC(1 + k) * a));
    // evaluate L_k
    HC num(0), den(0);
    HR binom(1);
    for (int j = 0; j <= k; ++j) {
      HR c = (k >= 1) ? pow(HR(1 + j) / HR(1 + k), k - 1) : HR(1);
      HC w = binom * c * winv[j];
      if (j % 2 == 1) w = -w;
      num += w * s[j];
      den += w;
      binom = binom * HR(k - j) / HR(j + 1);
    }
    if (den == HC(0)) continue;
    HC val = num / den;
    if (have_prev) {
      double scale = std::max(1.0, static_cast<double>(abs(val)));
      res.est_err = static_cast<double>(abs(val - prev));
      if (res.est_err <= tol * scale) {
        if (++stagn >= 2) {
          res.value = val;
          res.converged = true;
          return res;
        }
      } else {
        stagn = 0;
      }
    }
    prev = val;
    have_prev = true;
  }
  res.value = have_prev ? prev : acc;
  res.converged = false;
  return res;
}

SumResult direct_sum(const std::function<HC(int)>& term, long long maxterms,
                     double tol) {
  SumResult res;
  HC acc(0);
  int consec = 0;
  for (long long j = 0; j < maxterms; ++j) {
    HC a = term(static_cast<int>(j));
    acc += a;
    res.terms = static_cast<int>(j + 1);
    res.last_term = static_cast<double>(abs(a));
    double scale = std::max(1.0, static_cast<double>(abs(acc)));
    if (res.last_term <= tol * scale) {
      if (++consec >= 3) {
        res.value = acc;
        res.converged = true;
        return res;
      }
    } else {
      consec = 0;
    }
  }
  res.value = acc;
  res.converged = false;
  return res;
}

HC f_term(int j, const std::vector<HC>& num, const std::vector<HC>& den) {
  HC s(0);
  HC t(1);  // running term, updated by the ratio recurrence
  for (int k = 0; k <= j; ++k) {
    s += t;
    if (k == j) break;
    HC ratio = HC(k - j);  // (-j + k)
    for (const auto& u : num) ratio *= u + HC(k);
    for (const auto& v : den) {
      HC d = v + HC(k);
      if (d == HC(0))
        throw PoleError("terminating series: lower parameter hits a nonpositive integer");
      ratio /= d;
    }
    ratio /= HC(k + 1);
    t *= ratio;
  }
  return s;
}

HC f_term_z(int j, const std::vector<HC>& num, const std::vector<HC>& den,
            const HC& z) {
  HC s(0);
  HC t(1);
  for (int k = 0; k <= j; ++k) {
    s += t;
    if (k == j) break;
    HC ratio = HC(k - j) * z;
    for (const auto& u : num) ratio *= u + HC(k);
    for (const auto& v : den) {
      HC d = v + HC(k);
      if (d == HC(0))
        throw PoleError("terminating series: lower parameter hits a nonpositive integer");
      ratio /= d;
    }
    ratio /= HC(k + 1);
    t *= ratio;
  }
  return s;
}

SumResult pfq_at_1(const std::vector<HC>& num, const std::vector<HC>& den,
                   int maxterms) {
  // term(k) computed by a running product to avoid re-walking Pochhammers
  auto state = std::make_shared<std::pair<int, HC>>(0, HC(1));
  auto term = [=](int k) -> HC {
    auto& [next, t] = *state;
    if (k < next) {  // restart (should not happen; levin_sum is sequential)
      *state = {0, HC(1)};
    }
    while (state->first < k) {
      int i = state->first;
      HC ratio(1);
      for (const auto& u : num) ratio *= u + HC(i);
      for (const auto& v : den) {
        HC d = v + HC(i);
        if (d == HC(0)) throw PoleError("series at unit argument: lower parameter pole");
        ratio /= d;
      }
      ratio /= HC(i + 1);
      state->second *= ratio;
      state->first += 1;
    }
    return state->second;
  };
  return levin_sum(term, maxterms);
}

}  // namespace norlund::hp
