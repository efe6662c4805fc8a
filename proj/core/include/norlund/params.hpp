#pragma once
#include <optional>
#include <string>
#include <vector>

#include "norlund/scalar.hpp"

namespace norlund {

// Upper/lower parameter vectors of equal length p, with the partial sums
// psi_m = sum_{i<=m}(b_i - a_i) available on demand. Indices k, s, m are
// 1-based everywhere, matching the usual notation.
struct ParamSet {
  std::vector<Scalar> a;
  std::vector<Scalar> b;

  ParamSet() = default;
  ParamSet(std::vector<Scalar> a_, std::vector<Scalar> b_);

  int p() const { return static_cast<int>(a.size()); }

  Scalar psi(int m) const;            // psi_m, 1 <= m <= p
  Scalar psi_p() const { return psi(p()); }

  bool exact() const;                 // all entries rational
  ParamSet promoted() const;          // float copy

  // Exchange the roles of a_k and a_l (returns a copy; b unchanged).
  ParamSet with_swapped_a(int k, int l) const;

  // a with the k-th (and optionally s-th) entry removed, order preserved.
  std::vector<Scalar> a_without(int k) const;
  std::vector<Scalar> a_without(int k, int s) const;
};

struct Truncation {
  long long terms_used = 0;
  double last_term = 0.0;  // magnitude of the last term taken
};

// A coefficient sequence for n = 0..N with provenance.
struct CoeffTable {
  char kind = 'g';                   // 'g', 'f', 'h' or 'D'
  int p = 0;
  int k = 0;                         // anchor index; 0 when unused
  int s = 0;                         // second index for D; 0 when unused
  std::vector<Scalar> values;        // values[n]
  std::string method;
  std::string mode;                  // "exact" or "float"
  std::optional<Truncation> truncation;

  int N() const { return static_cast<int>(values.size()) - 1; }
};

}  // namespace norlund
