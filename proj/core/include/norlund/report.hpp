#pragma once
#include <optional>
#include <string>

#include <json.hpp>

#include "norlund/scalar.hpp"

namespace norlund {

// Outcome of checking one identity at one parameter point. residuals are
// absolute and scale-normalized (|LHS-RHS| / max(1, largest term magnitude)).
struct IdentityReport {
  std::string identity_id;
  long long seed = 0;
  int trial = 0;
  nlohmann::json params = nlohmann::json::object();
  Scalar lhs;
  Scalar rhs;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double tolerance = 0.0;
  std::string verdict;  // "pass", "fail" or "skipped"
  std::optional<std::string> skipped_reason;
};

// Fill residuals and verdict from lhs/rhs; scale is the magnitude of the
// largest contributing term (>= 1 after clamping).
IdentityReport make_report(std::string id, nlohmann::json params,
                           const Scalar& lhs, const Scalar& rhs, double scale,
                           double tolerance);

IdentityReport make_skipped(std::string id, nlohmann::json params,
                            std::string reason, double tolerance);

}  // namespace norlund
