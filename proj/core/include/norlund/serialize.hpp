#pragma once
#include <string>

#include <json.hpp>

#include "norlund/params.hpp"
#include "norlund/report.hpp"
#include "norlund/scalar.hpp"

namespace norlund {

// Wire formats: rationals as "num/den" (plain integer string when den = 1),
// complex values as [re, im]; used by the CLI and the report stream.

std::string scalar_to_string(const Scalar& v);  // "3/7" or "1.25-0.5i"
Scalar scalar_from_string(const std::string& text, bool exact);

nlohmann::json scalar_to_json(const Scalar& v);  // string (exact) or [re, im]

nlohmann::json coeff_table_to_json(const CoeffTable& table);
nlohmann::json param_set_to_json(const ParamSet& params);
nlohmann::json report_to_json(const IdentityReport& report);

}  // namespace norlund
