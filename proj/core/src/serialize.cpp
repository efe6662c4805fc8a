#include "norlund/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>

#include "norlund/errors.hpp"

namespace norlund {

namespace {

std::string double_repr(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

// real number: integer, decimal, scientific or "p/q"
double parse_real(const std::string& text) {
  if (text.empty()) throw Error("empty numeric literal");
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    double num = std::stod(text.substr(0, slash));
    double den = std::stod(text.substr(slash + 1));
    if (den == 0.0) throw Error("zero denominator in '" + text + "'");
    return num / den;
  }
  size_t pos = 0;
  double v = std::stod(text, &pos);
  if (pos != text.size()) throw Error("trailing characters in '" + text + "'");
  return v;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash != std::string::npos) {
    using boost::multiprecision::cpp_int;
    cpp_int num(text.substr(0, slash));
    cpp_int den(text.substr(slash + 1));
    if (den == 0) throw Error("zero denominator in '" + text + "'");
    return Rational(num, den);
  }
  auto dot = text.find('.');
  if (dot != std::string::npos) {
    using boost::multiprecision::cpp_int;
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    int frac = static_cast<int>(text.size() - dot - 1);
    // strip leading zeros so cpp_int does not read the string as octal
    bool neg = !digits.empty() && digits[0] == '-';
    std::string mag = neg ? digits.substr(1) : digits;
    size_t first = mag.find_first_not_of('0');
    mag = (first == std::string::npos) ? "0" : mag.substr(first);
    cpp_int num((neg && mag != "0" ? "-" : "") + mag);
    cpp_int den(1);
    for (int i = 0; i < frac; ++i) den *= 10;
    return Rational(num, den);
  }
  return Rational(boost::multiprecision::cpp_int(text));
}

}  // namespace

std::string scalar_to_string(const Scalar& v) {
  if (v.exact()) {
    std::ostringstream os;
    os << v.rat();
    return os.str();
  }
  Complex z = v.cx();
  if (z.imag() == 0.0) return double_repr(z.real());
  std::string s = double_repr(z.real());
  if (z.imag() >= 0.0 || std::isnan(z.imag())) s += "+";
  s += double_repr(z.imag());
  s += "i";
  return s;
}

Scalar scalar_from_string(const std::string& raw, bool exact) {
  std::string text;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  if (text.empty()) throw Error("empty numeric literal");
  if (exact) return Scalar(parse_rational(text));
  // complex form: "...i" with the imaginary part split at the last +/- that
  // is not a leading sign or part of an exponent
  if (text.back() == 'i' || text.back() == 'I') {
    std::string body = text.substr(0, text.size() - 1);
    size_t split = std::string::npos;
    for (size_t j = body.size(); j-- > 1;) {
      char c = body[j];
      if ((c == '+' || c == '-') && body[j - 1] != 'e' && body[j - 1] != 'E') {
        split = j;
        break;
      }
    }
    if (split == std::string::npos) {
      // purely imaginary: "2i", "-i", "i"
      if (body.empty() || body == "+" || body == "-")
        return Scalar(Complex(0.0, body == "-" ? -1.0 : 1.0));
      return Scalar(Complex(0.0, parse_real(body)));
    }
    std::string im = body.substr(split);
    if (im == "+" || im == "-") im += "1";
    return Scalar(Complex(parse_real(body.substr(0, split)), parse_real(im)));
  }
  return Scalar(Complex(parse_real(text), 0.0));
}

nlohmann::json scalar_to_json(const Scalar& v) {
  if (v.exact()) return scalar_to_string(v);
  Complex z = v.cx();
  return nlohmann::json::array({z.real(), z.imag()});
}

nlohmann::json coeff_table_to_json(const CoeffTable& table) {
  nlohmann::json j;
  j["kind"] = std::string(1, table.kind);
  j["p"] = table.p;
  j["index"] = table.k;
  if (table.s != 0) j["s"] = table.s;
  j["method"] = table.method;
  j["mode"] = table.mode;
  nlohmann::json vals = nlohmann::json::array();
  for (const auto& v : table.values) vals.push_back(scalar_to_string(v));
  j["values"] = vals;
  if (table.truncation) {
    j["truncation"] = {{"terms_used", table.truncation->terms_used},
                       {"last_term", table.truncation->last_term}};
  }
  return j;
}

nlohmann::json param_set_to_json(const ParamSet& params) {
  nlohmann::json a = nlohmann::json::array();
  nlohmann::json b = nlohmann::json::array();
  for (const auto& v : params.a) a.push_back(scalar_to_json(v));
  for (const auto& v : params.b) b.push_back(scalar_to_json(v));
  return nlohmann::json{{"a", a}, {"b", b}};
}

nlohmann::json report_to_json(const IdentityReport& r) {
  nlohmann::json j;
  j["identity_id"] = r.identity_id;
  j["seed"] = r.seed;
  j["trial"] = r.trial;
  j["params"] = r.params;
  j["lhs"] = nlohmann::json::array({r.lhs.cx().real(), r.lhs.cx().imag()});
  j["rhs"] = nlohmann::json::array({r.rhs.cx().real(), r.rhs.cx().imag()});
  j["abs_residual"] = r.abs_residual;
  j["rel_residual"] = r.rel_residual;
  j["tolerance"] = r.tolerance;
  j["verdict"] = r.verdict;
  if (r.skipped_reason) j["skipped_reason"] = *r.skipped_reason;
  return j;
}

IdentityReport make_report(std::string id, nlohmann::json params,
                           const Scalar& lhs, const Scalar& rhs, double scale,
                           double tolerance) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.params = std::move(params);
  r.lhs = lhs;
  r.rhs = rhs;
  if (lhs.exact() && rhs.exact()) {
    Rational diff = lhs.rat() - rhs.rat();
    r.abs_residual = std::abs(static_cast<double>(diff));
    r.rel_residual = diff.is_zero() ? 0.0 : r.abs_residual / std::max(1.0, scale);
  } else {
    r.abs_residual = std::abs(lhs.cx() - rhs.cx());
    r.rel_residual = r.abs_residual / std::max(1.0, scale);
  }
  r.tolerance = tolerance;
  r.verdict = (r.rel_residual <= tolerance) ? "pass" : "fail";
  return r;
}

IdentityReport make_skipped(std::string id, nlohmann::json params,
                            std::string reason, double tolerance) {
  IdentityReport r;
  r.identity_id = std::move(id);
  r.params = std::move(params);
  r.tolerance = tolerance;
  r.verdict = "skipped";
  r.skipped_reason = std::move(reason);
  return r;
}

}  // namespace norlund
