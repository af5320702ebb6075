#include "qkoh/serialize.hpp"

#include <sstream>
#include <stdexcept>

namespace qkoh {

Json poly_to_json(const IntPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(c.get_str());
  return out;
}

IntPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial must be a JSON array");
  std::vector<Integer> coeffs;
  coeffs.reserve(j.size());
  for (const auto& item : j) {
    if (item.is_number_integer()) {
      coeffs.emplace_back(std::to_string(item.get<long long>()));
      continue;
    }
    if (!item.is_string()) throw std::invalid_argument("coefficient must be a decimal string");
    const auto& s = item.get_ref<const std::string&>();
    Integer c;
    if (s.empty() || c.set_str(s, 10) != 0) throw std::invalid_argument("bad coefficient '" + s + "'");
    coeffs.push_back(std::move(c));
  }
  return IntPoly(std::move(coeffs));
}

std::string poly_to_text(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Integer& c = p[i];
    if (c == 0) continue;
    const bool negative = sgn(c) < 0;
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const Integer mag = abs(c);
    if (i == 0) {
      os << mag.get_str();
      continue;
    }
    if (mag != 1) os << mag.get_str();
    os << 'q';
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

Json koh_term_to_json(const KohTerm& t) {
  Json factors = Json::array();
  for (const auto& f : t.factors) factors.push_back({{"top", f.top}, {"bottom", f.bottom}});
  return {{"partition", t.lambda.parts()},
          {"exponent", t.leading_exponent},
          {"factors", std::move(factors)},
          {"poly", poly_to_json(t.poly)}};
}

Json koh_terms_to_json(const std::vector<KohTerm>& terms) {
  Json out = Json::array();
  for (const auto& t : terms) out.push_back(koh_term_to_json(t));
  return out;
}

std::string prediction_name(Prediction p) {
  switch (p) {
    case Prediction::Holds:
      return "holds";
    case Prediction::Exception:
      return "exception";
    case Prediction::NoPrediction:
      return "none";
  }
  return "none";
}

Prediction prediction_from_name(const std::string& name) {
  if (name == "holds") return Prediction::Holds;
  if (name == "exception") return Prediction::Exception;
  if (name == "none") return Prediction::NoPrediction;
  throw std::invalid_argument("unknown prediction '" + name + "'");
}

namespace {

Json optional_int(const std::optional<std::int64_t>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<std::int64_t> read_optional_int(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<std::int64_t>();
}

std::string csv_optional(const std::optional<std::int64_t>& v) { return v ? std::to_string(*v) : ""; }

const char* csv_bool(bool b) { return b ? "true" : "false"; }

}  // namespace

Json report_to_json(const CheckReport& r) {
  return {
      {"k", r.spec.k},
      {"m", r.spec.m},
      {"b", r.spec.b},
      {"shift_exponent", r.spec.shift_exponent},
      {"center_twice", r.spec.center_twice},
      {"nonnegative", r.nonnegative},
      {"unimodal", r.unimodal},
      {"symmetric", r.symmetric},
      {"first_negative_degree", optional_int(r.first_negative_degree)},
      {"first_violation_degree", optional_int(r.first_unimodality_violation)},
      {"predicted_exception", r.predicted_exception()},
      {"prediction", prediction_name(r.prediction.verdict)},
      {"reason", r.prediction.reason},
      {"agrees", r.agrees_with_prediction},
  };
}

CheckReport report_from_json(const Json& j) {
  CheckReport r;
  r.spec.k = j.at("k").get<std::int64_t>();
  r.spec.m = j.at("m").get<std::int64_t>();
  r.spec.b = j.at("b").get<std::int64_t>();
  r.spec.shift_exponent = j.at("shift_exponent").get<std::int64_t>();
  r.spec.center_twice = j.at("center_twice").get<std::int64_t>();
  r.nonnegative = j.at("nonnegative").get<bool>();
  r.unimodal = j.at("unimodal").get<bool>();
  r.symmetric = j.at("symmetric").get<bool>();
  r.first_negative_degree = read_optional_int(j.at("first_negative_degree"));
  r.first_unimodality_violation = read_optional_int(j.at("first_violation_degree"));
  r.prediction.verdict = prediction_from_name(j.at("prediction").get<std::string>());
  r.prediction.reason = j.at("reason").get<std::string>();
  r.agrees_with_prediction = j.at("agrees").get<bool>();
  if (j.at("predicted_exception").get<bool>() != r.predicted_exception()) {
    throw std::invalid_argument("report: predicted_exception disagrees with prediction");
  }
  return r;
}

Json reports_to_json(const std::vector<CheckReport>& reports) {
  Json out = Json::array();
  for (const auto& r : reports) out.push_back(report_to_json(r));
  return out;
}

const char* const kCsvHeader =
    "k,m,b,shift_exponent,nonnegative,unimodal,first_negative_degree,first_violation_degree,"
    "predicted_exception,agrees";

std::string report_to_csv_row(const CheckReport& r) {
  std::ostringstream os;
  const char* predicted = r.prediction.verdict == Prediction::NoPrediction ? "none"
                                                                            : csv_bool(r.predicted_exception());
  os << r.spec.k << ',' << r.spec.m << ',' << r.spec.b << ',' << r.spec.shift_exponent << ','
     << csv_bool(r.nonnegative) << ',' << csv_bool(r.unimodal) << ',' << csv_optional(r.first_negative_degree)
     << ',' << csv_optional(r.first_unimodality_violation) << ',' << predicted << ','
     << csv_bool(r.agrees_with_prediction);
  return os.str();
}

std::string reports_to_csv(const std::vector<CheckReport>& reports) {
  std::string out = kCsvHeader;
  out += '\n';
  for (const auto& r : reports) {
    out += report_to_csv_row(r);
    out += '\n';
  }
  return out;
}

std::string report_to_text(const CheckReport& r) {
  std::ostringstream os;
  os << "f(" << r.spec.k << "," << r.spec.m << "," << r.spec.b << ") shift=" << r.spec.shift_exponent
     << " nonnegative=" << csv_bool(r.nonnegative);
  if (r.first_negative_degree) os << "@" << *r.first_negative_degree;
  os << " unimodal=" << csv_bool(r.unimodal);
  if (r.first_unimodality_violation) os << "@" << *r.first_unimodality_violation;
  os << " symmetric=" << csv_bool(r.symmetric) << " predicted=" << prediction_name(r.prediction.verdict);
  if (!r.prediction.reason.empty()) os << " (" << r.prediction.reason << ")";
  os << (r.agrees_with_prediction ? " agrees" : " DISAGREES");
  return os.str();
}

}  // namespace qkoh
