#pragma once

// JSON, CSV and text renderings of qkoh values. Coefficients are always
// written as decimal strings since they outgrow 64 bits quickly.

#include <json.hpp>

#include <string>
#include <vector>

#include "qkoh/conjecture.hpp"
#include "qkoh/int_poly.hpp"
#include "qkoh/koh.hpp"

namespace qkoh {

using Json = nlohmann::json;

/// ["c0", "c1", ...], lowest degree first; [] for zero.
Json poly_to_json(const IntPoly& p);
/// Inverse of poly_to_json. Integer JSON numbers are accepted as well.
/// Throws std::invalid_argument on anything else.
IntPoly poly_from_json(const Json& j);

/// "1 + q + 2q^2 - q^5"; "0" for the zero polynomial.
std::string poly_to_text(const IntPoly& p);

Json koh_term_to_json(const KohTerm& t);
Json koh_terms_to_json(const std::vector<KohTerm>& terms);

std::string prediction_name(Prediction p);
Prediction prediction_from_name(const std::string& name);

Json report_to_json(const CheckReport& r);
CheckReport report_from_json(const Json& j);
Json reports_to_json(const std::vector<CheckReport>& reports);

extern const char* const kCsvHeader;
std::string report_to_csv_row(const CheckReport& r);
std::string reports_to_csv(const std::vector<CheckReport>& reports);

std::string report_to_text(const CheckReport& r);

}  // namespace qkoh
