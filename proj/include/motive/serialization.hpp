#pragma once

#include "json.hpp"

#include "motive/completed_series.hpp"
#include "motive/laurent_polynomial.hpp"
#include "motive/motive_class.hpp"

namespace motive {

// {"terms": [[exponent, "coefficient"], ...]} in descending exponent order.
// Coefficients travel as decimal strings.
nlohmann::json to_json(const LaurentPolynomial &p);
LaurentPolynomial laurent_from_json(const nlohmann::json &j);

// Adds {"denominator": [[d, m], ...]} ascending in d.
nlohmann::json to_json(const MotiveClass &c);
MotiveClass motive_from_json(const nlohmann::json &j);

// {"terms": ..., "depth": m}
nlohmann::json to_json(const CompletedSeries &s);

} // namespace motive
