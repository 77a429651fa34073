#pragma once

#include <nlohmann/json.hpp>

#include "invtrace/polynomial.hpp"
#include "invtrace/upoly.hpp"

namespace invtrace {

using Json = nlohmann::ordered_json;

// {"nvars": n, "terms": [[[e1..en], "p/q"], ...]} with exponent vectors in
// ascending lexicographic order.
Json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// Coefficients in ascending degree as "p/q" strings.
Json upoly_to_json(const UPoly& p);
UPoly upoly_from_json(const Json& j);

}  // namespace invtrace
