#pragma once

#include <string>

#include "json.hpp"
#include "valleypaths/bijections.hpp"
#include "valleypaths/path.hpp"
#include "valleypaths/polynomial.hpp"
#include "valleypaths/series.hpp"
#include "valleypaths/weights.hpp"

namespace valleypaths {

// Insertion-ordered so emitted documents keep a stable, readable key order.
using Json = nlohmann::ordered_json;

// [{"coeff": "p/q", "monomial": {"a": 3}}, ...]; readers also accept the text form.
Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);

// {"order": N, "coeffs": [...]}
Json to_json(const TruncatedSeries& s);
TruncatedSeries series_from_json(const Json& j);

// {"family": "dyck", "steps": "UUDD"}
Json to_json(const Path& p);
Path path_from_json(const Json& j);

// {"alpha": [...], "beta": [...], "gamma": [...]} plus "beta_denominator" when it is not 1.
Json to_json(const WeightSpec& spec);
WeightSpec spec_from_json(const Json& j);

Json to_json(const DecoratedVPath& d);
DecoratedVPath decorated_from_json(const Json& j);

// {"side": "src_4372", "parts": [{"k0": 8, "letters": "11h111h1h1h", "blocks": [3, 1, 2]}]}
Json to_json(const TauDecorated& d);
TauDecorated tau_from_json(const Json& j);

// Parses text, rethrowing nlohmann errors as ParseError.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);

}  // namespace valleypaths
