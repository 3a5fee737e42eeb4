#pragma once

// JSON (de)serialization for BiasPolynomial.  The wire schema is
//   {"terms": [{"coeff": <number>, "alice": "<word>", "bob": "<word>"}, ...]}
// with words over {u, v} and "" for the identity.

#include <string>

#include "biquad/word.hpp"

namespace biquad {

// Parses the schema above.  Malformed JSON raises InputError with a
// "line L, column C" diagnostic; schema violations (missing keys, wrong
// types, bad letters, non-finite coefficients) raise InputError too.
BiasPolynomial parse_bias_polynomial(const std::string& json_text);

// Emits the canonicalized polynomial in the same schema, numbers at 17
// significant digits, deterministic field and term order.
std::string serialize_bias_polynomial(const BiasPolynomial& p);

} // namespace biquad
