#pragma once

#include <json.hpp>

#include "sharp/commutant.hpp"
#include "sharp/hs.hpp"
#include "sharp/lattice.hpp"

namespace sharp {

using Json = nlohmann::json;

// Malformed documents raise Error(ParseError).

Json to_json(const Gaussian& g);
Json to_json(const Matrix& m);
Json to_json(const HSDecomposition& d);
Json to_json(const JordanSpec& spec);
Json to_json(const CommutantElement& e);
Json to_json(const DownsetDescriptor& d);

/// Exact scalar from "p/q" strings or JSON numbers (numbers are taken at
/// their exact binary value).
Rational rational_from_json(const Json& j);
Gaussian gaussian_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
HSDecomposition hs_from_json(const Json& j);
JordanSpec spec_from_json(const Json& j);
CommutantElement commutant_from_json(const Json& j);

}  // namespace sharp
