#pragma once

// JSON forms of the core values. Elements are [a, b] pairs of decimal
// strings so that arbitrary-precision coefficients survive the round trip.

#include "json.hpp"

#include "hecke/ideals.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

nlohmann::ordered_json to_json(const RingElt& x);
RingElt element_from_json(const nlohmann::ordered_json& j);

/// [[a, b], [c, d]] of element pairs.
nlohmann::ordered_json to_json(const GMatrix& m);
GMatrix matrix_from_json(const nlohmann::ordered_json& j);

/// {unit: {sign, exponent}, factors: [{generator, p, splitting, multiplicity}]}
nlohmann::ordered_json to_json(const Factorization& f);

}  // namespace hecke
