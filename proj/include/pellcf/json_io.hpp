#pragma once

// JSON forms of the library's values. Polynomials travel in the text syntax
// of Poly::parse, rationals as "num/den" strings (den omitted when 1).
// Every *_from_json inverts the matching *_to_json exactly.

#include <json.hpp>

#include "pellcf/cert.hpp"
#include "pellcf/cfrac.hpp"
#include "pellcf/factor.hpp"
#include "pellcf/quadext.hpp"
#include "pellcf/units.hpp"

namespace pellcf {

using Json = nlohmann::ordered_json;

Json rat_to_json(const Rat& r);
Rat rat_from_json(const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"k": ..., "rational": U, "sqrt_coeff": V, "text": ...} for U + sqrt(k) V.
Json qpoly_to_json(const QPoly& p);
QPoly qpoly_from_json(const Json& j);

Json factorization_to_json(const Factorization& f);
Factorization factorization_from_json(const Json& j);

/// {"D","a","b","k","m","g","r","kappa"}
Json cert_to_json(const UnitCert& c);
UnitCert cert_from_json(const Json& j);

/// {"D","f","a","b","k","m"}
Json identity_to_json(const IntegralIdentity& id);
IntegralIdentity identity_from_json(const Json& j);

/// Array of {"h","P","Q","a"}.
Json tableau_to_json(const CFExpansion& e);
std::vector<CFLine> tableau_from_json(const Json& j);

Json split_to_json(const UnitSplit& s);

}  // namespace pellcf
