#ifndef CNP_JSON_IO_HPP
#define CNP_JSON_IO_HPP

#include <json.hpp>

#include "cnp/pieri.hpp"

namespace cnp {

using Json = nlohmann::ordered_json;

// {"vars": [...], "num": [{"exp": [...], "coeff": "p/q"}], "den": [...]},
// terms in decreasing grlex order
Json to_json(const GenRat& g);
GenRat genrat_from_json(const Json& j);

// {"n": 2, "terms": [{"exp": [1,-1], "coeff": <GenRat>}]}
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

// {"basis": "P", "n": 2, "coeffs": [{"lambda": [2,1], "value": <GenRat>}]}
Json to_json(const BasisExpansion& e);
BasisExpansion expansion_from_json(const Json& j);

// {"n", "lam1", "lam2", "terms": [{"i", "j", "coeff"}]}
Json to_json(const PieriExpansion& e);
PieriExpansion pieri_from_json(const Json& j);

}  // namespace cnp

#endif
