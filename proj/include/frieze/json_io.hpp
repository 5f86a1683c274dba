#pragma once

#include <json.hpp>

#include "frieze/invariants.hpp"
#include "frieze/orbit.hpp"
#include "frieze/quiver.hpp"
#include "frieze/rational_function.hpp"
#include "frieze/variety.hpp"

namespace frieze {

using json = nlohmann::ordered_json;

// {"nvars": n, "terms": [{"exp": [e1..en], "coef": "p/q"}, ...]},
// terms sorted graded-lex descending.
json to_json(const LaurentPolynomial& p);
LaurentPolynomial laurent_from_json(const json& j);

// {"num": <poly>, "den": <poly>}
json to_json(const RationalFunction& f);
RationalFunction ratfunc_from_json(const json& j);

// {"n": 3, "arrows": [[from, to, multiplicity], ...]}, vertices 1-based.
json to_json(const Quiver& q);
LoadedQuiver quiver_from_json(const json& j);

json to_json(const Point& p);  // ["1", "5/2", ...]
Point point_from_json(const json& j);

json to_json(const VanishingSpace& space);
json to_json(const ComponentDecomposition& decomposition);
json to_json(const InvariantCertificate& cert);
json to_json(const QuiverClass& cls);

}  // namespace frieze
