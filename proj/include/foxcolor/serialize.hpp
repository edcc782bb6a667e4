#pragma once

#include "foxcolor/coloring.hpp"
#include "foxcolor/diagram.hpp"
#include "foxcolor/linalg.hpp"
#include "foxcolor/orbits.hpp"
#include "json.hpp"

namespace foxcolor {

using Json = nlohmann::json;

/// JSON number when the value fits in 64 bits, decimal string otherwise.
Json integer_json(const Integer& value);
Integer integer_from_json(const Json& j);

/// {"crossings": [[a,b,c,d], ...]}
Json pd_json(const PdCode& pd);
PdCode pd_from_json(const Json& j);

/// {"rows": r, "cols": c, "entries": [[...], ...]}
Json matrix_json(const IntegerMatrix& m);
IntegerMatrix matrix_from_json(const Json& j);

/// {"modulus": m, "values": {"<arc id>": residue, ...}}
Json coloring_json(const PlanarDiagram& d, const Coloring& c);
Coloring coloring_from_json(const PlanarDiagram& d, const Json& j);

/// {"knot", "p", "nullity", "aut_classes", "inn_classes", "predicted_aut",
///  "predicted_inn", "orbit_sizes", "invariant_across_moves"} plus the Inn
/// orbit sizes, per-variant counts and the overall verdict.
Json report_json(const VerifyReport& r);

}  // namespace foxcolor
