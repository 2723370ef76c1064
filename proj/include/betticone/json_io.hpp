#pragma once

#include <json.hpp>

#include "betticone/cone2.hpp"
#include "betticone/diagram.hpp"
#include "betticone/multipoly.hpp"
#include "betticone/realize2.hpp"

namespace betticone {

// All numbers are serialized as exact fraction strings ("3/2", "4").
// Shapes:
//   poly          {"nvars": n, "terms": [{"exp": [..], "coef": "c"}, ..]}
//   diagram       {"nvars": n, "length": L,
//                  "entries": [{"h": i, "deg": [..], "mult": "k"}, ..]}
//   decomposition {"p":, "q":, "m":,
//                  "terms": [{"ideal": [[x,y],..], "shift": c,
//                             "gamma": "g"}, ..]}
//   matrix        {"rows": [..degs..], "cols": [..degs..],
//                  "entries": [{"i":, "j":, "coef": "c",
//                               "mono": [ex,ey]}, ..]}
// Term and entry orders are the containers' canonical orders, so output is
// deterministic.

nlohmann::json to_json(const LaurentPoly& f);
LaurentPoly poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BettiDiagram& d);
BettiDiagram diagram_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Decomposition& dec);
Decomposition decomposition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const GradedMatrix& m);
GradedMatrix matrix_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RealizationCertificate& c);

} // namespace betticone
