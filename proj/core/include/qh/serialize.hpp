#pragma once

#include "qh/complexity.hpp"
#include "qh/fci_analysis.hpp"
#include "qh/frobenius.hpp"
#include "qh/linalg.hpp"

#include <json.hpp>
#include <string>

namespace qh {

using Json = nlohmann::json;  // std::map backed: keys come out sorted

Json to_json(const Rational& x);
Rational rational_from_json(const Json& j);
Json to_json(const QLaurent& x);  // {"<exp>": "p/q"}
QLaurent laurent_from_json(const Json& j);
Json to_json(const RatVector& v);
Json to_json(const RatMatrix& m);
RatMatrix matrix_from_json(const Json& j);

Json element_to_json(const FrobeniusRing& r, const RingElement& x);  // {label: laurent}, zero terms omitted
RingElement element_from_json(const FrobeniusRing& r, const Json& j);
Json state_to_json(const FrobeniusRing& r, const ProjState& s);     // {label: "p/q"}

// full ring with sparse pairing [i, j, laurent] and structure [i, j, k, laurent]; round-trips exactly
Json ring_to_json(const FrobeniusRing& r);
FrobeniusRing ring_from_json(const Json& j);  // validates

Json handle_to_json(const FrobeniusRing& r, const HandleReport& h);
Json trajectory_to_json(const FrobeniusRing& r, const Trajectory& t);
Json limit_to_json(const FrobeniusRing& r, const LimitReport& l);
Json fci_to_json(const FciReport& f);

// "unit", "delta", "pt", a coordinate array "[1,0,\"1/2\"]" or an object {"label": "p/q"}
ProjState parse_state(const FrobeniusRing& r, const std::string& text);

}  // namespace qh
