#pragma once

#include "rct/chow.hpp"
#include "rct/critical.hpp"
#include "rct/divisors.hpp"
#include "rct/magic_fan.hpp"
#include "rct/sparse_poly.hpp"
#include "rct/sturm.hpp"

#include "json.hpp"

namespace rct {

using Json = nlohmann::ordered_json;

/// Rationals travel as "p/q" strings; integers are also accepted on input.
Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

/// {"vars": [...], "terms": [{"coeff": "p/q", "exp": [...]}]}
Json poly_to_json(const SparsePoly& p);
/// Also accepts a plain expression string.
SparsePoly poly_from_json(const Json& j);

Json unipoly_to_json(const UniPoly& p, const std::string& var = "x");

/// {"N", "r", "d", "m", "form"}
Json mhform_to_json(const MHForm& F);
MHForm mhform_from_json(const Json& j);

/// {"n", "d", "normalized", "f"}; input needs only "n" and "f".
Json divisor_to_json(const Divisor& D);
Divisor divisor_from_json(const Json& j);

/// {"N", "points": [{"coords": [...], "mult": k}]}; "N" is optional on input.
Json cycle_to_json(const ZeroCycle& Z);
ZeroCycle cycle_from_json(const Json& j);
Json float_cycle_to_json(const FloatCycle& Z);

Json critical_set_to_json(const CriticalSet& cs);
Json membership_to_json(const MembershipReport& rep, bool verbose);
Json gcheck_to_json(const GCheck& g);
Json margin_to_json(const Margin& m);
Json fan_to_json(const FanResult& r, bool verbose);
Json intervals_to_json(const std::vector<RootInterval>& ivs);

}  // namespace rct
