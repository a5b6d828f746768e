#pragma once

#include <string>

#include "json.hpp"

#include "herglotz.hpp"
#include "interval.hpp"
#include "jacobi.hpp"
#include "measure.hpp"

namespace specpot::io {

using ordered_json = nlohmann::ordered_json;

/// Parse a coefficient model from its text form:
///   free
///   periodic:a=<list>;b=<list>          e.g. periodic:a=1,1;b=1,-1
///   table:a=<list>;b=<list>             free coefficients past the table
///   qp:lambda=<x>[,alpha=golden|<x>][,theta=<x>]
///   random:[seed=<n>][,a_lo=<x>][,a_hi=<x>][,b_lo=<x>][,b_hi=<x>]
/// Throws std::invalid_argument (listing the grammar) on malformed input.
CoeffModel parse_model(const std::string& text);

/// Parse an interval union written as "[lo,hi],[lo,hi],...".
SetUnion parse_set(const std::string& text);

ordered_json model_to_json(const CoeffModel& m);
CoeffModel model_from_json(const ordered_json& j);

ordered_json set_to_json(const SetUnion& E);
SetUnion set_from_json(const ordered_json& j);

ordered_json measure_to_json(const Measure& mu);
Measure measure_from_json(const ordered_json& j);

ordered_json krein_to_json(const KreinFn& xi);
KreinFn krein_from_json(const ordered_json& j);

/// Fixed-width decimal with 15 significant digits, for byte-stable CSV.
std::string fmt15(double v);

} // namespace specpot::io
