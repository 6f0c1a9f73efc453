#pragma once

#include <string>

#include "hgmoduli/cache.hpp"

namespace hgm {

// Canonical JSON form of a report. All big integers are decimal strings; the
// text renderers below consume this JSON (not the report struct), so the two
// output formats encode identical data by construction.
Json report_to_json(const HodgeReport& rep);

// One section of the report ("class", "betti", "epoly", "poincare", "euler"),
// or everything for "all". basis is "p" or "h" and only affects "class".
std::string report_to_text(const Json& rep, const std::string& output,
                           const std::string& basis);

// Component rendering: "(L^2+L)/2 p1^2 + (L^2-L)/2 p2", "0" when empty.
std::string component_json_to_text(const Json& comp, const std::string& symbol);

} // namespace hgm
