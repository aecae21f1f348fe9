#pragma once

#include "monores/complex.hpp"
#include "monores/ideal.hpp"
#include "monores/series.hpp"

#include <json.hpp>

#include <map>
#include <string>

namespace monores {

using Json = nlohmann::ordered_json;

/// Parses {"vars": [...], "gens": [[...], ...]} and minimalizes the
/// generators. "vars" may be omitted when at least one generator is given.
MonomialIdeal parse_ideal_json(const std::string& text);
MonomialIdeal load_ideal(const std::string& path);
Json ideal_to_json(const MonomialIdeal& ideal);

/// {"tmax": T, "ybound": [...], "terms": [{"t":2,"y":[2,0,0],"c":-1}, ...]}.
/// Coefficients outside the int64 range are written as decimal strings.
Json series_to_json(const BigradedSeries& s);
Json integer_to_json(const mpz_class& v);

/// Generator counts per (homological degree, multidegree).
std::map<std::pair<std::size_t, Multidegree>, std::size_t> generator_table(const FreeComplex& c);

} // namespace monores
