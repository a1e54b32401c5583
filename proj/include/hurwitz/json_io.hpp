#pragma once
#include <string>
#include <vector>

#include <json.hpp>

#include "hurwitz/constellation.hpp"
#include "hurwitz/matrix_integral.hpp"
#include "hurwitz/pq_series.hpp"

// Serialization used by the CLI and its tests.  Everything emits
// ordered_json so key order — and therefore the printed bytes — is fixed by
// construction order, and all rationals are {"num","den"} decimal strings.
namespace hurwitz {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& q);
Json partition_json(const Partition& p);       // plain part array, descending
Json permutation_json(const Permutation& g);   // 1-based image list
Json poly_json(const ParamPoly& p);            // array of {"c","d","num","den"}
Json series_json(const BetaSeries& s);         // {"order","coeffs"}
// Full-shape table: one row per (N <= Nmax, mu |- N, nu |- N) in table order,
// including rows whose series is identically zero.
Json table_json(const PQSeries& tau);
Json constellation_json(const Constellation& c);
Json census_json(const Census& census);
Json report_json(const HcizReport& r);

// "(2,1);(3)" -> {(2,1),(3)}; whitespace ignored, parentheses optional.
std::vector<Partition> parse_profiles(const std::string& text);

} // namespace hurwitz
