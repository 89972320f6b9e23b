#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "cliflat/poly.hpp"

namespace cliflat {

class time_poly;

// Canonical JSON forms. Keys are sorted, blades are emitted as sorted index
// arrays, multi-indices in lexicographic order, rationals as "p/q" strings
// ("p" when the denominator is 1). Parsing is strict: non-canonical
// rationals, out-of-range blade indices and malformed shapes are rejected
// with the offending path.

nlohmann::json multivector_to_json(const multivector& m);
multivector multivector_from_json(const nlohmann::json& j, const std::string& path = "$");

nlohmann::json poly_to_json(const clifford_poly& p);
clifford_poly poly_from_json(const nlohmann::json& j, const std::string& path = "$");

nlohmann::json time_poly_to_json(const time_poly& g);
// The one-argument form needs at least one coefficient to learn the lattice
// parameters; the params overload also accepts the zero time polynomial.
time_poly time_poly_from_json(const nlohmann::json& j, const std::string& path = "$");
time_poly time_poly_from_json(const nlohmann::json& j, const lattice_params& params,
                              const std::string& path = "$");

std::string dump_canonical(const nlohmann::json& j);

nlohmann::json parse_json_text(const std::string& text, const std::string& path = "$");

} // namespace cliflat
