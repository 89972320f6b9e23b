#include "cliflat/json_io.hpp"

#include <optional>

#include <nlohmann/json.hpp>

#include "cliflat/evolution.hpp"

namespace cliflat {

using nlohmann::json;

namespace {

std::string at(const std::string& path, const std::string& key) { return path + "." + key; }
std::string idx(const std::string& path, std::size_t i) {
    return path + "[" + std::to_string(i) + "]";
}

const json& require_field(const json& j, const std::string& key, const std::string& path) {
    if (!j.is_object()) throw parse_error(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw parse_error(path, "missing field '" + key + "'");
    return *it;
}

void forbid_unknown(const json& j, std::initializer_list<const char*> keys,
                    const std::string& path) {
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool known = false;
        for (const char* k : keys)
            if (it.key() == k) known = true;
        if (!known) throw parse_error(at(path, it.key()), "unknown field");
    }
}

rational rational_field(const json& j, const std::string& path) {
    if (!j.is_string()) throw parse_error(path, "expected a rational string");
    return rational::parse(j.get<std::string>(), path);
}

int int_field(const json& j, const std::string& path, long lo, long hi) {
    if (!j.is_number_integer())
        throw parse_error(path, "expected an integer");
    const long v = j.get<long>();
    if (v < lo || v > hi)
        throw parse_error(path, "value " + std::to_string(v) + " out of range [" +
                                    std::to_string(lo) + "," + std::to_string(hi) + "]");
    return static_cast<int>(v);
}

json mv_terms_to_json(const multivector& m) {
    json terms = json::array();
    for (const auto& [b, c] : m.terms()) {
        json blade = json::array();
        for (int j : blade_indices(b)) blade.push_back(j);
        terms.push_back(json{{"blade", blade}, {"coeff", c.str()}});
    }
    return terms;
}

multivector mv_terms_from_json(const json& j, int n, const std::string& path) {
    if (!j.is_array()) throw parse_error(path, "expected an array of blade terms");
    multivector::term_map terms;
    blade_mask prev = 0;
    bool have_prev = false;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const std::string tpath = idx(path, i);
        const json& t = j[i];
        if (!t.is_object()) throw parse_error(tpath, "expected an object");
        forbid_unknown(t, {"blade", "coeff"}, tpath);
        const json& bj = require_field(t, "blade", tpath);
        if (!bj.is_array()) throw parse_error(at(tpath, "blade"), "expected an index array");
        std::vector<int> indices;
        for (std::size_t k = 0; k < bj.size(); ++k) {
            if (!bj[k].is_number_integer())
                throw parse_error(idx(at(tpath, "blade"), k), "expected an integer index");
            indices.push_back(bj[k].get<int>());
        }
        const blade_mask b = blade_from_indices(indices, n, at(tpath, "blade"));
        if (have_prev && !blade_lex_before(prev, b))
            throw parse_error(at(tpath, "blade"), "blades not in canonical order");
        prev = b;
        have_prev = true;
        const rational c = rational_field(require_field(t, "coeff", tpath), at(tpath, "coeff"));
        if (c.is_zero()) throw parse_error(at(tpath, "coeff"), "explicit zero coefficient");
        terms.emplace(b, c);
    }
    return multivector(n, std::move(terms));
}

} // namespace

json multivector_to_json(const multivector& m) {
    return json{{"n", m.dimension()}, {"terms", mv_terms_to_json(m)}};
}

multivector multivector_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw parse_error(path, "expected an object");
    forbid_unknown(j, {"n", "terms"}, path);
    const int n = int_field(require_field(j, "n", path), at(path, "n"), 1, max_dimension);
    return mv_terms_from_json(require_field(j, "terms", path), n, at(path, "terms"));
}

json poly_to_json(const clifford_poly& p) {
    const lattice_params& lp = p.params();
    json terms = json::array();
    for (const auto& [alpha, m] : p.terms()) {
        json a = json::array();
        for (auto e : alpha) a.push_back(e);
        terms.push_back(json{{"alpha", a}, {"coeff", mv_terms_to_json(m)}});
    }
    return json{{"n", lp.n},
                {"params", json{{"h", lp.h.str()}, {"mu", lp.mu.str()}, {"b", lp.b.str()}}},
                {"terms", terms}};
}

clifford_poly poly_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw parse_error(path, "expected an object");
    forbid_unknown(j, {"n", "params", "terms"}, path);
    const int n = int_field(require_field(j, "n", path), at(path, "n"), 1, max_dimension);
    const json& pj = require_field(j, "params", path);
    const std::string ppath = at(path, "params");
    if (!pj.is_object()) throw parse_error(ppath, "expected an object");
    forbid_unknown(pj, {"h", "mu", "b"}, ppath);
    const rational h = rational_field(require_field(pj, "h", ppath), at(ppath, "h"));
    const rational mu = rational_field(require_field(pj, "mu", ppath), at(ppath, "mu"));
    const rational b = rational_field(require_field(pj, "b", ppath), at(ppath, "b"));
    lattice_params lp;
    try {
        lp = lattice_params(n, h, mu, b);
    } catch (const domain_error& e) {
        throw parse_error(ppath, e.what());
    }

    clifford_poly out(lp);
    const json& terms = require_field(j, "terms", path);
    const std::string tpath = at(path, "terms");
    if (!terms.is_array()) throw parse_error(tpath, "expected an array");
    multi_index prev;
    bool have_prev = false;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const std::string epath = idx(tpath, i);
        const json& t = terms[i];
        if (!t.is_object()) throw parse_error(epath, "expected an object");
        forbid_unknown(t, {"alpha", "coeff"}, epath);
        const json& aj = require_field(t, "alpha", epath);
        if (!aj.is_array() || static_cast<int>(aj.size()) != n)
            throw parse_error(at(epath, "alpha"),
                              "expected an exponent array of length " + std::to_string(n));
        multi_index alpha(n, 0);
        for (int k = 0; k < n; ++k) {
            if (!aj[k].is_number_integer() || aj[k].get<long>() < 0)
                throw parse_error(idx(at(epath, "alpha"), k), "expected a nonnegative exponent");
            alpha[k] = static_cast<std::uint32_t>(aj[k].get<long>());
        }
        if (have_prev && !(prev < alpha))
            throw parse_error(at(epath, "alpha"), "multi-indices not in canonical order");
        prev = alpha;
        have_prev = true;
        const multivector m =
            mv_terms_from_json(require_field(t, "coeff", epath), n, at(epath, "coeff"));
        if (m.is_zero()) throw parse_error(at(epath, "coeff"), "explicit zero coefficient");
        out.add_term(alpha, m);
    }
    return out;
}

json time_poly_to_json(const time_poly& g) {
    json coeffs = json::array();
    for (const auto& [power, poly] : g.coeffs())
        coeffs.push_back(json{{"power", power}, {"poly", poly_to_json(poly)}});
    return json{{"t_coeffs", coeffs}};
}

time_poly time_poly_from_json(const json& j, const lattice_params& params,
                              const std::string& path) {
    const time_poly parsed = [&] {
        if (j.is_object() && j.contains("t_coeffs") && j["t_coeffs"].is_array() &&
            j["t_coeffs"].empty())
            return time_poly(params);
        return time_poly_from_json(j, path);
    }();
    if (parsed.params() != params)
        throw parse_error(path, "time polynomial parameters disagree with the expected ones");
    return parsed;
}

time_poly time_poly_from_json(const json& j, const std::string& path) {
    if (!j.is_object()) throw parse_error(path, "expected an object");
    forbid_unknown(j, {"t_coeffs"}, path);
    const json& cj = require_field(j, "t_coeffs", path);
    const std::string cpath = at(path, "t_coeffs");
    if (!cj.is_array()) throw parse_error(cpath, "expected an array");
    if (cj.empty()) throw parse_error(cpath, "a time polynomial needs at least the t^0 slot");

    std::optional<time_poly> out;
    long prev_power = -1;
    for (std::size_t i = 0; i < cj.size(); ++i) {
        const std::string epath = idx(cpath, i);
        const json& t = cj[i];
        if (!t.is_object()) throw parse_error(epath, "expected an object");
        forbid_unknown(t, {"power", "poly"}, epath);
        const json& pw = require_field(t, "power", epath);
        if (!pw.is_number_integer() || pw.get<long>() < 0)
            throw parse_error(at(epath, "power"), "expected a nonnegative power");
        const long power = pw.get<long>();
        if (power <= prev_power)
            throw parse_error(at(epath, "power"), "powers not strictly increasing");
        prev_power = power;
        clifford_poly p = poly_from_json(require_field(t, "poly", epath), at(epath, "poly"));
        if (!out) out.emplace(p.params());
        out->set_coeff(static_cast<unsigned>(power), p);
    }
    return *out;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json parse_json_text(const std::string& text, const std::string& path) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error(path, "malformed JSON");
    return j;
}

} // namespace cliflat
