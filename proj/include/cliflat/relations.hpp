#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cliflat/evolution.hpp"
#include "cliflat/su11.hpp"

namespace cliflat {

// The registry catalogues every checked identity as data: an id, a short
// statement of where it comes from, and an exact evaluation procedure.
//
// Two modes:
//   assert      pass/fail; a failure carries a concrete counterexample.
//   adjudicate  several candidate forms are evaluated and the report names
//               which (if any) holds; these entries never fail a run.

enum class rel_mode { assert_check, adjudicate };
enum class rel_status { pass, fail, adjudicated, singular };

std::string status_str(rel_status s);

struct run_config {
    std::vector<lattice_params> params;
    int degree = 4;
    std::uint64_t seed = 0;
    unsigned threads = 1; // fan-out over relation x basis-element evaluations
};

struct counterexample_info {
    std::size_t param_index = 0;
    std::string params_text;
    std::string detail; // which sub-identity / quantifier values
    std::string input;  // basis element or random input
    std::string residual;
};

struct finding {
    std::string candidate;
    bool holds = false;
    std::string detail;
};

struct rel_result {
    std::string id;
    rel_status status = rel_status::pass;
    std::optional<counterexample_info> counterexample;
    std::vector<finding> findings; // adjudication candidates
    nlohmann::json tables;         // extra adjudication data (exact tables)
};

struct relation {
    std::string id;
    std::string citation;
    std::string description;
    rel_mode mode = rel_mode::assert_check;
    std::function<rel_result(const run_config&)> run;
};

const std::vector<relation>& registry();

// (id, citation, description) triples in stable registry order.
std::vector<std::array<std::string, 3>> registry_list();

const relation* find_relation(const std::string& id); // case-insensitive

struct verify_report {
    run_config config;
    std::vector<std::string> suite;
    std::vector<rel_result> results;
};

// Deterministic given (suite, config): results appear in registry order and
// every evaluation is exact. `threads` caps the worker fan-out; results are
// identical for any thread count.
verify_report run_suite(const std::vector<std::string>& suite_ids, const run_config& config,
                        unsigned threads = 1);

bool report_has_failures(const verify_report& rep);

nlohmann::json report_to_json(const verify_report& rep);

// Shared helper: draw a reproducible scalar or Clifford-valued polynomial
// with small rational coefficients.
clifford_poly random_poly(const lattice_params& params, int max_degree, bool clifford_valued,
                          std::uint64_t& state);
rational random_rational(std::uint64_t& state);

} // namespace cliflat
