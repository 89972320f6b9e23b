// cliflat: exact verification and construction CLI for the lattice Clifford
// operator calculus. Every numeric flag is an exact rational string; floats
// are rejected. Exit codes: 0 success, 1 mathematical failure, 2 usage or
// input error.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cliflat/json_io.hpp"
#include "cliflat/op_text.hpp"
#include "cliflat/relations.hpp"

namespace {

using namespace cliflat;
using nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_math = 1;
constexpr int exit_usage = 2;

struct cli_config {
    std::string n = "2";
    std::string h = "1";
    std::string mu = "1";
    std::string b = "0";
    int degree = 4;
    std::uint64_t seed = 0;
    std::string format = "json";
    std::string output;
};

lattice_params params_from(const cli_config& cfg) {
    int n = 0;
    try {
        std::size_t used = 0;
        n = std::stoi(cfg.n, &used);
        if (used != cfg.n.size()) throw std::invalid_argument(cfg.n);
    } catch (const std::exception&) {
        throw parse_error("--n", "expected an integer dimension, got '" + cfg.n + "'");
    }
    return lattice_params(n, rational::parse(cfg.h, "--h"), rational::parse(cfg.mu, "--mu"),
                          rational::parse(cfg.b, "--b"));
}

unsigned thread_budget() {
    const char* env = std::getenv("CLIFLAT_THREADS");
    if (env == nullptr || *env == '\0') {
        const unsigned hw = std::thread::hardware_concurrency();
        return std::min(4u, hw == 0 ? 1u : hw);
    }
    try {
        std::size_t used = 0;
        const long v = std::stol(env, &used);
        if (used != std::string(env).size() || v < 1) throw std::invalid_argument(env);
        return static_cast<unsigned>(v);
    } catch (const std::exception&) {
        throw parse_error("CLIFLAT_THREADS", std::string("expected a positive integer, got '") +
                                                 env + "'");
    }
}

// Atomic publication: write to a sibling temp file, then rename.
void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::cout << payload;
        return;
    }
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw parse_error(path, "cannot open output file for writing");
        out << payload;
        if (!out.flush()) throw parse_error(path, "failed to write output file");
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0) {
        std::remove(tmp.c_str());
        throw parse_error(path, "failed to publish output file");
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw parse_error(path, "cannot open input file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

clifford_poly read_poly_file(const std::string& path) {
    return poly_from_json(parse_json_text(read_file(path), path), path);
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
    for (const char* a : allowed)
        if (format == a) return;
    std::string expect;
    for (const char* a : allowed) expect += std::string(expect.empty() ? "" : "|") + a;
    throw parse_error("--format", "this command supports " + expect + ", got '" + format + "'");
}

// ---- verify ----------------------------------------------------------------

int cmd_verify(const cli_config& cfg, const std::string& suite_arg) {
    check_format(cfg.format, {"json", "text", "csv"});
    std::vector<std::string> ids;
    if (suite_arg == "all") {
        for (const auto& rel : registry()) ids.push_back(rel.id);
    } else {
        std::stringstream ss(suite_arg);
        std::string item;
        while (std::getline(ss, item, ','))
            if (!item.empty()) ids.push_back(item);
        if (ids.empty()) throw parse_error("--suite", "empty suite selector");
    }
    for (const auto& id : ids)
        if (find_relation(id) == nullptr)
            throw parse_error("--suite", "unknown relation id '" + id + "'");

    run_config rc;
    rc.params = {params_from(cfg)};
    rc.degree = cfg.degree;
    rc.seed = cfg.seed;

    const verify_report rep = run_suite(ids, rc, thread_budget());

    std::string payload;
    if (cfg.format == "json") {
        payload = dump_canonical(report_to_json(rep));
    } else if (cfg.format == "csv") {
        std::ostringstream out;
        out << "id,status\n";
        for (const auto& r : rep.results) out << r.id << "," << status_str(r.status) << "\n";
        payload = out.str();
    } else {
        std::ostringstream out;
        for (const auto& r : rep.results) {
            out << r.id << ": " << status_str(r.status) << "\n";
            for (const auto& f : r.findings)
                out << "  candidate " << (f.holds ? "[holds] " : "[fails] ") << f.candidate
                    << "\n";
            if (r.counterexample)
                out << "  counterexample: " << r.counterexample->detail << " on "
                    << r.counterexample->input << "\n";
        }
        payload = out.str();
    }
    write_output(cfg.output, payload);

    std::size_t fails = 0;
    for (const auto& r : rep.results)
        if (r.status == rel_status::fail) ++fails;
    std::cerr << "verify: " << rep.results.size() << " relations, " << fails << " failed\n";
    return fails == 0 ? exit_ok : exit_math;
}

// ---- gamma -----------------------------------------------------------------

int cmd_gamma(const cli_config& cfg, unsigned s_max, int n_max) {
    check_format(cfg.format, {"json", "csv", "text"});
    const auto rows = gamma_table(s_max, n_max);

    auto consistency = [](const gamma_row& r) -> std::string {
        if (r.direct.singular() || r.f21.singular() || r.f01.singular() ||
            r.corrected.singular())
            return "singular";
        const bool f21_ok = *r.direct.value == *r.f21.value;
        const bool f01_ok = *r.direct.value == *r.f01.value;
        const bool f11_ok = *r.direct.value == *r.corrected.value;
        if (f21_ok && f01_ok && f11_ok) return "ok";
        if (f21_ok && f11_ok) return "0f1-mismatch";
        return "mismatch";
    };

    std::string payload;
    if (cfg.format == "csv") {
        std::ostringstream out;
        out << "s,n,value,consistency\n";
        for (const auto& r : rows)
            out << r.s << "," << r.n << ","
                << (r.direct.singular() ? "singular" : r.direct.value->str()) << ","
                << consistency(r) << "\n";
        payload = out.str();
    } else if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows) {
            json row{{"s", r.s},
                     {"n", r.n},
                     {"value", r.direct.singular() ? "singular" : r.direct.value->str()},
                     {"consistency", consistency(r)},
                     {"f01", r.f01.singular() ? "singular" : r.f01.value->str()}};
            if (r.direct.singular()) row["singular_r"] = r.direct.singular_r;
            arr.push_back(row);
        }
        payload = dump_canonical(json{{"gamma", arr}});
    } else {
        std::ostringstream out;
        for (const auto& r : rows)
            out << "gamma(s=" << r.s << ", n=" << r.n << ") = "
                << (r.direct.singular() ? "singular" : r.direct.value->str()) << "  ["
                << consistency(r) << "]\n";
        payload = out.str();
    }
    write_output(cfg.output, payload);
    return exit_ok;
}

// ---- casimir ---------------------------------------------------------------

int cmd_casimir(const cli_config& cfg, unsigned s_max, int n_max) {
    check_format(cfg.format, {"json", "csv", "text"});
    struct row {
        unsigned s;
        int n;
        rational kappa;
        rational printed_label;
    };
    std::vector<row> rows;
    for (int n = 1; n <= n_max; ++n) {
        const lattice_params lp(n, rational::parse(cfg.h, "--h"),
                                rational::parse(cfg.mu, "--mu"), rational::parse(cfg.b, "--b"));
        const clifford_poly one = clifford_poly::constant(lp, rational(1));
        const ladder_basis lb = build_ladder(+1, one, s_max);
        const rational base = rational(n * n, 4) - rational(n, 2);
        for (unsigned s = 0; s <= s_max; ++s) {
            const auto kappa = proportionality(casimir_apply(lb.w[s], +1), lb.w[s]);
            if (!kappa)
                throw math_error("casimir: w_s is not a Casimir eigenfunction at s = " +
                                 std::to_string(s));
            rows.push_back(row{s, n, *kappa, base - rational(2l * static_cast<long>(s))});
        }
    }

    std::string payload;
    if (cfg.format == "csv") {
        std::ostringstream out;
        out << "s,n,value\n";
        for (const auto& r : rows) out << r.s << "," << r.n << "," << r.kappa.str() << "\n";
        payload = out.str();
    } else if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& r : rows)
            arr.push_back(json{{"s", r.s},
                               {"n", r.n},
                               {"value", r.kappa.str()},
                               {"printed_label", r.printed_label.str()},
                               {"matches_printed_label", r.kappa == r.printed_label}});
        payload = dump_canonical(json{{"casimir", arr}});
    } else {
        std::ostringstream out;
        for (const auto& r : rows)
            out << "kappa(s=" << r.s << ", n=" << r.n << ") = " << r.kappa.str() << "\n";
        payload = out.str();
    }
    write_output(cfg.output, payload);
    return exit_ok;
}

// ---- appell ----------------------------------------------------------------

int cmd_appell(const cli_config& cfg, unsigned s_max, int sign) {
    check_format(cfg.format, {"json", "csv", "text"});
    const lattice_params lp = params_from(cfg);
    const appell_sequence ap = build_appell(sign, s_max, lp);

    std::string payload;
    if (cfg.format == "csv") {
        std::ostringstream out;
        out << "s,c,lambda\n";
        for (unsigned s = 0; s <= s_max; ++s)
            out << s << "," << (s == 0 ? "" : ap.c[s - 1].str()) << "," << ap.lambda[s].str()
                << "\n";
        payload = out.str();
    } else if (cfg.format == "json") {
        json arr = json::array();
        for (unsigned s = 0; s <= s_max; ++s) {
            json row{{"s", s}, {"lambda", ap.lambda[s].str()}, {"m", poly_to_json(ap.m[s])}};
            if (s > 0) row["c"] = ap.c[s - 1].str();
            arr.push_back(row);
        }
        payload = dump_canonical(json{{"sign", sign > 0 ? "+" : "-"}, {"sequence", arr}});
    } else {
        std::ostringstream out;
        for (unsigned s = 0; s <= s_max; ++s)
            out << "s=" << s << "  lambda=" << ap.lambda[s].str() << "  m_s = " << ap.m[s].str()
                << "\n";
        payload = out.str();
    }
    write_output(cfg.output, payload);
    return exit_ok;
}

// ---- ladder ----------------------------------------------------------------

int cmd_ladder(const cli_config& cfg, unsigned s_max, int sign, const std::string& m0_path) {
    check_format(cfg.format, {"json", "csv", "text"});
    const lattice_params lp = params_from(cfg);
    clifford_poly m0 = clifford_poly::constant(lp, rational(1));
    if (!m0_path.empty()) m0 = read_poly_file(m0_path);

    const ladder_basis lb = build_ladder(sign, m0, s_max);

    std::string payload;
    if (cfg.format == "csv") {
        std::ostringstream out;
        out << "s,c,matches_s(s+n+1),matches_s(s+n-1)\n";
        for (unsigned s = 1; s <= s_max; ++s) {
            const rational c = lb.lowering_c[s - 1];
            const rational plus(static_cast<long>(s) * (s + lp.n + 1));
            const rational minus(static_cast<long>(s) * (s + lp.n - 1));
            out << s << "," << c.str() << "," << (c == plus ? "yes" : "no") << ","
                << (c == minus ? "yes" : "no") << "\n";
        }
        payload = out.str();
    } else if (cfg.format == "json") {
        json warr = json::array();
        for (unsigned s = 0; s <= s_max; ++s)
            warr.push_back(json{{"s", s}, {"w", poly_to_json(lb.w[s])}});
        json carr = json::array();
        for (unsigned s = 1; s <= s_max; ++s) {
            const rational c = lb.lowering_c[s - 1];
            carr.push_back(json{{"s", s},
                                {"c", c.str()},
                                {"matches s(s+n+1)",
                                 c == rational(static_cast<long>(s) * (s + lp.n + 1))},
                                {"matches s(s+n-1)",
                                 c == rational(static_cast<long>(s) * (s + lp.n - 1))}});
        }
        payload = dump_canonical(
            json{{"sign", sign > 0 ? "+" : "-"}, {"w", warr}, {"lowering_constants", carr}});
    } else {
        std::ostringstream out;
        for (unsigned s = 0; s <= s_max; ++s) {
            out << "w_" << s << " = " << lb.w[s].str() << "\n";
            if (s > 0) out << "  c(" << s << ") = " << lb.lowering_c[s - 1].str() << "\n";
        }
        payload = out.str();
    }
    write_output(cfg.output, payload);
    return exit_ok;
}

// ---- decompose ---------------------------------------------------------------

int cmd_decompose(const cli_config& cfg, const std::string& input, int sign) {
    check_format(cfg.format, {"json", "text"});
    const clifford_poly p = read_poly_file(input);
    if (p.degree() > cfg.degree)
        throw parse_error(input, "input degree " + std::to_string(p.degree()) +
                                     " exceeds the configured bound " +
                                     std::to_string(cfg.degree));
    const auto components = fourier_decompose(p, sign);

    std::string payload;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& c : components)
            arr.push_back(json{{"s", c.s}, {"r", c.r}, {"component", poly_to_json(c.q)}});
        payload = dump_canonical(
            json{{"sign", sign > 0 ? "+" : "-"}, {"components", arr}, {"reconstructed", true}});
    } else {
        std::ostringstream out;
        for (const auto& c : components)
            out << "(s=" << c.s << ", r=" << c.r << "): " << c.q.str() << "\n";
        payload = out.str();
    }
    write_output(cfg.output, payload);
    return exit_ok;
}

// ---- evolve -------------------------------------------------------------------

int cmd_evolve(const cli_config& cfg, const std::string& input, const std::string& t_text) {
    check_format(cfg.format, {"json", "text"});
    const rational t = rational::parse(t_text, "--t");
    const clifford_poly f = read_poly_file(input);

    const time_poly g = semigroup_trajectory(f);
    const clifford_poly g_at_t = g.eval(t);
    if (g_at_t != semigroup_apply(t, f))
        throw math_error("evolve: trajectory evaluation disagrees with direct application");
    const cauchy_report rep = cauchy_verify(g);

    std::string payload;
    if (cfg.format == "json") {
        payload = dump_canonical(json{
            {"t", t.str()},
            {"g", poly_to_json(g_at_t)},
            {"trajectory", time_poly_to_json(g)},
            {"residuals",
             json{{"pde", time_poly_to_json(rep.pde_residual)},
                  {"constraint", time_poly_to_json(rep.constraint_residual)},
                  {"initial_slice", poly_to_json(rep.initial_slice)},
                  {"initial_matches_input", rep.initial_slice == f}}}});
    } else {
        std::ostringstream out;
        out << "g(t) at t=" << t.str() << ": " << g_at_t.str() << "\n";
        out << "trajectory: " << g.str() << "\n";
        out << "pde residual: " << rep.pde_residual.str() << "\n";
        out << "constraint residual: " << rep.constraint_residual.str() << "\n";
        payload = out.str();
    }
    write_output(cfg.output, payload);
    return exit_ok;
}

// ---- list-relations -----------------------------------------------------------

int cmd_list(const cli_config& cfg) {
    check_format(cfg.format, {"json", "csv", "text"});
    std::string payload;
    if (cfg.format == "json") {
        json arr = json::array();
        for (const auto& row : registry_list())
            arr.push_back(
                json{{"id", row[0]}, {"citation", row[1]}, {"description", row[2]}});
        payload = dump_canonical(json{{"relations", arr}});
    } else if (cfg.format == "csv") {
        std::ostringstream out;
        out << "id,citation\n";
        for (const auto& row : registry_list()) out << row[0] << ",\"" << row[1] << "\"\n";
        payload = out.str();
    } else {
        std::ostringstream out;
        for (const auto& row : registry_list())
            out << row[0] << "\n    " << row[1] << "\n    " << row[2] << "\n";
        payload = out.str();
    }
    write_output(cfg.output, payload);
    return exit_ok;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact operator calculus on Clifford-vector-valued lattice polynomials"};
    app.require_subcommand(1);
    app.fallthrough();
    // --h is the mesh width, so help is spelled out.
    app.set_help_flag("--help", "print help");

    cli_config cfg;
    app.add_option("--n", cfg.n, "dimension n (integer)")->configurable(true);
    app.add_option("--h", cfg.h, "mesh width h (exact rational, > 0)")->configurable(true);
    app.add_option("--mu", cfg.mu, "weight slope mu (exact rational, nonzero)")
        ->configurable(true);
    app.add_option("--b", cfg.b, "weight offset b (exact rational)")->configurable(true);
    app.add_option("--degree", cfg.degree, "degree bound for quantified checks")
        ->configurable(true);
    app.add_option("--seed", cfg.seed, "seed for reproducible random sampling")
        ->configurable(true);
    app.add_option("--format", cfg.format, "output format: json|csv|text")->configurable(true);
    app.add_option("--output", cfg.output, "output path (atomic write); default stdout")
        ->configurable(true);
    app.set_config("--config", "", "key=value configuration file; flags override it");

    auto* verify = app.add_subcommand("verify", "run relation suites exactly");
    std::string suite = "all";
    verify->add_option("--suite", suite, "'all' or comma-separated relation ids");

    auto* gamma = app.add_subcommand("gamma", "emit the exact gamma_s table");
    unsigned s_max = 20;
    int n_max = 5;
    gamma->add_option("--s-max", s_max, "largest s");
    gamma->add_option("--n-max", n_max, "largest n");

    auto* casimir = app.add_subcommand("casimir", "emit the exact Casimir eigenvalue table");
    unsigned cas_s = 5;
    int cas_n = 3;
    casimir->add_option("--s-max", cas_s, "largest s");
    casimir->add_option("--n-max", cas_n, "largest n");

    auto* appell = app.add_subcommand("appell", "construct the normalized Appell sequence");
    unsigned appell_s = 4;
    std::string appell_sign = "+";
    appell->add_option("--s", appell_s, "largest s");
    appell->add_option("--sign", appell_sign, "series sign: + or -");

    auto* ladder = app.add_subcommand("ladder", "construct w_s and the lowering constants");
    unsigned ladder_s = 4;
    std::string ladder_sign = "+";
    std::string m0_path;
    ladder->add_option("--s", ladder_s, "largest s");
    ladder->add_option("--sign", ladder_sign, "series sign: + or -");
    ladder->add_option("--m0", m0_path, "seed polynomial JSON (default: the constant 1)");

    auto* decompose = app.add_subcommand("decompose", "Fourier-decompose a polynomial");
    std::string dec_input;
    std::string dec_sign = "+";
    decompose->add_option("--input", dec_input, "polynomial JSON file")->required();
    decompose->add_option("--sign", dec_sign, "series sign: + or -");

    auto* evolve = app.add_subcommand("evolve", "apply the semigroup and verify the residuals");
    std::string evo_input;
    std::string evo_t = "0";
    evolve->add_option("--input", evo_input, "polynomial JSON file")->required();
    evolve->add_option("--t", evo_t, "time (exact rational)");

    auto* list = app.add_subcommand("list-relations", "list the relation registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    auto sign_of = [](const std::string& s) {
        if (s == "+") return +1;
        if (s == "-") return -1;
        throw parse_error("--sign", "expected '+' or '-', got '" + s + "'");
    };

    try {
        if (verify->parsed()) return cmd_verify(cfg, suite);
        if (gamma->parsed()) return cmd_gamma(cfg, s_max, n_max);
        if (casimir->parsed()) return cmd_casimir(cfg, cas_s, cas_n);
        if (appell->parsed()) return cmd_appell(cfg, appell_s, sign_of(appell_sign));
        if (ladder->parsed()) return cmd_ladder(cfg, ladder_s, sign_of(ladder_sign), m0_path);
        if (decompose->parsed()) return cmd_decompose(cfg, dec_input, sign_of(dec_sign));
        if (evolve->parsed()) return cmd_evolve(cfg, evo_input, evo_t);
        if (list->parsed()) return cmd_list(cfg);
        std::cerr << "no subcommand given\n";
        return exit_usage;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_usage;
    } catch (const math_error& e) {
        std::cerr << "mathematical failure: " << e.what() << "\n";
        return exit_math;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return exit_math;
    }
}
