// Acceptance suite: one pass/fail line per criterion, all checks exact.
//
// Criteria 6 and 8 assert two identities in the forms in which they are
// usually printed; exact evaluation shows those printed forms do not hold
// (the 0F1 differential shortcut for gamma_s, and the second semigroup
// intertwining identity away from t in {0,1}). The suite keeps asserting
// them and reports the failures with concrete witnesses; the corrected
// forms live in the adjudication relations and are verified there.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cliflat/json_io.hpp"
#include "cliflat/relations.hpp"

namespace {

using namespace cliflat;
using nlohmann::json;

std::string g_bin;
std::string g_goldens;
bool g_update_goldens = false;

int criteria_failed = 0;

struct criterion_guard {
    int number;
    std::string title;
    std::vector<std::string> problems;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    criterion_guard(int num, std::string t) : number(num), title(std::move(t)) {}

    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }

    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - started)
            .count();
    }

    ~criterion_guard() {
        const bool ok = problems.empty();
        if (!ok) ++criteria_failed;
        std::cout << "CRITERION " << number << ": " << (ok ? "PASS" : "FAIL") << " — " << title
                  << "\n";
        for (const auto& p : problems) std::cout << "    " << p << "\n";
        std::cout.flush();
    }
};

std::vector<lattice_params> sweep(std::initializer_list<int> ns) {
    const std::vector<std::array<rational, 3>> triples = {
        {rational(1), rational(1), rational(0)},
        {rational(1, 2), rational(2), rational(1, 3)},
        {rational(3, 7), rational(-2), rational(1)},
    };
    std::vector<lattice_params> out;
    for (int n : ns)
        for (const auto& t : triples) out.emplace_back(n, t[0], t[1], t[2]);
    return out;
}

run_config make_config(std::vector<lattice_params> params, int degree) {
    run_config cfg;
    cfg.params = std::move(params);
    cfg.degree = degree;
    cfg.seed = 0;
    cfg.threads = 2;
    return cfg;
}

void require_all_pass(criterion_guard& c, const verify_report& rep) {
    for (const auto& r : rep.results) {
        if (r.status == rel_status::fail) {
            std::string msg = r.id + " failed";
            if (r.counterexample)
                msg += " [" + r.counterexample->params_text + "] " + r.counterexample->detail +
                       " on " + r.counterexample->input + "; residual = " +
                       r.counterexample->residual;
            c.require(false, msg);
        }
    }
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct run_result {
    int exit_code;
    std::string out;
};

run_result run_cli(const std::string& args) {
    const std::string out_path = "/tmp/cliflat_acceptance_out.bin";
    const std::string cmd = g_bin + " " + args + " > " + out_path + " 2>/dev/null";
    const int rc = std::system(cmd.c_str());
    return run_result{WIFEXITED(rc) ? WEXITSTATUS(rc) : -1, slurp(out_path)};
}

// ---------------------------------------------------------------------------

void criterion_1() {
    criterion_guard c(1, "defining relations: anticommutation, translation interrelation, "
                         "product rules, Weyl-Heisenberg brackets (n in {1,2,3}, 3 rational "
                         "parameter triples, degree 4, zero residual, < 30 s)");
    const run_config cfg = make_config(sweep({1, 2, 3}), 4);
    const verify_report rep =
        run_suite({"clifford-anticommutation", "translation-interrelation",
                   "product-rule-forward", "product-rule-backward", "weyl-heisenberg"},
                  cfg, cfg.threads);
    require_all_pass(c, rep);
    const double secs = c.seconds();
    c.require(secs < 30.0, "runtime " + std::to_string(secs) + "s exceeds 30s");
}

void criterion_2() {
    criterion_guard c(2, "W-bracket lemma and factorized Hamiltonians under the same sweep");
    const run_config cfg = make_config(sweep({1, 2, 3}), 4);
    require_all_pass(
        c, run_suite({"w-bracket-lemma", "factorized-hamiltonian"}, cfg, cfg.threads));
}

void criterion_3() {
    criterion_guard c(3, "powers proposition: all three s-indexed commutator identities, "
                         "s <= 4, n <= 3, degree <= 4");
    std::vector<lattice_params> params = {
        lattice_params{1, rational(1), rational(1), rational(0)},
        lattice_params{2, rational(1), rational(1), rational(0)},
        lattice_params{2, rational(1, 2), rational(2), rational(1, 3)},
        lattice_params{3, rational(1), rational(1), rational(0)},
    };
    const run_config cfg = make_config(std::move(params), 4);
    require_all_pass(c, run_suite({"powers-proposition"}, cfg, cfg.threads));
}

void criterion_4() {
    criterion_guard c(4, "adjudication records (bracket candidate, lowering constant, "
                         "Casimir eigenvalue) machine-checked against committed goldens");
    std::vector<lattice_params> params = {
        lattice_params{1, rational(1), rational(1), rational(0)},
        lattice_params{2, rational(1), rational(1), rational(0)},
        lattice_params{3, rational(1), rational(1), rational(0)},
    };
    run_config cfg = make_config(std::move(params), 4);
    cfg.threads = 1;
    const verify_report rep =
        run_suite({"su11-bracket-Wminus-W", "ladder-lowering-constant", "casimir-constancy",
                   "casimir-label"},
                  cfg, 1);

    // (a) the bracket resolves to exactly one candidate right side
    const rel_result& bracket = rep.results[0];
    c.require(bracket.status == rel_status::adjudicated, "bracket entry must adjudicate");
    c.require(bracket.tables["winner"] == json::array({"-(1/h)W_h^-"}),
              "bracket winner must be -(1/h)W_h^-, uniquely");

    // (b) the lowering constant matches exactly one closed form, uniformly
    const rel_result& lower = rep.results[1];
    c.require(lower.tables["winner"] == json::array({"c(s,n) = s(s+n-1)"}),
              "lowering constant must match s(s+n-1) uniformly over s <= 6, n <= 3");

    // (c) the Casimir eigenvalue is constant in s; its relation to the
    // printed label is recorded, not asserted
    const rel_result& constancy = rep.results[2];
    c.require(constancy.status == rel_status::pass, "Casimir constancy must hold exactly");
    const rel_result& label = rep.results[3];
    c.require(label.status == rel_status::adjudicated, "Casimir label entry must adjudicate");
    c.require(label.tables["winner"] ==
                  json::array({"kappa(s,n) = n^2/4 - n/2 (s-independent)"}),
              "recorded Casimir value must be the s-independent n^2/4 - n/2");

    // none of these entries may fail the run
    c.require(!report_has_failures(rep), "adjudication entries must not fail the run");

    // golden comparison: byte-for-byte
    json golden_doc = json::array();
    for (const auto& r : rep.results) {
        json findings = json::array();
        for (const auto& f : r.findings)
            findings.push_back(
                json{{"candidate", f.candidate}, {"holds", f.holds}, {"detail", f.detail}});
        golden_doc.push_back(json{{"id", r.id},
                                  {"status", status_str(r.status)},
                                  {"findings", findings},
                                  {"tables", r.tables}});
    }
    const std::string payload = dump_canonical(golden_doc);
    const std::string golden_path = g_goldens + "/adjudications.json";
    if (g_update_goldens) {
        std::ofstream out(golden_path, std::ios::binary | std::ios::trunc);
        out << payload;
        std::cout << "    (goldens updated at " << golden_path << ")\n";
    } else {
        c.require(slurp(golden_path) == payload,
                  "adjudication records differ from the committed goldens");
    }
}

void criterion_5() {
    criterion_guard c(5, "Appell property D m_s = s m_{s-1} for s <= 6, n <= 3, and the "
                         "binomial expansion of exp(t D) for s <= 4 at 3 rational t");
    std::vector<lattice_params> params = {
        lattice_params{1, rational(1), rational(1), rational(0)},
        lattice_params{2, rational(1, 2), rational(2), rational(1, 3)},
        lattice_params{3, rational(1), rational(1), rational(0)},
    };
    const run_config cfg = make_config(std::move(params), 4);
    require_all_pass(c, run_suite({"appell-property", "appell-binomial"}, cfg, cfg.threads));
}

void criterion_6() {
    criterion_guard c(6, "gamma tables: direct sum, 2F1 truncation and 0F1 differential "
                         "evaluations agree for all non-singular (s, n), s <= 20, n <= 5; "
                         "gamma_0 = 1; gamma_1(n=2) = -1");
    for (const auto& row : gamma_table(20, 5)) {
        if (row.direct.singular()) continue; // flagged, not compared
        if (row.s == 0)
            c.require(*row.direct.value == rational(1),
                      "gamma_0 must be 1 at n=" + std::to_string(row.n));
        if (row.s == 1 && row.n == 2)
            c.require(*row.direct.value == rational(-1), "gamma_1(n=2) must be -1");
        if (!(*row.direct.value == *row.f21.value))
            c.require(false, "2F1 route disagrees at s=" + std::to_string(row.s) +
                                 ", n=" + std::to_string(row.n));
        if (!(*row.direct.value == *row.f01.value)) {
            // assert the criterion as stated; exact evaluation refutes it
            if (c.problems.size() < 3)
                c.require(false, "0F1 route disagrees at s=" + std::to_string(row.s) + ", n=" +
                                     std::to_string(row.n) + ": direct = " +
                                     row.direct.value->str() + ", 0F1 = " +
                                     row.f01.value->str() +
                                     " (the corrected 1F1 differential form does agree; see "
                                     "the gamma-0f1-formula adjudication)");
        }
    }
}

void criterion_7() {
    criterion_guard c(7, "eigenspaces: span{x1 - x2} at (n=2, s=1, d=1), empty at n=1; "
                         "Fourier reconstruction of 20 seeded random polynomials (degree "
                         "<= 3, n = 2) is exact");
    const lattice_params p2{2, rational(1), rational(1), rational(0)};
    const lattice_params p1{1, rational(1), rational(1), rational(0)};

    const eigen_basis e2 = eigenspace(p2, 1, 1);
    c.require(e2.basis.size() == 1, "eigenspace(d=1, s=1) at n=2 must be one-dimensional");
    if (e2.basis.size() == 1)
        c.require(e2.basis[0] ==
                      clifford_poly::variable(p2, 1) - clifford_poly::variable(p2, 2),
                  "eigenspace basis must be exactly {x1 - x2}");
    c.require(eigenspace(p1, 1, 1).basis.empty(), "eigenspace at n=1, s=1 must be empty");

    std::uint64_t state = 0;
    for (int i = 0; i < 20; ++i) {
        const clifford_poly p = random_poly(p2, 3, true, state);
        for (int sign : {+1, -1}) {
            clifford_poly recon = clifford_poly::zero(p2);
            for (const auto& comp : fourier_decompose(p, sign)) {
                clifford_poly raised = comp.q;
                for (unsigned r = 0; r < comp.r; ++r) raised = raise_over_h(raised, sign);
                recon = recon + raised;
            }
            c.require(recon == p, "reconstruction failed on random polynomial " +
                                      std::to_string(i));
        }
    }
}

void criterion_8() {
    criterion_guard c(8, "evolution: semigroup law and inverse on the degree <= 4 basis for "
                         "5 rational (t,tau) pairs; both intertwining identities at "
                         "t in {0, 1/2, 1}; identically zero PDE residuals up to degree 5; "
                         "stationary joint eigenfunctions");
    const lattice_params p2{2, rational(1), rational(1), rational(0)};

    const std::vector<std::pair<rational, rational>> pairs = {
        {rational(0), rational(0)},
        {rational(1, 2), rational(1, 2)},
        {rational(1, 3), rational(-2)},
        {rational(5, 4), rational(3, 7)},
        {rational(-1, 2), rational(1, 2)},
    };
    for (const auto& [t, tau] : pairs) {
        const semigroup_property_report rep = semigroup_property_verify(t, tau, 4, p2);
        c.require(rep.law.all_zero, "semigroup law fails at t=" + t.str() + ", tau=" +
                                        tau.str() + " on " + rep.law.counterexample);
        c.require(rep.inverse.all_zero, "inverse evolution fails at t=" + t.str());
    }

    for (const rational& t : {rational(0), rational(1, 2), rational(1)}) {
        const intertwine_report rep = intertwine_verify(t, 3, p2);
        c.require(rep.euler_intertwining.all_zero,
                  "Euler intertwining fails at t=" + t.str());
        // the second identity of the lemma, asserted as printed
        if (!rep.weight_intertwining_printed.all_zero)
            c.require(false,
                      "weight intertwining (printed form) fails at t=" + t.str() + " on " +
                          rep.weight_intertwining_printed.counterexample + "; residual = " +
                          rep.weight_intertwining_printed.residual +
                          " (the corrected form with the extra t(1-t)(E^- - E^+) term holds; "
                          "see the weight-intertwining adjudication)");
    }

    for (const auto& p : monomial_blade_basis(p2, 5)) {
        const cauchy_report rep = cauchy_verify(semigroup_trajectory(p));
        if (!rep.pde_residual.is_zero() || rep.initial_slice != p) {
            c.require(false, "PDE residual nonzero for " + p.str());
            break;
        }
    }

    for (long s = 0; s <= 3; ++s)
        for (const auto& f : eigenspace(p2, 3, s).basis)
            c.require(lowering(f).is_zero() && semigroup_apply(rational(2, 3), f) == f,
                      "joint eigenfunction not stationary at s=" + std::to_string(s));
}

void criterion_9() {
    criterion_guard c(9, "CLI end-to-end: verify --suite all exits 0 with defaults in "
                         "< 60 s, emitted JSON/CSV validates, identical invocations are "
                         "byte-identical");
    const auto t0 = std::chrono::steady_clock::now();
    const run_result all1 = run_cli("verify --suite all");
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    c.require(all1.exit_code == 0, "verify --suite all must exit 0, got " +
                                       std::to_string(all1.exit_code));
    c.require(secs < 60.0, "verify --suite all took " + std::to_string(secs) + "s");

    const run_result all2 = run_cli("verify --suite all");
    c.require(all1.out == all2.out, "identical invocations must be byte-identical");

    const json rep = json::parse(all1.out, nullptr, false);
    c.require(!rep.is_discarded(), "report must be valid JSON");
    if (!rep.is_discarded()) {
        c.require(rep.contains("suite") && rep.contains("params") && rep.contains("results"),
                  "report must carry suite/params/results");
        bool any_fail = false;
        for (const auto& r : rep["results"]) {
            const std::string st = r["status"];
            c.require(st == "pass" || st == "fail" || st == "adjudicated" || st == "singular",
                      "status enum violated: " + st);
            if (st == "fail") any_fail = true;
            c.require(r.contains("id") && r.contains("citation") &&
                          r.contains("counterexample"),
                      "result rows must carry id/citation/counterexample");
        }
        c.require(!any_fail, "no relation may fail under the default configuration");
    }

    const run_result gamma_csv = run_cli("gamma --s-max 4 --n-max 3 --format csv");
    c.require(gamma_csv.exit_code == 0 &&
                  gamma_csv.out.rfind("s,n,value,consistency\n", 0) == 0,
              "gamma CSV schema");
    const run_result gamma_json = run_cli("gamma --s-max 4 --n-max 3 --format json");
    const json gj = json::parse(gamma_json.out, nullptr, false);
    c.require(!gj.is_discarded() && gj.contains("gamma"), "gamma JSON schema");

    const run_result appell_json = run_cli("appell --s 3 --n 2 --format json");
    const json aj = json::parse(appell_json.out, nullptr, false);
    c.require(!aj.is_discarded() && aj["sequence"].size() == 4, "appell JSON schema");
    const run_result ladder_json = run_cli("ladder --s 3 --n 2 --format json");
    const json lj = json::parse(ladder_json.out, nullptr, false);
    c.require(!lj.is_discarded() && lj["w"].size() == 4 &&
                  lj["lowering_constants"].size() == 3,
              "ladder JSON schema");
    const run_result cas_csv = run_cli("casimir --s-max 3 --n-max 3 --format csv");
    c.require(cas_csv.exit_code == 0 && cas_csv.out.rfind("s,n,value\n", 0) == 0,
              "casimir CSV schema");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::cerr << "usage: cliflat_acceptance <path-to-cliflat-binary> <goldens-dir> "
                     "[--update]\n";
        return 2;
    }
    g_bin = argv[1];
    g_goldens = argv[2];
    g_update_goldens = argc > 3 && std::string(argv[3]) == "--update";

    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();

    std::cout << (9 - criteria_failed) << "/9 criteria passed\n";
    if (criteria_failed > 0)
        std::cout << "failing criteria assert identities in their commonly printed form; "
                     "the exact counterexamples above and the adjudication reports document "
                     "the corrected forms\n";
    return criteria_failed == 0 ? 0 : 1;
}
