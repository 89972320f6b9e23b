// End-to-end checks of the cliflat binary: exit-code contract, byte-stable
// reports, schema shape of emitted files. The binary path arrives as argv[1].

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "cliflat/json_io.hpp"
#include "cliflat/poly.hpp"

namespace {

using namespace cliflat;
using nlohmann::json;

int checks = 0;
int failures = 0;

void expect(bool ok, const std::string& what) {
    ++checks;
    if (!ok) {
        ++failures;
        std::cerr << "[FAIL] " << what << "\n";
    }
}

std::string g_bin;
std::string g_tmpdir;

struct run_result {
    int exit_code;
    std::string out;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

run_result run(const std::string& args, const std::string& env = "") {
    const std::string out_path = g_tmpdir + "/out.bin";
    const std::string cmd = env + " " + g_bin + " " + args + " > " + out_path + " 2>" +
                            g_tmpdir + "/err.txt";
    const int rc = std::system(cmd.c_str());
    run_result r;
    r.exit_code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    r.out = slurp(out_path);
    return r;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out << text;
}

void test_verify_contract() {
    const run_result ok = run("verify --suite weyl-heisenberg");
    expect(ok.exit_code == 0, "verify weyl-heisenberg exits 0");
    const json rep = json::parse(ok.out);
    expect(rep["results"][0]["status"] == "pass", "weyl-heisenberg passes");
    expect(rep["params"][0]["h"] == "1", "defaults echoed in the report");
    expect(rep["degree"] == 4, "default degree 4");

    expect(run("verify --suite nope").exit_code == 2, "unknown suite exits 2");
    expect(run("verify --suite weyl-heisenberg --h 3/7 --mu 2 --b 1/3").exit_code == 0,
           "parameter-independent identities at h=3/7, mu=2, b=1/3");
    expect(run("verify --suite weyl-heisenberg --h 0.5").exit_code == 2,
           "float mesh width rejected");
    expect(run("verify --suite weyl-heisenberg --h 2/4").exit_code == 2,
           "non-canonical rational flag rejected");
    expect(run("bogus-subcommand").exit_code == 2, "unknown subcommand exits 2");
}

void test_byte_identical_reports() {
    const std::string args = "verify --suite "
                             "clifford-anticommutation,su11-bracket-Wminus-W,euler-dual-route "
                             "--degree 3";
    const run_result a = run(args);
    const run_result b = run(args);
    const run_result c = run(args, "CLIFLAT_THREADS=1");
    const run_result d = run(args, "CLIFLAT_THREADS=3");
    expect(a.exit_code == 0 && b.exit_code == 0, "verify exits 0");
    expect(a.out == b.out, "identical invocations are byte-identical");
    const json ja = json::parse(a.out), jc = json::parse(c.out), jd = json::parse(d.out);
    expect(ja["results"] == jc["results"] && jc["results"] == jd["results"],
           "results independent of the thread budget");
    expect(run("verify --suite all", "CLIFLAT_THREADS=zero").exit_code == 2,
           "malformed CLIFLAT_THREADS exits 2");
}

void test_gamma_tables() {
    const run_result csv = run("gamma --s-max 3 --n-max 3 --format csv");
    expect(csv.exit_code == 0, "gamma csv exits 0");
    expect(csv.out.rfind("s,n,value,consistency\n", 0) == 0, "gamma csv header");
    expect(csv.out.find("0,3,1,ok") != std::string::npos, "gamma(0,3) = 1");
    expect(csv.out.find("1,2,-1,") != std::string::npos, "gamma(1,2) = -1");

    const run_result cas = run("casimir --s-max 2 --n-max 2 --format csv");
    expect(cas.exit_code == 0, "casimir csv exits 0");
    expect(cas.out.rfind("s,n,value\n", 0) == 0, "casimir csv header");
    expect(cas.out.find("0,1,-1/4") != std::string::npos, "kappa(0,1) = -1/4");
    expect(cas.out.find("2,2,0") != std::string::npos, "kappa(2,2) = 0");
    const run_result casj = run("casimir --s-max 1 --n-max 2 --format json");
    const json cj = json::parse(casj.out);
    expect(cj["casimir"].size() == 4, "casimir json rows");
    expect(cj["casimir"][0]["matches_printed_label"] == true,
           "label coincides with kappa only at s = 0");
    expect(cj["casimir"][1]["matches_printed_label"] == false,
           "label diverges from kappa at s = 1");

    const run_result js = run("gamma --s-max 2 --n-max 2 --format json");
    const json j = json::parse(js.out);
    expect(j["gamma"].is_array() && j["gamma"].size() == 6, "gamma json rows");
    for (const auto& row : j["gamma"]) {
        expect(row.contains("s") && row.contains("n") && row.contains("value") &&
                   row.contains("consistency"),
               "gamma json row shape");
        const std::string c = row["consistency"];
        expect(c == "ok" || c == "singular" || c == "0f1-mismatch" || c == "mismatch",
               "gamma consistency enum");
    }
}

void test_appell_and_ladder() {
    const run_result ap = run("appell --s 3 --n 1 --format csv");
    expect(ap.exit_code == 0, "appell exits 0");
    expect(ap.out.find("1,-1,-1") != std::string::npos, "lambda_1 = -1 at n = 1");

    const run_result lj = run("ladder --s 2 --n 2 --format json");
    const json j = json::parse(lj.out);
    expect(j["lowering_constants"][0]["c"] == "2", "c(1,2) = 2");
    expect(j["lowering_constants"][0]["matches s(s+n-1)"] == true, "c matches s(s+n-1)");
    expect(j["lowering_constants"][0]["matches s(s+n+1)"] == false, "c rejects s(s+n+1)");

    // a seed outside the joint kernel is a mathematical failure: exit 1
    const lattice_params lp{2, rational(1), rational(1), rational(0)};
    write_file(g_tmpdir + "/bad_seed.json",
               dump_canonical(poly_to_json(clifford_poly::variable(lp, 1))));
    expect(run("ladder --s 1 --m0 " + g_tmpdir + "/bad_seed.json").exit_code == 1,
           "non-kernel seed exits 1");
}

void test_decompose_and_evolve() {
    const lattice_params lp{2, rational(1), rational(1), rational(0)};
    const clifford_poly diff =
        clifford_poly::variable(lp, 1) - clifford_poly::variable(lp, 2);
    const std::string diff_path = g_tmpdir + "/diff.json";
    write_file(diff_path, dump_canonical(poly_to_json(diff)));

    const run_result dec = run("decompose --input " + diff_path);
    expect(dec.exit_code == 0, "decompose exits 0");
    const json dj = json::parse(dec.out);
    expect(dj["components"].size() == 1, "x1 - x2 is a single component");
    expect(dj["components"][0]["s"] == 1 && dj["components"][0]["r"] == 0,
           "component labeled (1,0)");

    const run_result ev0 = run("evolve --t 0 --input " + diff_path);
    expect(ev0.exit_code == 0, "evolve exits 0");
    const json e0 = json::parse(ev0.out);
    expect(e0["g"] == poly_to_json(diff), "E(0) is the identity");

    const run_result evh = run("evolve --t 1/2 --input " + diff_path);
    const json eh = json::parse(evh.out);
    expect(eh["g"] == poly_to_json(diff), "joint eigenfunction unchanged at t = 1/2");
    expect(eh["residuals"]["pde"]["t_coeffs"].empty(), "zero PDE residual");
    expect(eh["residuals"]["constraint"]["t_coeffs"].empty(), "zero constraint residual");
    expect(eh["residuals"]["initial_matches_input"] == true, "initial slice matches");

    // input errors exit 2, with the path in the message
    write_file(g_tmpdir + "/broken.json", "{broken");
    expect(run("decompose --input " + g_tmpdir + "/broken.json").exit_code == 2,
           "malformed JSON exits 2");
    expect(run("decompose --input " + g_tmpdir + "/missing.json").exit_code == 2,
           "missing file exits 2");
    const clifford_poly deep = clifford_poly::monomial(lp, {5, 2});
    write_file(g_tmpdir + "/deep.json", dump_canonical(poly_to_json(deep)));
    expect(run("decompose --degree 3 --input " + g_tmpdir + "/deep.json").exit_code == 2,
           "degree bound enforced with exit 2");
}

void test_config_precedence() {
    const std::string cfg_path = g_tmpdir + "/cliflat.cfg";
    write_file(cfg_path, "h=1/3\nn=2\ndegree=2\n");
    const run_result with_cfg =
        run("verify --suite clifford-anticommutation --config " + cfg_path);
    expect(with_cfg.exit_code == 0, "config file accepted");
    const json j1 = json::parse(with_cfg.out);
    expect(j1["params"][0]["h"] == "1/3" && j1["degree"] == 2,
           "config file overrides defaults");

    const run_result with_flag =
        run("verify --suite clifford-anticommutation --config " + cfg_path + " --h 1/2");
    const json j2 = json::parse(with_flag.out);
    expect(j2["params"][0]["h"] == "1/2", "flags override the config file");
}

void test_output_files() {
    const std::string out_path = g_tmpdir + "/report.json";
    const run_result direct = run("verify --suite euler-dual-route");
    const run_result to_file = run("verify --suite euler-dual-route --output " + out_path);
    expect(to_file.exit_code == 0, "file output exits 0");
    expect(slurp(out_path) == direct.out, "file payload equals stdout payload");

    const run_result lr = run("list-relations --format json");
    const json j = json::parse(lr.out);
    bool has_pr = false, has_son = false;
    for (const auto& row : j["relations"]) {
        if (row["id"] == "product-rule-forward") has_pr = true;
        if (row["id"] == "so-n-invariance") has_son = true;
    }
    expect(has_pr && has_son, "registry listing contains the documented ids");
    expect(j["relations"].size() >= 20, "registry count floor");
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cliflat_cli_tests <path-to-cliflat-binary>\n";
        return 2;
    }
    g_bin = argv[1];
    char tmpl[] = "/tmp/cliflat_cli_XXXXXX";
    if (mkdtemp(tmpl) == nullptr) {
        std::cerr << "cannot create temp dir\n";
        return 2;
    }
    g_tmpdir = tmpl;

    test_verify_contract();
    test_byte_identical_reports();
    test_gamma_tables();
    test_appell_and_ladder();
    test_decompose_and_evolve();
    test_config_precedence();
    test_output_files();

    std::cout << checks << " checks, " << failures << " failures\n";
    return failures == 0 ? 0 : 1;
}
