#include "cliflat/relations.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <thread>

namespace cliflat {

using nlohmann::json;

std::string status_str(rel_status s) {
    switch (s) {
    case rel_status::pass: return "pass";
    case rel_status::fail: return "fail";
    case rel_status::adjudicated: return "adjudicated";
    case rel_status::singular: return "singular";
    }
    return "?";
}

namespace {

std::string params_text(const lattice_params& p) {
    return "n=" + std::to_string(p.n) + " h=" + p.h.str() + " mu=" + p.mu.str() +
           " b=" + p.b.str();
}

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t next_u64(std::uint64_t& state) {
    // splitmix64: deterministic across platforms.
    state += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace

rational random_rational(std::uint64_t& state) {
    long num = static_cast<long>(next_u64(state) % 9ull) - 4;
    if (num == 0) num = 2;
    const long den = 1 + static_cast<long>(next_u64(state) % 3ull);
    return rational(num, den);
}

clifford_poly random_poly(const lattice_params& params, int max_degree, bool clifford_valued,
                          std::uint64_t& state) {
    const auto monos = scalar_monomials(params.n, max_degree);
    clifford_poly out = clifford_poly::zero(params);
    const std::size_t terms = 3 + next_u64(state) % 3ull;
    for (std::size_t i = 0; i < terms; ++i) {
        const multi_index& alpha = monos[next_u64(state) % monos.size()];
        blade_mask b = 0;
        if (clifford_valued)
            b = static_cast<blade_mask>(next_u64(state) % (1ull << params.n));
        out.add_term(alpha, random_rational(state) * multivector::basis_blade(params.n, b));
    }
    return out;
}

namespace {

// ---- evaluation helpers ----------------------------------------------------

struct pair_case {
    op_ptr lhs;
    op_ptr rhs;
    std::string detail;
};

using case_builder = std::function<std::vector<pair_case>(const lattice_params&)>;

// Run fn(i) for i < count over the thread budget. The grid is evaluated
// without shared mutable state, so results do not depend on scheduling.
void parallel_indices(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn) {
    threads = std::max(1u, std::min<unsigned>(threads, count == 0 ? 1 : count));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::string> errors(threads);
    auto worker = [&](unsigned slot) {
        try {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                fn(i);
            }
        } catch (const std::exception& e) {
            errors[slot] = e.what();
        }
    };
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker, i);
    for (auto& th : pool) th.join();
    for (const auto& e : errors)
        if (!e.empty()) throw math_error(e);
}

std::optional<counterexample_info> first_ast_failure(const run_config& cfg,
                                                     const case_builder& mk,
                                                     bool include_blades = true) {
    struct task {
        std::size_t param_index;
        const lattice_params* lp;
        pair_case c;
        clifford_poly p;
    };
    std::vector<task> grid;
    for (std::size_t pi = 0; pi < cfg.params.size(); ++pi) {
        const lattice_params& lp = cfg.params[pi];
        const auto basis = monomial_blade_basis(lp, cfg.degree, include_blades);
        for (const pair_case& c : mk(lp))
            for (const auto& p : basis) grid.push_back(task{pi, &cfg.params[pi], c, p});
    }

    // First failure in grid order; threads race only toward smaller indices.
    std::atomic<std::size_t> first_bad{grid.size()};
    std::vector<std::optional<counterexample_info>> found(grid.size());
    parallel_indices(grid.size(), cfg.threads, [&](std::size_t i) {
        if (i > first_bad.load(std::memory_order_relaxed)) return;
        const task& t = grid[i];
        const clifford_poly residual = apply(*t.c.lhs, t.p) - apply(*t.c.rhs, t.p);
        if (!residual.is_zero()) {
            found[i] = counterexample_info{t.param_index, params_text(*t.lp), t.c.detail,
                                           t.p.str(), residual.str()};
            std::size_t cur = first_bad.load();
            while (i < cur && !first_bad.compare_exchange_weak(cur, i)) {
            }
        }
    });
    const std::size_t bad = first_bad.load();
    if (bad < grid.size()) return found[bad];
    return std::nullopt;
}

rel_result assert_ast(const std::string& id, const run_config& cfg, const case_builder& mk,
                      bool include_blades = true) {
    rel_result r;
    r.id = id;
    r.tables = json::object();
    if (auto cx = first_ast_failure(cfg, mk, include_blades)) {
        r.status = rel_status::fail;
        r.counterexample = std::move(cx);
    }
    return r;
}

// Evaluate one candidate AST identity over all params/basis, reporting the
// first counterexample as text.
finding candidate_ast(const run_config& cfg, const std::string& label, const case_builder& mk,
                      bool include_blades = true) {
    finding f;
    f.candidate = label;
    if (auto cx = first_ast_failure(cfg, mk, include_blades)) {
        f.holds = false;
        f.detail = "fails at [" + cx->params_text + "] " + cx->detail + " on " + cx->input +
                   "; residual = " + cx->residual;
    } else {
        f.holds = true;
        f.detail = "holds with zero residual on the full quantified basis";
    }
    return f;
}

rel_result fail_from_exception(const std::string& id, const std::exception& e) {
    rel_result r;
    r.id = id;
    r.status = rel_status::fail;
    counterexample_info cx;
    cx.detail = std::string("exception: ") + e.what();
    r.counterexample = cx;
    r.tables = json::object();
    return r;
}

// ---- small AST builders ----------------------------------------------------

op_ptr zero_op() { return ops::scale(rational(0), ops::identity()); }

op_ptr euler_diff() {
    return ops::sum({ops::euler(+1), ops::scale(rational(-1), ops::euler(-1))});
}

op_ptr euler_shifted(int sign, int n) {
    return ops::sum({ops::euler(sign), ops::scale(rational(n, 2), ops::identity())});
}

op_ptr w_over_h(weight_kind k, const lattice_params& lp) {
    return ops::scale(rational(1) / lp.h, ops::weight_total(k, lp.n));
}

weight_kind wk_of(int sign) { return sign > 0 ? weight_kind::plus : weight_kind::minus; }

// S_jk^{+-h} in the plain-multiplication (printed) form as an AST:
// mu^{-1} w(x_j +- h/2) I equals W_h^{+-j} followed by the inverse shift.
op_ptr plain_weight_mult(int sign, int j) {
    return ops::compose(ops::weight(wk_of(sign), j), ops::shift_op(-sign, j));
}

op_ptr angular_printed_ast(int sign, int j, int k) {
    return ops::sum({ops::compose(plain_weight_mult(sign, j), ops::fdiff(sign, k)),
                     ops::scale(rational(-1),
                                ops::compose(plain_weight_mult(sign, k), ops::fdiff(sign, j)))});
}

// ---- the registry ----------------------------------------------------------

std::vector<relation> build_registry() {
    std::vector<relation> regs;

    auto add = [&](std::string id, std::string citation, std::string description, rel_mode mode,
                   std::function<rel_result(const run_config&)> run) {
        relation rel;
        rel.id = std::move(id);
        rel.citation = std::move(citation);
        rel.description = std::move(description);
        rel.mode = mode;
        rel.run = [id2 = rel.id, mode, fn = std::move(run)](const run_config& cfg) {
            try {
                rel_result r = fn(cfg);
                r.id = id2;
                if (mode == rel_mode::adjudicate && r.status == rel_status::pass)
                    r.status = rel_status::adjudicated;
                return r;
            } catch (const std::exception& e) {
                return fail_from_exception(id2, e);
            }
        };
        regs.push_back(std::move(rel));
    };

    // ---- defining relations -------------------------------------------------

    add("clifford-anticommutation",
        "defining relations e_j e_k + e_k e_j = -2 delta_jk of Cl(0,n)",
        "generator anticommutation checked on all pairs, exhaustively per dimension",
        rel_mode::assert_check, [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            for (std::size_t pi = 0; pi < cfg.params.size(); ++pi) {
                const lattice_params& lp = cfg.params[pi];
                for (int j = 1; j <= lp.n; ++j) {
                    for (int k = 1; k <= lp.n; ++k) {
                        const multivector ej = multivector::basis_vector(lp.n, j);
                        const multivector ek = multivector::basis_vector(lp.n, k);
                        const multivector lhs = mv_mul(ej, ek) + mv_mul(ek, ej);
                        const multivector rhs =
                            multivector::scalar(lp.n, j == k ? rational(-2) : rational(0));
                        if (lhs != rhs) {
                            r.status = rel_status::fail;
                            r.counterexample = counterexample_info{
                                pi, params_text(lp),
                                "j=" + std::to_string(j) + " k=" + std::to_string(k),
                                "e_j, e_k", (lhs - rhs).str()};
                            return r;
                        }
                    }
                }
            }
            return r;
        });

    add("translation-interrelation",
        "translations interrelate forward and backward differences",
        "T_h^{-j} d_h^{+j} = d_h^{-j} and T_h^{+j} d_h^{-j} = d_h^{+j}", rel_mode::assert_check,
        [](const run_config& cfg) {
            return assert_ast("", cfg, [](const lattice_params& lp) {
                std::vector<pair_case> cases;
                for (int j = 1; j <= lp.n; ++j) {
                    cases.push_back({ops::compose(ops::shift_op(-1, j), ops::fdiff(+1, j)),
                                     ops::fdiff(-1, j), "backward route, j=" + std::to_string(j)});
                    cases.push_back({ops::compose(ops::shift_op(+1, j), ops::fdiff(-1, j)),
                                     ops::fdiff(+1, j), "forward route, j=" + std::to_string(j)});
                }
                return cases;
            });
        });

    auto product_rule = [](const run_config& cfg, int dir) {
        rel_result r;
        r.tables = json::object();
        for (std::size_t pi = 0; pi < cfg.params.size(); ++pi) {
            const lattice_params& lp = cfg.params[pi];
            std::uint64_t state = cfg.seed ^ fnv1a("product-rule") ^ (0x9e37ull * pi);
            for (int trial = 0; trial < 3; ++trial) {
                const clifford_poly g = random_poly(lp, 3, false, state);
                const clifford_poly f = random_poly(lp, 3, true, state);
                for (int j = 1; j <= lp.n; ++j) {
                    const clifford_poly lhs = fdiff(poly_mul(g, f), j, dir);
                    const clifford_poly rhs =
                        poly_mul(fdiff(g, j, dir), shift(f, j, dir)) +
                        poly_mul(g, fdiff(f, j, dir));
                    if (lhs != rhs) {
                        r.status = rel_status::fail;
                        r.counterexample = counterexample_info{
                            pi, params_text(lp),
                            "j=" + std::to_string(j) + " trial=" + std::to_string(trial),
                            "g = " + g.str() + "; f = " + f.str(), (lhs - rhs).str()};
                        return r;
                    }
                }
            }
        }
        return r;
    };

    add("product-rule-forward", "Leibniz rule for the forward difference",
        "d_h^{+j}(g f) = (d_h^{+j} g) T_h^{+j} f + g d_h^{+j} f on seeded random pairs",
        rel_mode::assert_check,
        [product_rule](const run_config& cfg) { return product_rule(cfg, +1); });

    add("product-rule-backward", "Leibniz rule for the backward difference",
        "d_h^{-j}(g f) = (d_h^{-j} g) T_h^{-j} f + g d_h^{-j} f on seeded random pairs",
        rel_mode::assert_check,
        [product_rule](const run_config& cfg) { return product_rule(cfg, -1); });

    add("weyl-heisenberg", "Weyl-Heisenberg brackets of differences and weighted shifts",
        "[d^{+j},d^{+k}] = 0, [W^{-j},W^{-k}] = 0, [d^{+j},W^{-k}] = delta I, and mirrored",
        rel_mode::assert_check, [](const run_config& cfg) {
            return assert_ast("", cfg, [](const lattice_params& lp) {
                std::vector<pair_case> cases;
                for (int j = 1; j <= lp.n; ++j) {
                    for (int k = 1; k <= lp.n; ++k) {
                        const std::string jk = " j=" + std::to_string(j) + " k=" + std::to_string(k);
                        const op_ptr delta = j == k ? ops::identity() : zero_op();
                        cases.push_back({ops::commutator(ops::fdiff(+1, j), ops::fdiff(+1, k)),
                                         zero_op(), "[d+,d+]" + jk});
                        cases.push_back(
                            {ops::commutator(ops::weight(weight_kind::minus, j),
                                             ops::weight(weight_kind::minus, k)),
                             zero_op(), "[W-,W-]" + jk});
                        cases.push_back({ops::commutator(ops::fdiff(+1, j),
                                                         ops::weight(weight_kind::minus, k)),
                                         delta, "[d+,W-]" + jk});
                        cases.push_back({ops::commutator(ops::fdiff(-1, j), ops::fdiff(-1, k)),
                                         zero_op(), "[d-,d-]" + jk});
                        cases.push_back(
                            {ops::commutator(ops::weight(weight_kind::plus, j),
                                             ops::weight(weight_kind::plus, k)),
                             zero_op(), "[W+,W+]" + jk});
                        cases.push_back({ops::commutator(ops::fdiff(-1, j),
                                                         ops::weight(weight_kind::plus, k)),
                                         delta, "[d-,W+]" + jk});
                    }
                }
                return cases;
            });
        });

    add("w-bracket-lemma", "graded commuting rules among W_j, W_h^{+j}, W_h^{-j}",
        "[W^{+j},W^{-k}] = 2h delta W_k, [W^{+k},W_j] = h delta W^{+k}, [W_j,W^{-k}] = h delta W^{-k}",
        rel_mode::assert_check, [](const run_config& cfg) {
            return assert_ast("", cfg, [](const lattice_params& lp) {
                std::vector<pair_case> cases;
                for (int j = 1; j <= lp.n; ++j) {
                    for (int k = 1; k <= lp.n; ++k) {
                        const std::string jk = " j=" + std::to_string(j) + " k=" + std::to_string(k);
                        const bool diag = j == k;
                        cases.push_back(
                            {ops::commutator(ops::weight(weight_kind::plus, j),
                                             ops::weight(weight_kind::minus, k)),
                             diag ? ops::scale(rational(2) * lp.h, ops::weight(weight_kind::mid, k))
                                  : zero_op(),
                             "[W+j,W-k]" + jk});
                        cases.push_back(
                            {ops::commutator(ops::weight(weight_kind::plus, k),
                                             ops::weight(weight_kind::mid, j)),
                             diag ? ops::scale(lp.h, ops::weight(weight_kind::plus, k)) : zero_op(),
                             "[W+k,Wj]" + jk});
                        cases.push_back(
                            {ops::commutator(ops::weight(weight_kind::mid, j),
                                             ops::weight(weight_kind::minus, k)),
                             diag ? ops::scale(lp.h, ops::weight(weight_kind::minus, k)) : zero_op(),
                             "[Wj,W-k]" + jk});
                    }
                }
                return cases;
            });
        });

    add("factorized-hamiltonian", "anticommutator factorization of the discrete Hamiltonians",
        "M^+ D^- + D^- M^+ = -2E^+ - nI and M^- D^+ + D^+ M^- = -2E^- - nI",
        rel_mode::assert_check, [](const run_config& cfg) {
            return assert_ast("", cfg, [](const lattice_params& lp) {
                std::vector<pair_case> cases;
                for (int sign : {+1, -1}) {
                    cases.push_back(
                        {ops::anticommutator(ops::raise(sign), ops::dirac(-sign)),
                         ops::sum({ops::scale(rational(-2), ops::euler(sign)),
                                   ops::scale(rational(-lp.n), ops::identity())}),
                         std::string("sign ") + (sign > 0 ? "+" : "-")});
                }
                return cases;
            });
        });

    add("euler-dual-route", "two defining routes for the discrete Euler operators",
        "E^+ = sum_j mu^{-1}w(x_j+h/2) d^{+j} equals sum_j W^{+j} d^{-j}, and mirrored",
        rel_mode::assert_check, [](const run_config& cfg) {
            return assert_ast("", cfg, [](const lattice_params& lp) {
                return std::vector<pair_case>{
                    {ops::euler(+1), ops::euler_composed(+1, lp.n), "forward"},
                    {ops::euler(-1), ops::euler_composed(-1, lp.n), "backward"}};
            });
        });

    add("euler-coordinate-expression", "coordinate expressions of E_h^{+-} in the W operators",
        "E^+ = (1/h)W^+ - (1/h)W - (n/2)I and E^- = (1/h)W - (1/h)W^- - (n/2)I",
        rel_mode::assert_check, [](const run_config& cfg) {
            return assert_ast("", cfg, [](const lattice_params& lp) {
                const op_ptr half_n = ops::scale(rational(-lp.n, 2), ops::identity());
                return std::vector<pair_case>{
                    {ops::euler(+1),
                     ops::sum({w_over_h(weight_kind::plus, lp),
                               ops::scale(rational(-1), w_over_h(weight_kind::mid, lp)), half_n}),
                     "E+"},
                    {ops::euler(-1),
                     ops::sum({w_over_h(weight_kind::mid, lp),
                               ops::scale(rational(-1), w_over_h(weight_kind::minus, lp)), half_n}),
                     "E-"}};
            });
        });

    add("euler-sum-difference", "sum and difference of E_h^+ and E_h^- in the W operators",
        "E^+ + E^- = (1/h)W^+ - (1/h)W^- - nI and E^+ - E^- = (1/h)(W^+ + W^- - 2W)",
        rel_mode::assert_check, [](const run_config& cfg) {
            return assert_ast("", cfg, [](const lattice_params& lp) {
                return std::vector<pair_case>{
                    {ops::sum({ops::euler(+1), ops::euler(-1)}),
                     ops::sum({w_over_h(weight_kind::plus, lp),
                               ops::scale(rational(-1), w_over_h(weight_kind::minus, lp)),
                               ops::scale(rational(-lp.n), ops::identity())}),
                     "sum"},
                    {euler_diff(),
                     ops::sum({w_over_h(weight_kind::plus, lp), w_over_h(weight_kind::minus, lp),
                               ops::scale(rational(-2), w_over_h(weight_kind::mid, lp))}),
                     "difference"}};
            });
        });

    // ---- su(1,1) structure ---------------------------------------------------

    add("su11-raising-bracket", "su(1,1) bracket of the raising and middle generators",
        "[(1/h)W^+, (1/h)W] = (1/h)W^+", rel_mode::assert_check, [](const run_config& cfg) {
            return assert_ast("", cfg, [](const lattice_params& lp) {
                return std::vector<pair_case>{
                    {ops::commutator(w_over_h(weight_kind::plus, lp), w_over_h(weight_kind::mid, lp)),
                     w_over_h(weight_kind::plus, lp), ""}};
            });
        });

    add("su11-plus-minus-bracket", "su(1,1) bracket of the raising and lowering generators",
        "[(1/h)W^+, (1/h)W^-] = (2/h)W", rel_mode::assert_check, [](const run_config& cfg) {
            return assert_ast("", cfg, [](const lattice_params& lp) {
                return std::vector<pair_case>{
                    {ops::commutator(w_over_h(weight_kind::plus, lp),
                                     w_over_h(weight_kind::minus, lp)),
                     ops::scale(rational(2), w_over_h(weight_kind::mid, lp)), ""}};
            });
        });

    add("su11-bracket-Wminus-W", "candidate right sides for [(1/h)W^-, (1/h)W]",
        "two printed candidates, -(1/h)W and -(1/h)W^-; exactly one should hold",
        rel_mode::adjudicate, [](const run_config& cfg) {
            rel_result r;
            auto mk = [](op_ptr (*rhs)(const lattice_params&)) {
                return [rhs](const lattice_params& lp) {
                    return std::vector<pair_case>{
                        {ops::commutator(w_over_h(weight_kind::minus, lp),
                                         w_over_h(weight_kind::mid, lp)),
                         rhs(lp), ""}};
                };
            };
            r.findings.push_back(candidate_ast(
                cfg, "-(1/h)W", mk(+[](const lattice_params& lp) {
                    return ops::scale(rational(-1), w_over_h(weight_kind::mid, lp));
                })));
            r.findings.push_back(candidate_ast(
                cfg, "-(1/h)W_h^-", mk(+[](const lattice_params& lp) {
                    return ops::scale(rational(-1), w_over_h(weight_kind::minus, lp));
                })));
            json winners = json::array();
            for (const auto& f : r.findings)
                if (f.holds) winners.push_back(f.candidate);
            r.tables = json{{"winner", winners}};
            return r;
        });

    add("su11-euler-lemma", "su(1,1) brackets of E^{+-}+n/2, E^+-E^-, (1/h)W^{+-}",
        "[E^{+-}+n/2, E^+-E^-] = E^--E^+, [E^{+-}+n/2, (1/h)W^{+-}] = (1/h)W^{+-}, "
        "[E^+-E^-, (1/h)W^{+-}] = 2(E^{+-}+n/2)",
        rel_mode::assert_check, [](const run_config& cfg) {
            return assert_ast("", cfg, [](const lattice_params& lp) {
                std::vector<pair_case> cases;
                for (int sign : {+1, -1}) {
                    const std::string tag = sign > 0 ? "+" : "-";
                    cases.push_back({ops::commutator(euler_shifted(sign, lp.n), euler_diff()),
                                     ops::scale(rational(-1), euler_diff()),
                                     "[E" + tag + "+n/2, E+-E-]"});
                    cases.push_back(
                        {ops::commutator(euler_shifted(sign, lp.n), w_over_h(wk_of(sign), lp)),
                         w_over_h(wk_of(sign), lp), "[E" + tag + "+n/2, (1/h)W" + tag + "]"});
                    cases.push_back(
                        {ops::commutator(euler_diff(), w_over_h(wk_of(sign), lp)),
                         ops::scale(rational(2), euler_shifted(sign, lp.n)),
                         "[E+-E-, (1/h)W" + tag + "]"});
                }
                return cases;
            });
        });

    add("powers-proposition", "s-indexed commutators with powers of the ladder generators",
        "[E^{+-}+n/2, (E^+-E^-)^s] = -s(E^+-E^-)^s, [E^{+-}+n/2, ((1/h)W^{+-})^s] = "
        "s((1/h)W^{+-})^s, [E^+-E^-, ((1/h)W^{+-})^s] = s(2E^{+-}+(n-s+1)I)((1/h)W^{+-})^{s-1}",
        rel_mode::assert_check, [](const run_config& cfg) {
            return assert_ast("", cfg, [](const lattice_params& lp) {
                std::vector<pair_case> cases;
                for (int sign : {+1, -1}) {
                    const std::string tag = sign > 0 ? "+" : "-";
                    for (unsigned s = 1; s <= 4; ++s) {
                        const rational s_rat(static_cast<long>(s));
                        const op_ptr wpow = ops::power(w_over_h(wk_of(sign), lp), s);
                        cases.push_back(
                            {ops::commutator(euler_shifted(sign, lp.n),
                                             ops::power(euler_diff(), s)),
                             ops::scale(-s_rat, ops::power(euler_diff(), s)),
                             "identity 1, sign " + tag + ", s=" + std::to_string(s)});
                        cases.push_back({ops::commutator(euler_shifted(sign, lp.n), wpow),
                                         ops::scale(s_rat, wpow),
                                         "identity 2, sign " + tag + ", s=" + std::to_string(s)});
                        cases.push_back(
                            {ops::commutator(euler_diff(), wpow),
                             ops::scale(s_rat,
                                        ops::compose(
                                            ops::sum({ops::scale(rational(2), ops::euler(sign)),
                                                      ops::scale(rational(lp.n) - s_rat +
                                                                     rational(1),
                                                                 ops::identity())}),
                                            ops::power(w_over_h(wk_of(sign), lp), s - 1))),
                             "identity 3, sign " + tag + ", s=" + std::to_string(s)});
                    }
                }
                return cases;
            });
        });

    add("summation-lemma", "[A, B^s] = sum_r B^r [A,B] B^{s-1-r}",
        "checked for seeded random primitive pairs and s <= 3", rel_mode::assert_check,
        [](const run_config& cfg) {
            return assert_ast("", cfg, [&cfg](const lattice_params& lp) {
                std::uint64_t state = cfg.seed ^ fnv1a("summation-lemma");
                auto pick = [&](std::uint64_t& st) -> op_ptr {
                    const int axis = 1 + static_cast<int>(next_u64(st) % lp.n);
                    switch (next_u64(st) % 7ull) {
                    case 0: return ops::fdiff(+1, axis);
                    case 1: return ops::fdiff(-1, axis);
                    case 2: return ops::weight(weight_kind::plus, axis);
                    case 3: return ops::weight(weight_kind::minus, axis);
                    case 4: return ops::weight(weight_kind::mid, axis);
                    case 5: return ops::dirac(next_u64(st) % 2 ? +1 : -1);
                    default: return ops::raise(next_u64(st) % 2 ? +1 : -1);
                    }
                };
                std::vector<pair_case> cases;
                for (int trial = 0; trial < 4; ++trial) {
                    const op_ptr a = pick(state);
                    const op_ptr b = pick(state);
                    for (unsigned s = 2; s <= 3; ++s) {
                        std::vector<op_ptr> parts;
                        for (unsigned rr = 0; rr < s; ++rr)
                            parts.push_back(ops::compose(ops::power(b, rr),
                                                         ops::commutator(a, b),
                                                         ops::power(b, s - 1 - rr)));
                        cases.push_back({ops::commutator(a, ops::power(b, s)),
                                         ops::sum(std::move(parts)),
                                         "trial " + std::to_string(trial) + ", s=" +
                                             std::to_string(s)});
                    }
                }
                return cases;
            });
        });

    // ---- Sheffer map and angular momenta --------------------------------------

    add("sheffer-pairing",
        "the Sheffer map turns coordinates into weighted shifts and derivatives into differences",
        "Psi x_j = W^{+-j} Psi and Psi d/dx_j = d_h^{-+j} Psi on scalar monomials",
        rel_mode::assert_check, [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            for (std::size_t pi = 0; pi < cfg.params.size(); ++pi) {
                const lattice_params& lp = cfg.params[pi];
                for (const auto& alpha : scalar_monomials(lp.n, std::max(cfg.degree - 1, 0))) {
                    const clifford_poly p = clifford_poly::monomial(lp, alpha);
                    for (int sign : {+1, -1}) {
                        const clifford_poly psi_p = sheffer_map(p, sign);
                        for (int j = 1; j <= lp.n; ++j) {
                            const clifford_poly lhs1 =
                                sheffer_map(poly_mul(clifford_poly::variable(lp, j), p), sign);
                            const clifford_poly rhs1 = weight_apply(psi_p, j, wk_of(sign));
                            const clifford_poly lhs2 = sheffer_map(poly_derivative(p, j), sign);
                            const clifford_poly rhs2 = fdiff(psi_p, j, -sign);
                            if (lhs1 != rhs1 || lhs2 != rhs2) {
                                r.status = rel_status::fail;
                                r.counterexample = counterexample_info{
                                    pi, params_text(lp),
                                    std::string("sign ") + (sign > 0 ? "+" : "-") + ", j=" +
                                        std::to_string(j),
                                    p.str(),
                                    (lhs1 != rhs1 ? (lhs1 - rhs1) : (lhs2 - rhs2)).str()};
                                return r;
                            }
                        }
                    }
                }
            }
            return r;
        });

    auto sheffer_intertwine_candidate = [](const run_config& cfg, bool weight_shift_form) {
        finding f;
        f.candidate = weight_shift_form ? "weight-shift form W^{+-j} d^{-+k} - W^{+-k} d^{-+j}"
                                        : "plain-multiplication form mu^{-1}w(x_j +- h/2) d^{+-k} "
                                          "- mu^{-1}w(x_k +- h/2) d^{+-j}";
        f.holds = true;
        for (std::size_t pi = 0; pi < cfg.params.size() && f.holds; ++pi) {
            const lattice_params& lp = cfg.params[pi];
            for (const auto& alpha : scalar_monomials(lp.n, cfg.degree)) {
                const clifford_poly p = clifford_poly::monomial(lp, alpha);
                bool done = false;
                for (int sign : {+1, -1}) {
                    for (int j = 1; j <= lp.n && !done; ++j) {
                        for (int k = 1; k <= lp.n && !done; ++k) {
                            if (j == k) continue;
                            const clifford_poly ljk =
                                poly_mul(clifford_poly::variable(lp, j), poly_derivative(p, k)) -
                                poly_mul(clifford_poly::variable(lp, k), poly_derivative(p, j));
                            const clifford_poly lhs = sheffer_map(ljk, sign);
                            const clifford_poly psi_p = sheffer_map(p, sign);
                            const clifford_poly rhs =
                                weight_shift_form ? angular_weight_shift(psi_p, j, k, sign)
                                                  : angular(psi_p, j, k, sign);
                            if (lhs != rhs) {
                                f.holds = false;
                                f.detail = "fails at [" + params_text(lp) + "] sign " +
                                           (sign > 0 ? "+" : "-") + ", j=" + std::to_string(j) +
                                           ", k=" + std::to_string(k) + " on " + p.str() +
                                           "; residual = " + (lhs - rhs).str();
                                done = true;
                            }
                        }
                    }
                    if (done) break;
                }
                if (done) break;
            }
        }
        if (f.holds) f.detail = "holds with zero residual on all quantified monomials";
        return f;
    };

    add("sheffer-intertwining", "which discrete angular momentum satisfies Psi L_jk = S_jk Psi",
        "the plain-multiplication and weight-shift forms of S_jk^{+-h} are both tested "
        "against the Sheffer intertwining; only one can be the image of L_jk",
        rel_mode::adjudicate, [sheffer_intertwine_candidate](const run_config& cfg) {
            rel_result r;
            if (std::any_of(cfg.params.begin(), cfg.params.end(),
                            [](const lattice_params& lp) { return lp.n >= 2; })) {
                r.findings.push_back(sheffer_intertwine_candidate(cfg, false));
                r.findings.push_back(sheffer_intertwine_candidate(cfg, true));
            }
            json winners = json::array();
            for (const auto& f : r.findings)
                if (f.holds) winners.push_back(f.candidate);
            r.tables = json{{"winner", winners}};
            return r;
        });

    add("so-n-invariance", "does E_h^+ - E_h^- commute with the discrete angular momenta",
        "[E^+-E^-, S_jk^{+-h}] = 0 is evaluated for both readings of S_jk^{+-h}; the "
        "matching-sign statements [E^{+-}, S_jk^{+-h}] = 0 are evaluated as well",
        rel_mode::adjudicate, [](const run_config& cfg) {
            rel_result r;
            const bool has2d = std::any_of(cfg.params.begin(), cfg.params.end(),
                                           [](const lattice_params& lp) { return lp.n >= 2; });
            if (!has2d) {
                r.tables = json{{"winner", json::array()}};
                return r;
            }
            auto pairs_for = [](const lattice_params& lp, bool weight_shift_form,
                                bool matching_sign) {
                std::vector<pair_case> cases;
                if (lp.n < 2) return cases;
                for (int sign : {+1, -1}) {
                    for (int j = 1; j <= lp.n; ++j) {
                        for (int k = j + 1; k <= lp.n; ++k) {
                            const op_ptr s_jk = weight_shift_form
                                                    ? ops::angular_weight_shift(sign, j, k)
                                                    : angular_printed_ast(sign, j, k);
                            const op_ptr lhs_op = matching_sign ? ops::euler(sign) : euler_diff();
                            cases.push_back({ops::commutator(lhs_op, s_jk), zero_op(),
                                             std::string("sign ") + (sign > 0 ? "+" : "-") +
                                                 ", j=" + std::to_string(j) + ", k=" +
                                                 std::to_string(k)});
                        }
                    }
                }
                return cases;
            };
            r.findings.push_back(candidate_ast(
                cfg, "[E^+-E^-, S] = 0, plain-multiplication S",
                [&](const lattice_params& lp) { return pairs_for(lp, false, false); }));
            r.findings.push_back(candidate_ast(
                cfg, "[E^+-E^-, S] = 0, weight-shift S",
                [&](const lattice_params& lp) { return pairs_for(lp, true, false); }));
            r.findings.push_back(candidate_ast(
                cfg, "[E^{+-}, S^{+-}] = 0 (matching sign), weight-shift S",
                [&](const lattice_params& lp) { return pairs_for(lp, true, true); }));
            r.findings.push_back(candidate_ast(
                cfg, "[E^{+-}, S^{+-}] = 0 (matching sign), plain-multiplication S",
                [&](const lattice_params& lp) { return pairs_for(lp, false, true); }));
            json winners = json::array();
            for (const auto& f : r.findings)
                if (f.holds) winners.push_back(f.candidate);
            r.tables = json{{"winner", winners}};
            return r;
        });

    add("degree-lowering", "E_h^+ - E_h^- strictly lowers polynomial degree",
        "deg((E^+-E^-) p) <= deg(p) - 1 for every basis monomial", rel_mode::assert_check,
        [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            for (std::size_t pi = 0; pi < cfg.params.size(); ++pi) {
                const lattice_params& lp = cfg.params[pi];
                for (const auto& p : monomial_blade_basis(lp, cfg.degree)) {
                    const clifford_poly low = lowering(p);
                    if (low.degree() > p.degree() - 1) {
                        r.status = rel_status::fail;
                        r.counterexample = counterexample_info{
                            pi, params_text(lp),
                            "degree " + std::to_string(low.degree()) + " not lowered", p.str(),
                            low.str()};
                        return r;
                    }
                }
            }
            return r;
        });

    // ---- ladders, Casimir, gamma ----------------------------------------------

    add("ladder-eigenvalue", "E_h^{+-} w_s = s w_s on the raised joint kernel",
        "w_s = ((1/h)W^{+-})^s m_0 with m_0 = 1; eigenvalue equations verified exactly for "
        "s <= 6",
        rel_mode::assert_check, [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            for (const auto& lp : cfg.params) {
                const clifford_poly one = clifford_poly::constant(lp, rational(1));
                build_ladder(+1, one, 6);
                build_ladder(-1, one, 6);
            }
            return r;
        });

    add("ladder-lowering-constant", "closed form of (E^+ - E^-) w_s = c(s,n) w_{s-1}",
        "c(s,n) is extracted exactly for s <= 6 and compared against the two candidate "
        "closed forms s(s+n+1) and s(s+n-1)",
        rel_mode::adjudicate, [](const run_config& cfg) {
            rel_result r;
            bool plus_all = true, minus_all = true;
            json rows = json::array();
            for (const auto& lp : cfg.params) {
                const clifford_poly one = clifford_poly::constant(lp, rational(1));
                for (int sign : {+1, -1}) {
                    const ladder_basis lb = build_ladder(sign, one, 6);
                    for (unsigned s = 1; s <= 6; ++s) {
                        const rational c = lb.lowering_c[s - 1];
                        const rational plus(static_cast<long>(s) * (s + lp.n + 1));
                        const rational minus(static_cast<long>(s) * (s + lp.n - 1));
                        plus_all = plus_all && (c == plus);
                        minus_all = minus_all && (c == minus);
                        if (sign > 0)
                            rows.push_back(json{{"s", s},
                                                {"n", lp.n},
                                                {"c", c.str()},
                                                {"matches s(s+n+1)", c == plus},
                                                {"matches s(s+n-1)", c == minus}});
                    }
                }
            }
            r.findings.push_back(
                finding{"c(s,n) = s(s+n+1)", plus_all,
                        plus_all ? "matches every extracted constant" : "contradicted by table"});
            r.findings.push_back(
                finding{"c(s,n) = s(s+n-1)", minus_all,
                        minus_all ? "matches every extracted constant" : "contradicted by table"});
            json winners = json::array();
            for (const auto& f : r.findings)
                if (f.holds) winners.push_back(f.candidate);
            r.tables = json{{"winner", winners}, {"c_table", rows}};
            return r;
        });

    add("casimir-constancy", "the Casimir eigenvalue on w_s is independent of s",
        "pi^{+-}(K_h) w_s = kappa(s,n) w_s with kappa extracted exactly for s <= 5; "
        "constancy in s is asserted as computed",
        rel_mode::assert_check, [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            for (std::size_t pi = 0; pi < cfg.params.size(); ++pi) {
                const lattice_params& lp = cfg.params[pi];
                const clifford_poly one = clifford_poly::constant(lp, rational(1));
                for (int sign : {+1, -1}) {
                    const ladder_basis lb = build_ladder(sign, one, 5);
                    std::optional<rational> kappa;
                    for (unsigned s = 0; s <= 5; ++s) {
                        const auto ratio =
                            proportionality(casimir_apply(lb.w[s], sign), lb.w[s]);
                        if (!ratio) {
                            r.status = rel_status::fail;
                            r.counterexample = counterexample_info{
                                pi, params_text(lp), "w_s not a Casimir eigenfunction at s=" +
                                                         std::to_string(s),
                                lb.w[s].str(), ""};
                            return r;
                        }
                        if (!kappa) kappa = ratio;
                        if (*ratio != *kappa) {
                            r.status = rel_status::fail;
                            r.counterexample = counterexample_info{
                                pi, params_text(lp),
                                "kappa varies: " + kappa->str() + " vs " + ratio->str() +
                                    " at s=" + std::to_string(s),
                                lb.w[s].str(), ""};
                            return r;
                        }
                    }
                }
            }
            return r;
        });

    add("casimir-label", "value of the Casimir eigenvalue versus the printed series label",
        "kappa(s,n) is compared against the printed label n^2/4 - n/2 - 2s and against the "
        "s-independent value n^2/4 - n/2",
        rel_mode::adjudicate, [](const run_config& cfg) {
            rel_result r;
            bool label_all = true, const_all = true;
            json rows = json::array();
            for (const auto& lp : cfg.params) {
                const clifford_poly one = clifford_poly::constant(lp, rational(1));
                const rational base = rational(lp.n * lp.n, 4) - rational(lp.n, 2);
                for (int sign : {+1, -1}) {
                    const ladder_basis lb = build_ladder(sign, one, 5);
                    for (unsigned s = 0; s <= 5; ++s) {
                        const auto kappa =
                            proportionality(casimir_apply(lb.w[s], sign), lb.w[s]);
                        if (!kappa) throw math_error("casimir-label: non-eigenfunction");
                        const rational label = base - rational(2l * static_cast<long>(s));
                        label_all = label_all && (*kappa == label);
                        const_all = const_all && (*kappa == base);
                        if (sign > 0)
                            rows.push_back(json{{"s", s},
                                                {"n", lp.n},
                                                {"kappa", kappa->str()},
                                                {"printed label", label.str()}});
                    }
                }
            }
            r.findings.push_back(finding{"kappa(s,n) = n^2/4 - n/2 - 2s (printed label)",
                                         label_all,
                                         label_all ? "matches" : "varies with s only in the label; "
                                                                 "kappa itself does not"});
            r.findings.push_back(finding{"kappa(s,n) = n^2/4 - n/2 (s-independent)", const_all,
                                         const_all ? "matches every extracted eigenvalue"
                                                   : "contradicted by table"});
            json winners = json::array();
            for (const auto& f : r.findings)
                if (f.holds) winners.push_back(f.candidate);
            r.tables = json{{"winner", winners}, {"kappa_table", rows}};
            return r;
        });

    add("gamma-2f1-truncation", "gamma_s equals the truncated 2F1 series",
        "direct summation versus the s-term 2F1(-s-n-1, -s; -2s-n+2; 1) truncation, "
        "s <= 20, n <= 5",
        rel_mode::assert_check, [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            (void)cfg;
            bool any_singular = false;
            for (unsigned s = 0; s <= 20; ++s) {
                for (int n = 1; n <= 5; ++n) {
                    const gamma_value d = gamma_direct(s, n);
                    const gamma_value f = gamma_2f1(s, n);
                    if (d.singular() || f.singular()) {
                        any_singular = true;
                        continue;
                    }
                    if (*d.value != *f.value) {
                        r.status = rel_status::fail;
                        r.counterexample = counterexample_info{
                            0, "", "s=" + std::to_string(s) + " n=" + std::to_string(n),
                            "gamma_s", d.value->str() + " vs " + f.value->str()};
                        return r;
                    }
                }
            }
            if (any_singular) r.status = rel_status::singular;
            return r;
        });

    add("gamma-0f1-formula", "differential-shortcut formulas for gamma_s",
        "the printed 0F1(-2s-n+2; d/dt) shortcut and the corrected 1F1(-s-n-1; -2s-n+2; "
        "-d/dt) form are both compared against the direct sum, s <= 20, n <= 5",
        rel_mode::adjudicate, [](const run_config& cfg) {
            (void)cfg;
            rel_result r;
            bool printed_all = true, corrected_all = true;
            json mismatches = json::array();
            for (unsigned s = 0; s <= 20; ++s) {
                for (int n = 1; n <= 5; ++n) {
                    const gamma_value d = gamma_direct(s, n);
                    const gamma_value f01 = gamma_0f1(s, n);
                    const gamma_value f11 = gamma_1f1_corrected(s, n);
                    if (d.singular()) continue;
                    if (!f01.singular() && *f01.value != *d.value) {
                        printed_all = false;
                        if (mismatches.size() < 6)
                            mismatches.push_back(json{{"s", s},
                                                      {"n", n},
                                                      {"direct", d.value->str()},
                                                      {"0F1", f01.value->str()}});
                    }
                    if (f11.singular() || *f11.value != *d.value) corrected_all = false;
                }
            }
            r.findings.push_back(finding{
                "gamma_s = [0F1(-2s-n+2; d/dt) t^s]_{t=1} (printed)", printed_all,
                printed_all ? "matches" : "disagrees with the direct sum; see mismatch table"});
            r.findings.push_back(finding{
                "gamma_s = [1F1(-s-n-1; -2s-n+2; -d/dt) t^s]_{t=1} (corrected)", corrected_all,
                corrected_all ? "matches the direct sum exactly" : "disagrees"});
            json winners = json::array();
            for (const auto& f : r.findings)
                if (f.holds) winners.push_back(f.candidate);
            r.tables = json{{"winner", winners}, {"mismatches", mismatches}};
            return r;
        });

    // ---- Appell sequences -------------------------------------------------------

    add("appell-property", "the normalized sequences satisfy D_h^{-+} m_s = s m_{s-1}",
        "u_s = (M^{+-})^s 1 with measured proportionality constants; the normalized m_s "
        "must satisfy the defining relations exactly for s <= 6",
        rel_mode::assert_check, [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            for (const auto& lp : cfg.params) {
                build_appell(+1, 6, lp);
                build_appell(-1, 6, lp);
            }
            return r;
        });

    add("appell-binomial", "exp(t D) acts binomially on the Appell sequence",
        "exp(t D^{-+}) m_s = sum_r C(s,r) t^r m_{s-r} for s <= 4 at rational t",
        rel_mode::assert_check, [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            const std::vector<rational> ts = {rational(1), rational(1, 2), rational(-2, 3)};
            for (std::size_t pi = 0; pi < cfg.params.size(); ++pi) {
                const lattice_params& lp = cfg.params[pi];
                for (int sign : {+1, -1}) {
                    const appell_sequence ap = build_appell(sign, 4, lp);
                    for (unsigned s = 0; s <= 4; ++s) {
                        for (const rational& t : ts) {
                            clifford_poly rhs = clifford_poly::zero(lp);
                            for (unsigned rr = 0; rr <= s; ++rr)
                                rhs = rhs + binomial_rat(s, rr) * t.pow(rr) * ap.m[s - rr];
                            const clifford_poly lhs = dirac_exp(t, -sign, ap.m[s]);
                            if (lhs != rhs) {
                                r.status = rel_status::fail;
                                r.counterexample = counterexample_info{
                                    pi, params_text(lp),
                                    std::string("sign ") + (sign > 0 ? "+" : "-") + ", s=" +
                                        std::to_string(s) + ", t=" + t.str(),
                                    ap.m[s].str(), (lhs - rhs).str()};
                                return r;
                            }
                        }
                    }
                }
            }
            return r;
        });

    // ---- eigenspaces and Fourier decomposition ----------------------------------

    add("fourier-reconstruction", "multiplicity-free Fourier decomposition reconstructs exactly",
        "basis monomials and 20 seeded random polynomials of degree <= 3 are decomposed "
        "into raised joint eigenspaces and reassembled exactly",
        rel_mode::assert_check, [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            for (std::size_t pi = 0; pi < cfg.params.size(); ++pi) {
                const lattice_params& lp = cfg.params[pi];
                std::uint64_t state = cfg.seed ^ fnv1a("fourier-reconstruction") ^ pi;
                const int d = std::min(cfg.degree, 3);
                std::vector<clifford_poly> inputs = monomial_blade_basis(lp, std::min(d, 2));
                for (int i = 0; i < 20; ++i) inputs.push_back(random_poly(lp, d, true, state));
                for (const auto& p : inputs) {
                    for (int sign : {+1, -1}) {
                        try {
                            fourier_decompose(p, sign); // throws on nonzero residual
                        } catch (const math_error& e) {
                            r.status = rel_status::fail;
                            r.counterexample = counterexample_info{pi, params_text(lp),
                                                                   std::string("sign ") +
                                                                       (sign > 0 ? "+" : "-"),
                                                                   p.str(), e.what()};
                            return r;
                        }
                    }
                }
            }
            return r;
        });

    add("almansi-reconstruction",
        "printed recursion for joint eigenfunctions from ladder elements",
        "M = sum_r c_{r,s} ((1/h)W^{+-})^r (E^+-E^-)^r w_s with the printed c-recursion; "
        "the eigenvalue equations and the proportionality M = gamma_s w_s are recorded",
        rel_mode::adjudicate, [](const run_config& cfg) {
            rel_result r;
            bool eigen_all = true, gamma_all = true;
            json rows = json::array();
            for (const auto& lp : cfg.params) {
                const clifford_poly one = clifford_poly::constant(lp, rational(1));
                for (int sign : {+1, -1}) {
                    const ladder_basis lb = build_ladder(sign, one, 3);
                    for (unsigned s = 1; s <= 3; ++s) {
                        const almansi_record rec = almansi_reconstruct(s, sign, lb.w[s]);
                        eigen_all = eigen_all && rec.eigen_ok;
                        gamma_all = gamma_all && rec.matches_gamma_scaling;
                        if (sign > 0)
                            rows.push_back(json{
                                {"s", s},
                                {"n", lp.n},
                                {"eigen_ok", rec.eigen_ok},
                                {"constructed", rec.constructed.str()},
                                {"gamma", rec.gamma ? rec.gamma->str() : "singular"},
                                {"ratio", rec.actual_ratio ? rec.actual_ratio->str()
                                                           : "not proportional"}});
                    }
                }
            }
            r.findings.push_back(finding{
                "constructed M satisfies E^+ M = E^- M = s M", eigen_all,
                eigen_all ? "holds (the construction collapses to M = 0 for s >= 1)"
                          : "fails"});
            r.findings.push_back(finding{
                "constructed M equals gamma_s w_s", gamma_all,
                gamma_all ? "holds" : "fails: the recursion annihilates w_s instead of rescaling "
                                      "it; see table"});
            json winners = json::array();
            for (const auto& f : r.findings)
                if (f.holds) winners.push_back(f.candidate);
            r.tables = json{{"winner", winners}, {"records", rows}};
            return r;
        });

    // ---- evolution ---------------------------------------------------------------

    add("lowering-nilpotency", "the semigroup generator is nilpotent on bounded degree",
        "(E^- - E^+)^{deg(p)+1} p = 0 for every basis monomial", rel_mode::assert_check,
        [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            for (std::size_t pi = 0; pi < cfg.params.size(); ++pi) {
                const lattice_params& lp = cfg.params[pi];
                for (const auto& p : monomial_blade_basis(lp, cfg.degree)) {
                    clifford_poly it = p;
                    for (int k = 0; k <= p.degree() && !it.is_zero(); ++k) it = lowering(it);
                    if (!(it.is_zero() || lowering(it).is_zero())) {
                        r.status = rel_status::fail;
                        r.counterexample = counterexample_info{pi, params_text(lp),
                                                               "nilpotency bound exceeded",
                                                               p.str(), lowering(it).str()};
                        return r;
                    }
                }
            }
            return r;
        });

    add("semigroup-law", "E(t+tau) = E(t) E(tau)",
        "exact equality on the monomial-blade basis for seeded rational pairs",
        rel_mode::assert_check, [](const run_config& cfg) {
            std::uint64_t state = cfg.seed ^ fnv1a("semigroup-law");
            std::vector<std::pair<rational, rational>> pairs = {
                {rational(0), rational(0)}, {rational(1, 2), rational(1, 2)}};
            for (int i = 0; i < 5; ++i)
                pairs.emplace_back(random_rational(state), random_rational(state));
            return assert_ast("", cfg, [pairs](const lattice_params&) {
                std::vector<pair_case> cases;
                for (const auto& [t, tau] : pairs)
                    cases.push_back(
                        {ops::evolution(t + tau),
                         ops::compose(ops::evolution(t), ops::evolution(tau)),
                         "t=" + t.str() + ", tau=" + tau.str()});
                return cases;
            });
        });

    add("semigroup-inverse", "E(-t) E(t) = identity",
        "inverse evolution checked exactly on the monomial-blade basis", rel_mode::assert_check,
        [](const run_config& cfg) {
            std::uint64_t state = cfg.seed ^ fnv1a("semigroup-inverse");
            std::vector<rational> ts = {rational(1, 2), rational(1)};
            ts.push_back(random_rational(state));
            return assert_ast("", cfg, [ts](const lattice_params&) {
                std::vector<pair_case> cases;
                for (const rational& t : ts)
                    cases.push_back({ops::compose(ops::evolution(-t), ops::evolution(t)),
                                     ops::identity(), "t=" + t.str()});
                return cases;
            });
        });

    add("cauchy-pde-residual", "trajectories solve dg/dt + E^+ g - E^- g = 0 identically",
        "the symbolic-in-t trajectory of every basis element has identically zero "
        "residual and reproduces the initial value at t = 0",
        rel_mode::assert_check, [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            for (std::size_t pi = 0; pi < cfg.params.size(); ++pi) {
                const lattice_params& lp = cfg.params[pi];
                for (const auto& p : monomial_blade_basis(lp, cfg.degree)) {
                    const time_poly g = semigroup_trajectory(p);
                    const cauchy_report rep = cauchy_verify(g);
                    if (!rep.pde_residual.is_zero() || rep.initial_slice != p) {
                        r.status = rel_status::fail;
                        r.counterexample =
                            counterexample_info{pi, params_text(lp), "PDE or initial residual",
                                                p.str(), rep.pde_residual.str()};
                        return r;
                    }
                }
            }
            return r;
        });

    add("eigenfunction-stationarity", "joint eigenfunctions are stationary",
        "(E^- - E^+) f = 0 and E(t) f = f for f in the joint eigenspaces",
        rel_mode::assert_check, [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            for (std::size_t pi = 0; pi < cfg.params.size(); ++pi) {
                const lattice_params& lp = cfg.params[pi];
                const int smax = std::min(cfg.degree, 3);
                for (long s = 0; s <= smax; ++s) {
                    for (const auto& f : eigenspace(lp, smax, s).basis) {
                        if (!lowering(f).is_zero() ||
                            semigroup_apply(rational(2, 3), f) != f) {
                            r.status = rel_status::fail;
                            r.counterexample = counterexample_info{
                                pi, params_text(lp), "s=" + std::to_string(s), f.str(),
                                lowering(f).str()};
                            return r;
                        }
                    }
                }
            }
            return r;
        });

    add("semigroup-mapping-property", "E(t) preserves the joint eigenspaces",
        "for f with E^+ f = E^- f = s f, the evolved E(t) f satisfies the same equations",
        rel_mode::assert_check, [](const run_config& cfg) {
            rel_result r;
            r.tables = json::object();
            const std::vector<rational> ts = {rational(1, 2), rational(-1), rational(7, 5)};
            for (std::size_t pi = 0; pi < cfg.params.size(); ++pi) {
                const lattice_params& lp = cfg.params[pi];
                const int smax = std::min(cfg.degree, 3);
                for (long s = 0; s <= smax; ++s) {
                    for (const auto& f : eigenspace(lp, smax, s).basis) {
                        for (const rational& t : ts) {
                            const clifford_poly g = semigroup_apply(t, f);
                            const clifford_poly sg = rational(s) * g;
                            if (euler(g, +1) != sg || euler(g, -1) != sg) {
                                r.status = rel_status::fail;
                                r.counterexample = counterexample_info{
                                    pi, params_text(lp),
                                    "s=" + std::to_string(s) + ", t=" + t.str(), f.str(),
                                    (euler(g, +1) - sg).str()};
                                return r;
                            }
                        }
                    }
                }
            }
            return r;
        });

    add("euler-intertwining", "(t E^- + (1-t) E^+) E(t) = E(t) E^+",
        "the first semigroup intertwining identity, exact at several rational t",
        rel_mode::assert_check, [](const run_config& cfg) {
            const std::vector<rational> ts = {rational(0), rational(1, 2), rational(1),
                                              rational(-1, 2), rational(2, 3)};
            return assert_ast("", cfg, [ts](const lattice_params&) {
                std::vector<pair_case> cases;
                for (const rational& t : ts) {
                    const op_ptr lhs = ops::compose(
                        ops::sum({ops::scale(t, ops::euler(-1)),
                                  ops::scale(rational(1) - t, ops::euler(+1))}),
                        ops::evolution(t));
                    cases.push_back(
                        {lhs, ops::compose(ops::evolution(t), ops::euler(+1)), "t=" + t.str()});
                }
                return cases;
            });
        });

    add("weight-intertwining", "candidate lifts of (1/h)W_h^+ across the semigroup",
        "the printed identity ((1/h)W^+ - t(E^+ + E^- + nI)) E(t) = E(t) (1/h)W^+ and the "
        "corrected form with the extra + t(1-t)(E^- - E^+) term are evaluated at several t",
        rel_mode::adjudicate, [](const run_config& cfg) {
            rel_result r;
            const std::vector<rational> ts = {rational(0), rational(1, 2), rational(1),
                                              rational(2, 3)};
            json per_t = json::array();
            bool printed_all = true, corrected_all = true;
            for (const rational& t : ts) {
                bool printed_t = true, corrected_t = true;
                for (const auto& lp : cfg.params) {
                    const intertwine_report rep = intertwine_verify(t, cfg.degree, lp);
                    printed_t = printed_t && rep.weight_intertwining_printed.all_zero;
                    corrected_t = corrected_t && rep.weight_intertwining_corrected.all_zero;
                }
                per_t.push_back(json{{"t", t.str()},
                                     {"printed holds", printed_t},
                                     {"corrected holds", corrected_t}});
                printed_all = printed_all && printed_t;
                corrected_all = corrected_all && corrected_t;
            }
            r.findings.push_back(finding{
                "((1/h)W^+ - t(E^+ + E^- + nI)) E(t) = E(t)(1/h)W^+ (printed)", printed_all,
                printed_all ? "holds at every tested t"
                            : "holds only at t in {0, 1}; see the per-t table"});
            r.findings.push_back(finding{
                "((1/h)W^+ - t(E^+ + E^- + nI) + t(1-t)(E^- - E^+)) E(t) = E(t)(1/h)W^+ "
                "(corrected)",
                corrected_all, corrected_all ? "holds at every tested t" : "fails"});
            json winners = json::array();
            for (const auto& f : r.findings)
                if (f.holds) winners.push_back(f.candidate);
            r.tables = json{{"winner", winners}, {"per_t", per_t}};
            return r;
        });

    return regs;
}

} // namespace

const std::vector<relation>& registry() {
    static const std::vector<relation> regs = build_registry();
    return regs;
}

std::vector<std::array<std::string, 3>> registry_list() {
    std::vector<std::array<std::string, 3>> out;
    for (const auto& rel : registry()) out.push_back({rel.id, rel.citation, rel.description});
    return out;
}

namespace {
std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}
} // namespace

const relation* find_relation(const std::string& id) {
    const std::string key = lower(id);
    for (const auto& rel : registry())
        if (lower(rel.id) == key) return &rel;
    return nullptr;
}

verify_report run_suite(const std::vector<std::string>& suite_ids, const run_config& config,
                        unsigned threads) {
    if (config.params.empty()) throw domain_error("run_suite: no lattice parameters given");
    if (config.degree < 0) throw domain_error("run_suite: degree must be >= 0");

    // Resolve in registry order so reports are deterministic.
    std::vector<const relation*> selected;
    for (const auto& rel : registry()) {
        for (const auto& want : suite_ids) {
            if (lower(want) == lower(rel.id)) {
                selected.push_back(&rel);
                break;
            }
        }
    }
    for (const auto& want : suite_ids)
        if (!find_relation(want)) throw domain_error("unknown relation id '" + want + "'");

    verify_report rep;
    rep.config = config;
    rep.config.threads = std::max(1u, threads);
    for (const auto* rel : selected) rep.suite.push_back(rel->id);

    // Relations run in registry order; the fan-out happens inside each
    // relation across its (case, basis element) grid.
    for (const auto* rel : selected) rep.results.push_back(rel->run(rep.config));
    return rep;
}

bool report_has_failures(const verify_report& rep) {
    return std::any_of(rep.results.begin(), rep.results.end(),
                       [](const rel_result& r) { return r.status == rel_status::fail; });
}

nlohmann::json report_to_json(const verify_report& rep) {
    json params = json::array();
    for (const auto& lp : rep.config.params)
        params.push_back(json{
            {"n", lp.n}, {"h", lp.h.str()}, {"mu", lp.mu.str()}, {"b", lp.b.str()}});

    json results = json::array();
    for (const auto& r : rep.results) {
        const relation* rel = find_relation(r.id);
        json cx = nullptr;
        if (r.counterexample) {
            cx = json{{"param_index", r.counterexample->param_index},
                      {"params", r.counterexample->params_text},
                      {"detail", r.counterexample->detail},
                      {"input", r.counterexample->input},
                      {"residual", r.counterexample->residual}};
        }
        json findings = json::array();
        for (const auto& f : r.findings)
            findings.push_back(
                json{{"candidate", f.candidate}, {"holds", f.holds}, {"detail", f.detail}});
        results.push_back(json{{"id", r.id},
                               {"citation", rel ? rel->citation : ""},
                               {"description", rel ? rel->description : ""},
                               {"status", status_str(r.status)},
                               {"counterexample", cx},
                               {"findings", findings},
                               {"tables", r.tables.is_null() ? json::object() : r.tables}});
    }

    return json{{"suite", rep.suite},
                {"params", params},
                {"degree", rep.config.degree},
                {"seed", rep.config.seed},
                {"results", results}};
}

} // namespace cliflat
