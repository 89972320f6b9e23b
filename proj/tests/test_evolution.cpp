#include <doctest.h>

#include <nlohmann/json.hpp>

#include "cliflat/evolution.hpp"
#include "cliflat/json_io.hpp"
#include "cliflat/su11.hpp"

using namespace cliflat;

namespace {
const lattice_params p1{1, rational(1), rational(1), rational(0)};
const lattice_params p2{2, rational(1), rational(1), rational(0)};
const lattice_params p1q{1, rational(3, 4), rational(2), rational(1, 5)};
} // namespace

TEST_CASE("lowering examples") {
    CHECK(lowering(clifford_poly::constant(p1, rational(1))).is_zero());
    // (E^- - E^+) x1^2 = -4h x1 - 2h b/mu; the second term drops for w(t) = t
    for (const auto& lp : {p1, p1q}) {
        const clifford_poly sq = clifford_poly::monomial(lp, {2});
        const clifford_poly expect =
            rational(-4) * lp.h * clifford_poly::variable(lp, 1) +
            clifford_poly::constant(lp, rational(-2) * lp.h * lp.b / lp.mu);
        CHECK(euler(sq, -1) - euler(sq, +1) == expect);
        CHECK(lowering(sq) == expect);
        CHECK(lowering(clifford_poly::variable(lp, 1)) ==
              clifford_poly::constant(lp, -lp.h));
    }
    CHECK(lowering(clifford_poly::monomial(p1, {2})) ==
          rational(-4) * p1.h * clifford_poly::variable(p1, 1));
}

TEST_CASE("semigroup application") {
    const clifford_poly sq = clifford_poly::monomial(p1, {2});
    CHECK(semigroup_apply(rational(0), sq) == sq);

    // joint eigenfunctions are fixed points for every t
    const clifford_poly diff =
        clifford_poly::variable(p2, 1) - clifford_poly::variable(p2, 2);
    for (const rational& t : {rational(1, 2), rational(-3), rational(7, 5)})
        CHECK(semigroup_apply(t, diff) == diff);

    // trajectory of x1^2 (n=1, w=t): {t^0: x^2, t^1: -4h x, t^2: 2h^2}
    const time_poly g = semigroup_trajectory(sq);
    CHECK(g.coeff(0) == sq);
    CHECK(g.coeff(1) == rational(-4) * p1.h * clifford_poly::variable(p1, 1));
    CHECK(g.coeff(2) ==
          clifford_poly::constant(p1, rational(2) * p1.h * p1.h));
    CHECK(g.coeff(3).is_zero());

    // evaluation consistency at t = 1/2
    CHECK(g.eval(rational(1, 2)) == semigroup_apply(rational(1, 2), sq));
}

TEST_CASE("Cauchy residuals") {
    // f = 1: everything vanishes
    const cauchy_report r1 =
        cauchy_verify(semigroup_trajectory(clifford_poly::constant(p2, rational(1))));
    CHECK(r1.pde_residual.is_zero());
    CHECK(r1.constraint_residual.is_zero());

    // f = x1 - x2: joint eigenfunction, trajectory constant in t
    const clifford_poly diff =
        clifford_poly::variable(p2, 1) - clifford_poly::variable(p2, 2);
    const time_poly gd = semigroup_trajectory(diff);
    CHECK(gd.coeffs().size() == 1);
    const cauchy_report r2 = cauchy_verify(gd);
    CHECK(r2.pde_residual.is_zero());
    CHECK(r2.constraint_residual.is_zero());
    CHECK(r2.initial_slice == diff);

    // f = x1^2 (n=1): PDE residual zero, constraint residual nonzero
    const cauchy_report r3 =
        cauchy_verify(semigroup_trajectory(clifford_poly::monomial(p1, {2})));
    CHECK(r3.pde_residual.is_zero());
    CHECK_FALSE(r3.constraint_residual.is_zero());
}

TEST_CASE("nilpotency of the generator") {
    for (const auto& lp : {p1, p2, p1q}) {
        for (const auto& p : monomial_blade_basis(lp, 6)) {
            clifford_poly it = p;
            for (int k = 0; k <= p.degree(); ++k) it = lowering(it);
            CHECK(lowering(it).is_zero());
        }
    }
}

TEST_CASE("semigroup law and inverse") {
    const semigroup_property_report rep =
        semigroup_property_verify(rational(1, 2), rational(1, 2), 4, p2);
    CHECK(rep.law.all_zero);
    CHECK(rep.inverse.all_zero);
    const semigroup_property_report rep2 =
        semigroup_property_verify(rational(-2, 3), rational(7, 4), 3, p1q);
    CHECK(rep2.law.all_zero);
    CHECK(rep2.inverse.all_zero);
}

TEST_CASE("intertwining identities: exact findings") {
    // t = 0: both identities reduce to trivial statements
    const intertwine_report r0 = intertwine_verify(rational(0), 3, p2);
    CHECK(r0.euler_intertwining.all_zero);
    CHECK(r0.weight_intertwining_printed.all_zero);
    CHECK(r0.weight_intertwining_corrected.all_zero);

    // t = 1: the printed weight identity does hold
    const intertwine_report r1 = intertwine_verify(rational(1), 3, p2);
    CHECK(r1.euler_intertwining.all_zero);
    CHECK(r1.weight_intertwining_printed.all_zero);
    CHECK(r1.weight_intertwining_corrected.all_zero);

    // t = 1/2: the Euler identity is exact; the printed weight identity is
    // not, and the corrected one is. The residual of the printed form equals
    // t(t-1)(E^- - E^+) E(t), checked here on the witness x1.
    const intertwine_report rh = intertwine_verify(rational(1, 2), 3, p2);
    CHECK(rh.euler_intertwining.all_zero);
    CHECK_FALSE(rh.weight_intertwining_printed.all_zero);
    CHECK(rh.weight_intertwining_corrected.all_zero);

    const rational t(1, 2);
    const clifford_poly x1 = clifford_poly::variable(p2, 1);
    const clifford_poly et_x1 = semigroup_apply(t, x1);
    const clifford_poly lhs_printed =
        raise_over_h(et_x1, +1) -
        t * (euler(et_x1, +1) + euler(et_x1, -1) +
             rational(p2.n) * et_x1);
    const clifford_poly rhs = semigroup_apply(t, raise_over_h(x1, +1));
    const clifford_poly residual = lhs_printed - rhs;
    CHECK_FALSE(residual.is_zero());
    CHECK(residual == t * (t - rational(1)) * lowering(et_x1));
}

TEST_CASE("time polynomial JSON round-trip") {
    const time_poly g = semigroup_trajectory(clifford_poly::monomial(p2, {1, 1}, 0b10));
    const nlohmann::json j = time_poly_to_json(g);
    const time_poly back = time_poly_from_json(j);
    CHECK(back == g);
    CHECK(dump_canonical(time_poly_to_json(back)) == dump_canonical(j));

    CHECK_THROWS_AS(time_poly_from_json(parse_json_text(R"({"t_coeffs": []})")), parse_error);
    // the zero time polynomial round-trips through the params overload
    const time_poly zero(p2);
    CHECK(time_poly_from_json(time_poly_to_json(zero), p2) == zero);
    CHECK_THROWS_AS(time_poly_from_json(parse_json_text(
                        R"({"t_coeffs": [{"power": -1, "poly": {}}]})")),
                    parse_error);
}

TEST_CASE("time polynomial calculus") {
    const clifford_poly sq = clifford_poly::monomial(p1, {2});
    const time_poly g = semigroup_trajectory(sq);
    // dg/dt equals (E^- - E^+) applied coefficient-wise to g
    const op_ptr gen = ops::sum({ops::euler(-1), ops::scale(rational(-1), ops::euler(+1))});
    CHECK(g.dt() == g.apply_op(gen));
}
