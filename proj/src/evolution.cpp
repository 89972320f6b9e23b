#include "cliflat/evolution.hpp"

#include "cliflat/su11.hpp"

namespace cliflat {

time_poly operator+(const time_poly& a, const time_poly& b) {
    if (a.params_ != b.params_) throw domain_error("time_poly addition: parameter mismatch");
    time_poly out = a;
    for (const auto& [power, p] : b.coeffs_) out.set_coeff(power, out.coeff(power) + p);
    return out;
}

time_poly operator-(const time_poly& a, const time_poly& b) {
    if (a.params_ != b.params_) throw domain_error("time_poly subtraction: parameter mismatch");
    time_poly out = a;
    for (const auto& [power, p] : b.coeffs_) out.set_coeff(power, out.coeff(power) - p);
    return out;
}

time_poly time_poly::dt() const {
    time_poly out(params_);
    for (const auto& [power, p] : coeffs_) {
        if (power == 0) continue;
        out.set_coeff(power - 1, rational(static_cast<long>(power)) * p);
    }
    return out;
}

time_poly time_poly::apply_op(const op_ptr& e) const {
    time_poly out(params_);
    if (!e) throw domain_error("apply_op: null operator");
    for (const auto& [power, p] : coeffs_) out.set_coeff(power, apply(*e, p));
    return out;
}

clifford_poly time_poly::eval(const rational& t) const {
    clifford_poly out = clifford_poly::zero(params_);
    for (const auto& [power, p] : coeffs_) out = out + t.pow(power) * p;
    return out;
}

std::string time_poly::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [power, p] : coeffs_) {
        if (!first) out += " + ";
        out += "t^" + std::to_string(power) + " * [" + p.str() + "]";
        first = false;
    }
    return out;
}

clifford_poly lowering(const clifford_poly& p) { return euler(p, -1) - euler(p, +1); }

clifford_poly semigroup_apply(const rational& t, const clifford_poly& p) {
    return semigroup_exp(t, p);
}

time_poly semigroup_trajectory(const clifford_poly& p) {
    time_poly g(p.params());
    clifford_poly term = p;
    rational rfact(1);
    g.set_coeff(0, p);
    const int bound = p.degree() + 1;
    for (int r = 1; r <= bound && !term.is_zero(); ++r) {
        term = lowering(term);
        rfact *= rational(r);
        g.set_coeff(static_cast<unsigned>(r), (rational(1) / rfact) * term);
    }
    if (!term.is_zero() && !lowering(term).is_zero())
        throw math_error("semigroup_trajectory: generator failed to lower degree");
    return g;
}

cauchy_report cauchy_verify(const time_poly& g) {
    const op_ptr euler_diff =
        ops::sum({ops::euler(+1), ops::scale(rational(-1), ops::euler(-1))});
    const time_poly constraint = g.apply_op(euler_diff);
    return cauchy_report{g.dt() + constraint, g.coeff(0), constraint};
}

namespace {

identity_check check_pair_on_basis(const op_ptr& lhs, const op_ptr& rhs,
                                   const lattice_params& params, int d) {
    identity_check out;
    for (const auto& p : monomial_blade_basis(params, d)) {
        const clifford_poly residual = apply(*lhs, p) - apply(*rhs, p);
        if (!residual.is_zero()) {
            out.all_zero = false;
            out.counterexample = p.str();
            out.residual = residual.str();
            return out;
        }
    }
    return out;
}

} // namespace

intertwine_report intertwine_verify(const rational& t, int degree_bound,
                                    const lattice_params& params) {
    const rational one(1);
    const op_ptr ev = ops::evolution(t);
    const op_ptr eplus = ops::euler(+1);
    const op_ptr eminus = ops::euler(-1);
    const op_ptr id = ops::identity();
    const rational n_rat(params.n);
    const op_ptr w_over_h =
        ops::scale(one / params.h, ops::weight_total(weight_kind::plus, params.n));

    intertwine_report rep{t, {}, {}, {}};

    // (t E^- + (1-t) E^+) E(t) = E(t) E^+
    rep.euler_intertwining = check_pair_on_basis(
        ops::compose(ops::sum({ops::scale(t, eminus), ops::scale(one - t, eplus)}), ev),
        ops::compose(ev, eplus), params, degree_bound);

    // ((1/h) W_h^+ - t (E^+ + E^- + n I)) E(t) = E(t) (1/h) W_h^+
    const op_ptr printed_lhs = ops::sum(
        {w_over_h,
         ops::scale(-t, ops::sum({eplus, eminus, ops::scale(n_rat, id)}))});
    rep.weight_intertwining_printed = check_pair_on_basis(
        ops::compose(printed_lhs, ev), ops::compose(ev, w_over_h), params, degree_bound);

    // Corrected form: add t(1-t)(E^- - E^+) on the left.
    const op_ptr corrected_lhs = ops::sum(
        {printed_lhs,
         ops::scale(t * (one - t), ops::sum({eminus, ops::scale(rational(-1), eplus)}))});
    rep.weight_intertwining_corrected = check_pair_on_basis(
        ops::compose(corrected_lhs, ev), ops::compose(ev, w_over_h), params, degree_bound);

    return rep;
}

semigroup_property_report semigroup_property_verify(const rational& t, const rational& tau,
                                                    int degree_bound,
                                                    const lattice_params& params) {
    semigroup_property_report rep{t, tau, {}, {}};
    rep.law = check_pair_on_basis(ops::evolution(t + tau),
                                  ops::compose(ops::evolution(t), ops::evolution(tau)), params,
                                  degree_bound);
    rep.inverse = check_pair_on_basis(ops::compose(ops::evolution(-t), ops::evolution(t)),
                                      ops::identity(), params, degree_bound);
    return rep;
}

} // namespace cliflat
