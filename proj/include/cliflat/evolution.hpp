#pragma once

#include <map>

#include "cliflat/operators.hpp"

namespace cliflat {

// Polynomial in a formal time variable t with Clifford-polynomial
// coefficients. Time is never a float; evaluation is exact at rational t.
class time_poly {
public:
    using coeff_map = std::map<unsigned, clifford_poly>;

    explicit time_poly(lattice_params params) : params_(std::move(params)) {}

    static time_poly constant(const clifford_poly& p) {
        time_poly g(p.params());
        g.set_coeff(0, p);
        return g;
    }

    const lattice_params& params() const { return params_; }
    const coeff_map& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    clifford_poly coeff(unsigned power) const {
        auto it = coeffs_.find(power);
        return it == coeffs_.end() ? clifford_poly::zero(params_) : it->second;
    }

    void set_coeff(unsigned power, const clifford_poly& p) {
        if (p.params() != params_)
            throw domain_error("time_poly: coefficient parameter mismatch");
        if (p.is_zero())
            coeffs_.erase(power);
        else
            coeffs_.insert_or_assign(power, p);
    }

    friend time_poly operator+(const time_poly& a, const time_poly& b);
    friend time_poly operator-(const time_poly& a, const time_poly& b);
    friend bool operator==(const time_poly& a, const time_poly& b) {
        return a.params_ == b.params_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const time_poly& a, const time_poly& b) { return !(a == b); }

    // d/dt, term-wise and exact.
    time_poly dt() const;

    // Apply a (time-independent) operator to every coefficient.
    time_poly apply_op(const op_ptr& e) const;

    clifford_poly eval(const rational& t) const;

    std::string str() const;

private:
    lattice_params params_;
    coeff_map coeffs_;
};

// (E_h^- - E_h^+) p: the semigroup generator; strictly lowers degree on
// nonconstant input.
clifford_poly lowering(const clifford_poly& p);

// E_h(t) p = exp(t(E_h^- - E_h^+)) p at the given rational time.
clifford_poly semigroup_apply(const rational& t, const clifford_poly& p);

// The whole trajectory g(t, x) with the t-dependence kept symbolic:
// coefficient of t^r is lowering^r(p) / r!.
time_poly semigroup_trajectory(const clifford_poly& p);

// Residuals of the Cauchy problem
//   dg/dt + E_h^+ g - E_h^- g = 0,  g(0, x) = f(x),  E_h^+ g = E_h^- g.
// All three are returned as data; none is asserted here.
struct cauchy_report {
    time_poly pde_residual;        // dg/dt + (E+ - E-) g
    clifford_poly initial_slice;   // g(0, x)
    time_poly constraint_residual; // (E+ - E-) g
};

cauchy_report cauchy_verify(const time_poly& g);

// Exact check of the two semigroup intertwining identities on the full
// monomial-blade basis of degree <= d. The first,
//   (t E^- + (1-t) E^+) E(t) = E(t) E^+,
// holds identically. The second is checked in its plain printed form
//   ((1/h) W_h^+ - t (E^+ + E^- + n I)) E(t) = E(t) (1/h) W_h^+
// and in the corrected form with the extra + t(1-t)(E^- - E^+) term.
struct identity_check {
    bool all_zero = true;
    std::string counterexample; // first failing basis element
    std::string residual;       // its residual polynomial
};

struct intertwine_report {
    rational t;
    identity_check euler_intertwining;
    identity_check weight_intertwining_printed;
    identity_check weight_intertwining_corrected;
};

intertwine_report intertwine_verify(const rational& t, int degree_bound,
                                    const lattice_params& params);

// Semigroup law E(t + tau) = E(t) E(tau) and inverse E(-t) E(t) = I on the
// degree <= d monomial-blade basis.
struct semigroup_property_report {
    rational t, tau;
    identity_check law;
    identity_check inverse;
};

semigroup_property_report semigroup_property_verify(const rational& t, const rational& tau,
                                                    int degree_bound,
                                                    const lattice_params& params);

} // namespace cliflat
