#pragma once

#include <map>
#include <string>
#include <vector>

#include "cliflat/lattice.hpp"
#include "cliflat/multivector.hpp"

namespace cliflat {

// Clifford-vector-valued polynomial in x_1..x_n: multi-index -> multivector
// coefficient, with the lattice parameters it lives on. Zero coefficients are
// pruned eagerly so structural equality is mathematical equality.
class clifford_poly {
public:
    using term_map = std::map<multi_index, multivector>;

    explicit clifford_poly(lattice_params params) : params_(std::move(params)) {
        params_.validate();
    }

    static clifford_poly zero(const lattice_params& p) { return clifford_poly(p); }
    static clifford_poly constant(const lattice_params& p, const rational& c) {
        return from_multivector(p, multivector::scalar(p.n, c));
    }
    static clifford_poly from_multivector(const lattice_params& p, const multivector& m);
    // x_j as a scalar polynomial.
    static clifford_poly variable(const lattice_params& p, int j);
    // c * x^alpha * (basis blade b).
    static clifford_poly monomial(const lattice_params& p, const multi_index& alpha,
                                  blade_mask b = 0, const rational& c = rational(1));
    // x_j + c as a scalar polynomial (degree-1 helper used by weight operators).
    static clifford_poly linear(const lattice_params& p, int j, const rational& c);

    const lattice_params& params() const { return params_; }
    int dimension() const { return params_.n; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    // Degree of the zero polynomial is -1.
    int degree() const;

    multivector coeff(const multi_index& alpha) const;

    bool has_scalar_blades_only() const;

    clifford_poly operator-() const;
    friend clifford_poly operator+(const clifford_poly& a, const clifford_poly& b);
    friend clifford_poly operator-(const clifford_poly& a, const clifford_poly& b);
    friend clifford_poly operator*(const rational& c, const clifford_poly& p);

    friend bool operator==(const clifford_poly& a, const clifford_poly& b) {
        return a.params_ == b.params_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const clifford_poly& a, const clifford_poly& b) { return !(a == b); }

    std::string str() const;

    void add_term(const multi_index& alpha, const multivector& m);

private:
    void check_alpha(const multi_index& alpha) const;

    lattice_params params_;
    term_map terms_;
};

// Product of polynomials; coefficients multiply by the geometric product
// (noncommutative in general).
clifford_poly poly_mul(const clifford_poly& a, const clifford_poly& b);

// Left multiplication by the generator e_j applied to every coefficient.
clifford_poly poly_blade_lmul(int j, const clifford_poly& p);

// Exact substitution x_j -> x_j + delta (binomial expansion).
clifford_poly poly_substitute_shift(const clifford_poly& p, int j, const rational& delta);

// Translation T_h^{+-j}: x_j -> x_j +- h.
clifford_poly shift(const clifford_poly& p, int j, int dir);

// Evaluation at the lattice point x = h*k, k integer coordinates.
multivector poly_eval(const clifford_poly& p, const std::vector<long>& k);

// Evaluation at an arbitrary exact rational point.
multivector poly_eval_at(const clifford_poly& p, const std::vector<rational>& x);

// Formal continuum derivative d/dx_j (test scaffolding for the
// Sheffer-map intertwining; not part of the lattice calculus).
clifford_poly poly_derivative(const clifford_poly& p, int j);

// All scalar multi-indices of total degree <= d, ordered by (degree, lex).
std::vector<multi_index> scalar_monomials(int n, int d);

// Full monomial-blade basis x^alpha e_J with |alpha| <= d.
std::vector<clifford_poly> monomial_blade_basis(const lattice_params& params, int d,
                                                bool include_blades = true);

} // namespace cliflat
