#pragma once

#include <map>
#include <string>

#include "cliflat/blade.hpp"
#include "cliflat/rational.hpp"

namespace cliflat {

// Element of Cl(0,n): blade -> exact rational coefficient. Zero coefficients
// are never stored, so structural equality is mathematical equality.
// Immutable in spirit: operations return new values.
class multivector {
public:
    using term_map = std::map<blade_mask, rational, blade_lex_less>;

    explicit multivector(int n) : n_(check_dim(n)) {}
    multivector(int n, term_map terms) : n_(check_dim(n)), terms_(std::move(terms)) {
        normalize();
    }

    static multivector scalar(int n, const rational& c) {
        multivector m(n);
        m.set(0, c);
        return m;
    }
    static multivector basis_vector(int n, int j) {
        multivector m(n);
        if (j < 1 || j > n)
            throw domain_error("basis_vector: index " + std::to_string(j) +
                               " out of range 1.." + std::to_string(n));
        m.set(blade_mask{1} << (j - 1), rational(1));
        return m;
    }
    static multivector basis_blade(int n, blade_mask b) {
        if (!blade_in_dimension(b, n)) throw domain_error("basis_blade: out of range");
        multivector m(n);
        m.set(b, rational(1));
        return m;
    }

    int dimension() const { return n_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    rational coeff(blade_mask b) const {
        auto it = terms_.find(b);
        return it == terms_.end() ? rational(0) : it->second;
    }

    // Largest grade present; -1 for the zero multivector.
    int top_grade() const;
    bool is_grade(int g) const;
    bool is_scalar() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
    rational scalar_part() const { return coeff(0); }
    multivector grade_part(int g) const;

    multivector operator-() const;
    friend multivector operator+(const multivector& a, const multivector& b);
    friend multivector operator-(const multivector& a, const multivector& b);
    friend multivector operator*(const rational& c, const multivector& m);

    friend bool operator==(const multivector& a, const multivector& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const multivector& a, const multivector& b) { return !(a == b); }

    std::string str() const;

private:
    static int check_dim(int n) {
        if (n < 1 || n > max_dimension)
            throw domain_error("multivector: dimension must be in 1.." +
                               std::to_string(max_dimension));
        return n;
    }
    void set(blade_mask b, const rational& c) {
        if (!c.is_zero()) terms_[b] = c;
    }
    void add_term(blade_mask b, const rational& c);
    void normalize();

    int n_;
    term_map terms_;

    friend multivector mv_mul(const multivector& a, const multivector& b);
    friend multivector blade_lmul(int j, const multivector& m);
};

// Geometric product, the bilinear extension of blade_product.
multivector mv_mul(const multivector& a, const multivector& b);

// Left multiplication by the generator e_j.
multivector blade_lmul(int j, const multivector& m);

// B(x, y) = -1/2 (xy + yx) on grade-1 vectors; equals sum_j x_j y_j.
rational bilinear_form(const multivector& x, const multivector& y);

} // namespace cliflat
