#pragma once

#include <memory>
#include <vector>

#include "cliflat/poly.hpp"

namespace cliflat {

// Operators are data: a small AST of primitives plus the closure
// combinators, so the verifier can enumerate, print and report identities.
// Application is linear in the polynomial argument for every expression.

enum class node_kind { primitive, compose, sum, scale, power, commutator };

enum class prim_kind {
    identity,
    shift,             // T_h^{+-j}
    fdiff,             // forward/backward difference
    weight,            // W_j, W_h^{+j}, W_h^{-j}
    dirac,             // D_h^{+-}
    euler,             // E_h^{+-} (weighted-difference form)
    raise_op,          // M_h^{+-}
    angular,           // S_jk^{+-h}, plain-multiplication form
    cderiv,            // continuum d/dx_j (test scaffolding)
    sheffer,           // Sheffer map Psi (monomials -> weighted-shift products)
    evolution,         // exp(t(E_h^- - E_h^+)), exact on polynomials
    angular_classical, // L_jk = x_j d/dx_k - x_k d/dx_j (test scaffolding)
};

enum class weight_kind { mid, plus, minus };

struct op_expr;
using op_ptr = std::shared_ptr<const op_expr>;

struct op_expr {
    node_kind node = node_kind::primitive;

    // Primitive payload.
    prim_kind prim = prim_kind::identity;
    int sign = +1;
    int axis_j = 0;
    int axis_k = 0;
    weight_kind wkind = weight_kind::mid;
    rational time;

    // Combinator payload.
    std::vector<op_ptr> children;
    rational factor;       // scale
    unsigned exponent = 0; // power
};

namespace ops {

op_ptr identity();
op_ptr shift_op(int sign, int j);
op_ptr fdiff(int sign, int j);
op_ptr weight(weight_kind kind, int j);
op_ptr dirac(int sign);
op_ptr euler(int sign);
op_ptr raise(int sign);
op_ptr angular(int sign, int j, int k);
op_ptr cderiv(int j);
op_ptr sheffer(int sign);
op_ptr evolution(const rational& t);
op_ptr angular_classical(int j, int k);

op_ptr compose(std::vector<op_ptr> children);
op_ptr compose(op_ptr a, op_ptr b);
op_ptr compose(op_ptr a, op_ptr b, op_ptr c);
op_ptr sum(std::vector<op_ptr> children);
op_ptr scale(const rational& c, op_ptr a);
op_ptr power(op_ptr a, unsigned k);
op_ptr commutator(op_ptr a, op_ptr b);

// A(B ...) + B(A ...), assembled from sum/compose.
op_ptr anticommutator(op_ptr a, op_ptr b);

// Convenience aggregates used throughout the su(1,1) relations.
op_ptr weight_total(weight_kind kind, int n);          // W, W_h^+ or W_h^- summed over axes
op_ptr euler_composed(int sign, int n);                // E_h^+ = sum_j W_h^{+j} d_h^{-j}, etc.
op_ptr angular_weight_shift(int sign, int j, int k);   // W_h^{+-j} d_h^{-+k} - W_h^{+-k} d_h^{-+j}

} // namespace ops

// Structural recursion over the AST; exact on every node.
clifford_poly apply(const op_expr& e, const clifford_poly& p);

// The primitive actions, also usable directly.
clifford_poly fdiff(const clifford_poly& p, int j, int dir);
clifford_poly weight_apply(const clifford_poly& p, int j, weight_kind kind);
clifford_poly dirac(const clifford_poly& p, int sign);
clifford_poly euler(const clifford_poly& p, int sign);
clifford_poly raise(const clifford_poly& p, int sign);
clifford_poly angular(const clifford_poly& p, int j, int k, int sign);
clifford_poly angular_weight_shift(const clifford_poly& p, int j, int k, int sign);
clifford_poly sheffer_map(const clifford_poly& scalar_poly, int sign);

// exp(t (E_h^- - E_h^+)) p as a finite sum; the generator strictly lowers
// degree, and the truncation is re-checked at runtime.
clifford_poly semigroup_exp(const rational& t, const clifford_poly& p);

} // namespace cliflat
