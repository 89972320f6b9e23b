#include "cliflat/operators.hpp"

namespace cliflat {

namespace {

int check_sign(int sign, const char* who) {
    if (sign != +1 && sign != -1)
        throw domain_error(std::string(who) + ": sign must be +1 or -1");
    return sign;
}

int check_axis_positive(int j, const char* who) {
    if (j < 1) throw domain_error(std::string(who) + ": axis must be >= 1");
    return j;
}

void check_axis(int j, int n, const char* who) {
    if (j < 1 || j > n)
        throw domain_error(std::string(who) + ": axis " + std::to_string(j) +
                           " out of range 1.." + std::to_string(n));
}

std::shared_ptr<op_expr> make_prim(prim_kind k) {
    auto e = std::make_shared<op_expr>();
    e->node = node_kind::primitive;
    e->prim = k;
    return e;
}

} // namespace

namespace ops {

op_ptr identity() { return make_prim(prim_kind::identity); }

op_ptr shift_op(int sign, int j) {
    auto e = std::make_shared<op_expr>();
    e->node = node_kind::primitive;
    e->prim = prim_kind::shift;
    e->sign = check_sign(sign, "shift");
    e->axis_j = check_axis_positive(j, "shift");
    return e;
}

op_ptr fdiff(int sign, int j) {
    auto e = std::make_shared<op_expr>();
    e->node = node_kind::primitive;
    e->prim = prim_kind::fdiff;
    e->sign = check_sign(sign, "fdiff");
    e->axis_j = check_axis_positive(j, "fdiff");
    return e;
}

op_ptr weight(weight_kind kind, int j) {
    auto e = std::make_shared<op_expr>();
    e->node = node_kind::primitive;
    e->prim = prim_kind::weight;
    e->wkind = kind;
    e->axis_j = check_axis_positive(j, "weight");
    return e;
}

op_ptr dirac(int sign) {
    auto e = make_prim(prim_kind::dirac);
    e->sign = check_sign(sign, "dirac");
    return e;
}

op_ptr euler(int sign) {
    auto e = make_prim(prim_kind::euler);
    e->sign = check_sign(sign, "euler");
    return e;
}

op_ptr raise(int sign) {
    auto e = make_prim(prim_kind::raise_op);
    e->sign = check_sign(sign, "raise");
    return e;
}

op_ptr angular(int sign, int j, int k) {
    if (j == k) throw domain_error("angular: axes must differ (operator degenerates to 0)");
    auto e = std::make_shared<op_expr>();
    e->node = node_kind::primitive;
    e->prim = prim_kind::angular;
    e->sign = check_sign(sign, "angular");
    e->axis_j = check_axis_positive(j, "angular");
    e->axis_k = check_axis_positive(k, "angular");
    return e;
}

op_ptr cderiv(int j) {
    auto e = make_prim(prim_kind::cderiv);
    e->axis_j = check_axis_positive(j, "cderiv");
    return e;
}

op_ptr sheffer(int sign) {
    auto e = make_prim(prim_kind::sheffer);
    e->sign = check_sign(sign, "sheffer");
    return e;
}

op_ptr evolution(const rational& t) {
    auto e = make_prim(prim_kind::evolution);
    e->time = t;
    return e;
}

op_ptr angular_classical(int j, int k) {
    if (j == k) throw domain_error("angular-classical: axes must differ");
    auto e = std::make_shared<op_expr>();
    e->node = node_kind::primitive;
    e->prim = prim_kind::angular_classical;
    e->axis_j = check_axis_positive(j, "angular-classical");
    e->axis_k = check_axis_positive(k, "angular-classical");
    return e;
}

op_ptr compose(std::vector<op_ptr> children) {
    if (children.size() < 2) throw domain_error("compose: needs at least two operands");
    auto e = std::make_shared<op_expr>();
    e->node = node_kind::compose;
    e->children = std::move(children);
    return e;
}
op_ptr compose(op_ptr a, op_ptr b) { return compose(std::vector<op_ptr>{a, b}); }
op_ptr compose(op_ptr a, op_ptr b, op_ptr c) { return compose(std::vector<op_ptr>{a, b, c}); }

op_ptr sum(std::vector<op_ptr> children) {
    if (children.empty()) throw domain_error("sum: needs at least one operand");
    auto e = std::make_shared<op_expr>();
    e->node = node_kind::sum;
    e->children = std::move(children);
    return e;
}

op_ptr scale(const rational& c, op_ptr a) {
    auto e = std::make_shared<op_expr>();
    e->node = node_kind::scale;
    e->factor = c;
    e->children = {std::move(a)};
    return e;
}

op_ptr power(op_ptr a, unsigned k) {
    auto e = std::make_shared<op_expr>();
    e->node = node_kind::power;
    e->exponent = k;
    e->children = {std::move(a)};
    return e;
}

op_ptr commutator(op_ptr a, op_ptr b) {
    auto e = std::make_shared<op_expr>();
    e->node = node_kind::commutator;
    e->children = {std::move(a), std::move(b)};
    return e;
}

op_ptr anticommutator(op_ptr a, op_ptr b) {
    return sum({compose(a, b), compose(b, a)});
}

op_ptr weight_total(weight_kind kind, int n) {
    std::vector<op_ptr> parts;
    for (int j = 1; j <= n; ++j) parts.push_back(weight(kind, j));
    return sum(std::move(parts));
}

op_ptr euler_composed(int sign, int n) {
    check_sign(sign, "euler_composed");
    std::vector<op_ptr> parts;
    for (int j = 1; j <= n; ++j)
        parts.push_back(compose(weight(sign > 0 ? weight_kind::plus : weight_kind::minus, j),
                                fdiff(-sign, j)));
    return sum(std::move(parts));
}

op_ptr angular_weight_shift(int sign, int j, int k) {
    if (j == k) throw domain_error("angular_weight_shift: axes must differ");
    const weight_kind wk = sign > 0 ? weight_kind::plus : weight_kind::minus;
    return sum({compose(weight(wk, j), fdiff(-sign, k)),
                scale(rational(-1), compose(weight(wk, k), fdiff(-sign, j)))});
}

} // namespace ops

clifford_poly fdiff(const clifford_poly& p, int j, int dir) {
    check_sign(dir, "fdiff");
    check_axis(j, p.params().n, "fdiff");
    const rational inv_h = rational(1) / p.params().h;
    if (dir > 0) return inv_h * (shift(p, j, +1) - p);
    return inv_h * (p - shift(p, j, -1));
}

clifford_poly weight_apply(const clifford_poly& p, int j, weight_kind kind) {
    const lattice_params& lp = p.params();
    check_axis(j, lp.n, "weight");
    const rational half_h = lp.h / rational(2);
    switch (kind) {
    case weight_kind::mid:
        return poly_mul(clifford_poly::linear(lp, j, lp.weight_constant(rational(0))), p);
    case weight_kind::plus:
        return poly_mul(clifford_poly::linear(lp, j, lp.weight_constant(half_h)),
                        shift(p, j, +1));
    case weight_kind::minus:
        return poly_mul(clifford_poly::linear(lp, j, lp.weight_constant(-half_h)),
                        shift(p, j, -1));
    }
    throw domain_error("weight: unknown kind");
}

clifford_poly dirac(const clifford_poly& p, int sign) {
    check_sign(sign, "dirac");
    clifford_poly out = clifford_poly::zero(p.params());
    for (int j = 1; j <= p.params().n; ++j)
        out = out + poly_blade_lmul(j, fdiff(p, j, sign));
    return out;
}

clifford_poly euler(const clifford_poly& p, int sign) {
    check_sign(sign, "euler");
    const lattice_params& lp = p.params();
    const rational off = sign > 0 ? lp.h / rational(2) : -(lp.h / rational(2));
    clifford_poly out = clifford_poly::zero(lp);
    for (int j = 1; j <= lp.n; ++j) {
        const clifford_poly w = clifford_poly::linear(lp, j, lp.weight_constant(off));
        out = out + poly_mul(w, fdiff(p, j, sign));
    }
    return out;
}

clifford_poly raise(const clifford_poly& p, int sign) {
    check_sign(sign, "raise");
    const weight_kind wk = sign > 0 ? weight_kind::plus : weight_kind::minus;
    clifford_poly out = clifford_poly::zero(p.params());
    for (int j = 1; j <= p.params().n; ++j)
        out = out + poly_blade_lmul(j, weight_apply(p, j, wk));
    return out;
}

clifford_poly angular(const clifford_poly& p, int j, int k, int sign) {
    check_sign(sign, "angular");
    const lattice_params& lp = p.params();
    check_axis(j, lp.n, "angular");
    check_axis(k, lp.n, "angular");
    if (j == k) throw domain_error("angular: axes must differ (operator degenerates to 0)");
    const rational off = sign > 0 ? lp.h / rational(2) : -(lp.h / rational(2));
    const clifford_poly wj = clifford_poly::linear(lp, j, lp.weight_constant(off));
    const clifford_poly wk = clifford_poly::linear(lp, k, lp.weight_constant(off));
    return poly_mul(wj, fdiff(p, k, sign)) - poly_mul(wk, fdiff(p, j, sign));
}

clifford_poly angular_weight_shift(const clifford_poly& p, int j, int k, int sign) {
    check_sign(sign, "angular_weight_shift");
    check_axis(j, p.params().n, "angular_weight_shift");
    check_axis(k, p.params().n, "angular_weight_shift");
    if (j == k) throw domain_error("angular_weight_shift: axes must differ");
    const weight_kind wk = sign > 0 ? weight_kind::plus : weight_kind::minus;
    return weight_apply(fdiff(p, k, -sign), j, wk) - weight_apply(fdiff(p, j, -sign), k, wk);
}

clifford_poly sheffer_map(const clifford_poly& scalar_poly, int sign) {
    check_sign(sign, "sheffer");
    if (!scalar_poly.has_scalar_blades_only())
        throw domain_error("sheffer_map: input must carry scalar blades only");
    const lattice_params& lp = scalar_poly.params();
    const weight_kind wk = sign > 0 ? weight_kind::plus : weight_kind::minus;
    clifford_poly out = clifford_poly::zero(lp);
    for (const auto& [alpha, m] : scalar_poly.terms()) {
        clifford_poly image = clifford_poly::constant(lp, rational(1));
        for (int j = 1; j <= lp.n; ++j)
            for (std::uint32_t r = 0; r < alpha[j - 1]; ++r)
                image = weight_apply(image, j, wk);
        out = out + m.scalar_part() * image;
    }
    return out;
}

clifford_poly semigroup_exp(const rational& t, const clifford_poly& p) {
    // Generator E_h^- - E_h^+ strictly lowers degree, so the series is the
    // finite sum over r <= deg(p)+1. The truncation is verified, not trusted:
    // the next iterate must vanish.
    clifford_poly out = p;
    clifford_poly term = p;
    const int bound = p.degree() + 1;
    rational tpow(1);
    rational rfact(1);
    for (int r = 1; r <= bound && !term.is_zero(); ++r) {
        term = euler(term, -1) - euler(term, +1);
        tpow *= t;
        rfact *= rational(r);
        out = out + (tpow / rfact) * term;
    }
    if (!term.is_zero()) {
        clifford_poly next = euler(term, -1) - euler(term, +1);
        if (!next.is_zero())
            throw math_error("semigroup_exp: generator failed to lower degree; residual " +
                             next.str());
    }
    return out;
}

namespace {

clifford_poly apply_angular_classical(const op_expr& e, const clifford_poly& p) {
    const lattice_params& lp = p.params();
    check_axis(e.axis_j, lp.n, "angular-classical");
    check_axis(e.axis_k, lp.n, "angular-classical");
    const clifford_poly xj = clifford_poly::variable(lp, e.axis_j);
    const clifford_poly xk = clifford_poly::variable(lp, e.axis_k);
    return poly_mul(xj, poly_derivative(p, e.axis_k)) -
           poly_mul(xk, poly_derivative(p, e.axis_j));
}

clifford_poly apply_primitive(const op_expr& e, const clifford_poly& p) {
    switch (e.prim) {
    case prim_kind::identity: return p;
    case prim_kind::shift:
        check_axis(e.axis_j, p.params().n, "shift");
        return shift(p, e.axis_j, e.sign);
    case prim_kind::fdiff: return fdiff(p, e.axis_j, e.sign);
    case prim_kind::weight: return weight_apply(p, e.axis_j, e.wkind);
    case prim_kind::dirac: return dirac(p, e.sign);
    case prim_kind::euler: return euler(p, e.sign);
    case prim_kind::raise_op: return raise(p, e.sign);
    case prim_kind::angular: return angular(p, e.axis_j, e.axis_k, e.sign);
    case prim_kind::cderiv:
        check_axis(e.axis_j, p.params().n, "cderiv");
        return poly_derivative(p, e.axis_j);
    case prim_kind::sheffer: return sheffer_map(p, e.sign);
    case prim_kind::evolution: return semigroup_exp(e.time, p);
    case prim_kind::angular_classical: return apply_angular_classical(e, p);
    }
    throw domain_error("apply: unknown primitive");
}

} // namespace

clifford_poly apply(const op_expr& e, const clifford_poly& p) {
    switch (e.node) {
    case node_kind::primitive: return apply_primitive(e, p);
    case node_kind::compose: {
        // (compose A B) means A after B.
        clifford_poly out = p;
        for (auto it = e.children.rbegin(); it != e.children.rend(); ++it)
            out = apply(**it, out);
        return out;
    }
    case node_kind::sum: {
        clifford_poly out = clifford_poly::zero(p.params());
        for (const auto& c : e.children) out = out + apply(*c, p);
        return out;
    }
    case node_kind::scale: return e.factor * apply(*e.children[0], p);
    case node_kind::power: {
        clifford_poly out = p;
        for (unsigned i = 0; i < e.exponent; ++i) out = apply(*e.children[0], out);
        return out;
    }
    case node_kind::commutator: {
        const op_expr& a = *e.children[0];
        const op_expr& b = *e.children[1];
        return apply(a, apply(b, p)) - apply(b, apply(a, p));
    }
    }
    throw domain_error("apply: unknown node");
}

} // namespace cliflat
