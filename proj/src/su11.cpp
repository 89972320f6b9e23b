#include "cliflat/su11.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cliflat/linsolve.hpp"

namespace cliflat {

rational pochhammer(const rational& a, unsigned r) {
    rational out(1);
    for (unsigned i = 0; i < r; ++i) out *= a + rational(static_cast<long>(i));
    return out;
}

namespace {

// Denominator Pochhammer (c)_r with singularity detection: the first index i
// with c + i = 0 poisons every r > i.
struct pochhammer_den {
    explicit pochhammer_den(rational c) : c_(std::move(c)) {}

    // (c)_r, or nullopt with the offending factor index recorded.
    std::optional<rational> at(unsigned r, int& singular_r) {
        rational v(1);
        for (unsigned i = 0; i < r; ++i) {
            const rational f = c_ + rational(static_cast<long>(i));
            if (f.is_zero()) {
                singular_r = static_cast<int>(r);
                return std::nullopt;
            }
            v *= f;
        }
        return v;
    }

private:
    rational c_;
};

rational c_of(unsigned s, int n) {
    return rational(-2l * static_cast<long>(s) - n + 2);
}

gamma_value sum_over_terms(unsigned s, int n,
                           const std::function<rational(unsigned)>& numerator) {
    pochhammer_den den(c_of(s, n));
    gamma_value out;
    rational total(0);
    for (unsigned r = 0; r <= s; ++r) {
        int bad = -1;
        const auto d = den.at(r, bad);
        if (!d) {
            out.value.reset();
            out.singular_r = bad;
            return out;
        }
        total += numerator(r) / *d;
    }
    out.value = total;
    return out;
}

} // namespace

gamma_value gamma_direct(unsigned s, int n) {
    const rational a(-static_cast<long>(s) - n - 1);
    return sum_over_terms(s, n, [&](unsigned r) {
        rational t = pochhammer(a, r) * binomial_rat(s, r);
        if (r & 1u) t = -t;
        return t;
    });
}

gamma_value gamma_2f1(unsigned s, int n) {
    const rational a(-static_cast<long>(s) - n - 1);
    const rational b(-static_cast<long>(s));
    return sum_over_terms(s, n, [&](unsigned r) {
        return pochhammer(a, r) * pochhammer(b, r) / factorial_rat(r);
    });
}

gamma_value gamma_0f1(unsigned s, int n) {
    return sum_over_terms(s, n, [&](unsigned r) { return binomial_rat(s, r); });
}

gamma_value gamma_1f1_corrected(unsigned s, int n) {
    const rational a(-static_cast<long>(s) - n - 1);
    // (d/dt)^r t^s at t = 1 contributes s!/(s-r)!; the 1F1 coefficient is
    // (a)_r (-1)^r / ((c)_r r!).
    return sum_over_terms(s, n, [&](unsigned r) {
        rational t = pochhammer(a, r) / factorial_rat(r);
        if (r & 1u) t = -t;
        return t * factorial_rat(s) / factorial_rat(s - r);
    });
}

std::vector<gamma_row> gamma_table(unsigned s_max, int n_max) {
    std::vector<gamma_row> rows;
    for (unsigned s = 0; s <= s_max; ++s)
        for (int n = 1; n <= n_max; ++n)
            rows.push_back(gamma_row{s, n, gamma_direct(s, n), gamma_2f1(s, n), gamma_0f1(s, n),
                                     gamma_1f1_corrected(s, n)});
    return rows;
}

// ---------------------------------------------------------------------------

clifford_poly raise_over_h(const clifford_poly& p, int sign) {
    const weight_kind wk = sign > 0 ? weight_kind::plus : weight_kind::minus;
    clifford_poly out = clifford_poly::zero(p.params());
    for (int j = 1; j <= p.params().n; ++j) out = out + weight_apply(p, j, wk);
    return (rational(1) / p.params().h) * out;
}

std::optional<rational> proportionality(const clifford_poly& a, const clifford_poly& b) {
    if (b.is_zero()) return std::nullopt;
    const auto& [alpha, mv] = *b.terms().begin();
    const auto& [blade, coeff] = *mv.terms().begin();
    const rational ratio = a.coeff(alpha).coeff(blade) / coeff;
    if (a - ratio * b == clifford_poly::zero(a.params())) return ratio;
    return std::nullopt;
}

ladder_basis build_ladder(int sign, const clifford_poly& m0, unsigned s_max) {
    if (sign != +1 && sign != -1) throw domain_error("build_ladder: sign must be +1 or -1");
    const clifford_poly rp = euler(m0, +1);
    const clifford_poly rm = euler(m0, -1);
    if (!rp.is_zero() || !rm.is_zero())
        throw math_error("build_ladder: seed is not in the joint kernel; E+ residual = " +
                         rp.str() + ", E- residual = " + rm.str());

    ladder_basis out;
    out.sign = sign;
    out.w.push_back(m0);
    for (unsigned s = 1; s <= s_max; ++s) out.w.push_back(raise_over_h(out.w.back(), sign));

    for (unsigned s = 0; s <= s_max; ++s) {
        const clifford_poly eig =
            euler(out.w[s], sign) - rational(static_cast<long>(s)) * out.w[s];
        if (!eig.is_zero())
            throw math_error("build_ladder: eigenvalue check failed at s = " +
                             std::to_string(s) + "; residual = " + eig.str());
    }

    for (unsigned s = 1; s <= s_max; ++s) {
        const clifford_poly lowered = euler(out.w[s], +1) - euler(out.w[s], -1);
        const auto ratio = proportionality(lowered, out.w[s - 1]);
        if (!ratio)
            throw math_error("build_ladder: (E+ - E-) w_s is not proportional to w_{s-1} at s = " +
                             std::to_string(s));
        out.lowering_c.push_back(*ratio);
    }
    return out;
}

appell_sequence build_appell(int sign, unsigned s_max, const lattice_params& params) {
    if (sign != +1 && sign != -1) throw domain_error("build_appell: sign must be +1 or -1");
    appell_sequence out;
    out.sign = sign;

    std::vector<clifford_poly> u;
    u.push_back(clifford_poly::constant(params, rational(1)));
    for (unsigned s = 1; s <= s_max; ++s) u.push_back(raise(u.back(), sign));

    out.lambda.push_back(rational(1));
    rational lambda(1);
    for (unsigned s = 1; s <= s_max; ++s) {
        const clifford_poly img = dirac(u[s], -sign);
        const auto ratio = proportionality(img, u[s - 1]);
        if (!ratio)
            throw math_error("build_appell: D u_s is not proportional to u_{s-1} at s = " +
                             std::to_string(s) + "; image = " + img.str());
        if (ratio->is_zero())
            throw math_error("build_appell: proportionality constant vanishes at s = " +
                             std::to_string(s) + "; normalization impossible");
        out.c.push_back(*ratio);
        lambda *= rational(static_cast<long>(s)) / *ratio;
        out.lambda.push_back(lambda);
    }

    for (unsigned s = 0; s <= s_max; ++s) out.m.push_back(out.lambda[s] * u[s]);

    // The defining property, verified exactly.
    for (unsigned s = 1; s <= s_max; ++s) {
        const clifford_poly res =
            dirac(out.m[s], -sign) - rational(static_cast<long>(s)) * out.m[s - 1];
        if (!res.is_zero())
            throw math_error("build_appell: Appell property failed at s = " + std::to_string(s) +
                             "; residual = " + res.str());
    }
    return out;
}

clifford_poly dirac_exp(const rational& t, int dirac_sign, const clifford_poly& p) {
    clifford_poly out = p;
    clifford_poly term = p;
    const int bound = p.degree() + 1;
    rational tpow(1);
    rational rfact(1);
    for (int r = 1; r <= bound && !term.is_zero(); ++r) {
        term = dirac(term, dirac_sign);
        tpow *= t;
        rfact *= rational(r);
        out = out + (tpow / rfact) * term;
    }
    if (!term.is_zero() && !dirac(term, dirac_sign).is_zero())
        throw math_error("dirac_exp: Dirac operator failed to lower degree");
    return out;
}

// ---------------------------------------------------------------------------

op_ptr casimir_expr(int series_sign, const lattice_params& params) {
    if (series_sign != +1 && series_sign != -1)
        throw domain_error("casimir: sign must be +1 or -1");
    const rational half_n(params.n, 2);
    const op_ptr e_pm = ops::euler(series_sign);
    const op_ptr shifted1 =
        ops::sum({e_pm, ops::scale(half_n, ops::identity())});
    const op_ptr shifted2 =
        ops::sum({e_pm, ops::scale(half_n - rational(1), ops::identity())});
    const op_ptr w_over_h =
        ops::scale(rational(1) / params.h,
                   ops::weight_total(series_sign > 0 ? weight_kind::plus : weight_kind::minus,
                                     params.n));
    const op_ptr lower = ops::sum({ops::euler(+1), ops::scale(rational(-1), ops::euler(-1))});
    return ops::sum({ops::compose(shifted1, shifted2),
                     ops::scale(rational(-1), ops::compose(w_over_h, lower))});
}

clifford_poly casimir_apply(const clifford_poly& p, int series_sign) {
    return apply(*casimir_expr(series_sign, p.params()), p);
}

// ---------------------------------------------------------------------------

namespace {

// Row of the coefficient vector of a scalar polynomial w.r.t. a monomial list.
std::vector<rational> scalar_coords(const clifford_poly& p,
                                    const std::vector<multi_index>& basis) {
    std::vector<rational> row(basis.size(), rational(0));
    std::size_t found = 0;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const multivector c = p.coeff(basis[i]);
        if (!c.is_scalar())
            throw domain_error("scalar_coords: non-scalar coefficient");
        if (!c.is_zero()) ++found;
        row[i] = c.scalar_part();
    }
    if (found != p.terms().size())
        throw domain_error("scalar_coords: polynomial leaves the monomial span");
    return row;
}

clifford_poly from_scalar_coords(const lattice_params& params,
                                 const std::vector<multi_index>& basis,
                                 const std::vector<rational>& coords) {
    clifford_poly out = clifford_poly::zero(params);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coords[i].is_zero()) continue;
        out.add_term(basis[i], multivector::scalar(params.n, coords[i]));
    }
    return out;
}

} // namespace

eigen_basis eigenspace(const lattice_params& params, int d, long s) {
    if (d < 0) throw domain_error("eigenspace: degree bound must be >= 0");
    const std::vector<multi_index> monos = scalar_monomials(params.n, d);
    const std::size_t dim = monos.size();

    // Stack (E+ - s I) over (E- - s I) on the scalar monomial basis; both
    // operators preserve total degree, so the span is closed.
    rat_matrix m(2 * dim, std::vector<rational>(dim, rational(0)));
    for (std::size_t i = 0; i < dim; ++i) {
        const clifford_poly mono = clifford_poly::monomial(params, monos[i]);
        const std::vector<rational> ep = scalar_coords(euler(mono, +1), monos);
        const std::vector<rational> em = scalar_coords(euler(mono, -1), monos);
        for (std::size_t rrow = 0; rrow < dim; ++rrow) {
            m[rrow][i] = ep[rrow];
            m[dim + rrow][i] = em[rrow];
        }
        m[i][i] -= rational(s);
        m[dim + i][i] -= rational(s);
    }

    eigen_basis out;
    out.degree_bound = d;
    out.eigenvalue = s;
    for (auto v : nullspace(m, dim)) {
        // Canonical representative: leading coefficient +1 in the
        // (degree, lex) monomial order.
        for (const auto& entry : v) {
            if (!entry.is_zero()) {
                const rational inv = rational(1) / entry;
                for (auto& x : v) x *= inv;
                break;
            }
        }
        out.basis.push_back(from_scalar_coords(params, monos, v));
    }

    for (const auto& p : out.basis) {
        const clifford_poly sp = rational(s) * p;
        if (euler(p, +1) != sp || euler(p, -1) != sp)
            throw math_error("eigenspace: solver returned a non-eigenfunction");
    }
    return out;
}

std::vector<fourier_component> fourier_decompose(const clifford_poly& p, int sign) {
    if (sign != +1 && sign != -1) throw domain_error("fourier_decompose: sign must be +1 or -1");
    const lattice_params& params = p.params();
    const int d = std::max(p.degree(), 0);
    const std::vector<multi_index> monos = scalar_monomials(params.n, d);
    const std::size_t dim = monos.size();

    // Candidate columns: ((1/h) W^{+-})^r b for b in the joint eigenspace at
    // eigenvalue m, every m + r <= d. These span the degree <= d space.
    struct column {
        long s;
        unsigned r;
        clifford_poly raised; // ((1/h) W^{+-})^r base
        clifford_poly base;   // joint eigenspace element, eigenvalue s - r
    };
    std::vector<column> columns;
    for (int m = 0; m <= d; ++m) {
        const eigen_basis eb = eigenspace(params, d, m);
        for (const auto& b : eb.basis) {
            if (b.degree() > m) continue; // eigenfunctions at eigenvalue m have degree m
            clifford_poly raised = b;
            for (int r = 0; m + r <= d; ++r) {
                if (r > 0) raised = raise_over_h(raised, sign);
                columns.push_back(column{m + r, static_cast<unsigned>(r), raised, b});
            }
        }
    }

    rat_matrix a(dim, std::vector<rational>(columns.size(), rational(0)));
    for (std::size_t c = 0; c < columns.size(); ++c) {
        const std::vector<rational> col = scalar_coords(columns[c].raised, monos);
        for (std::size_t rrow = 0; rrow < dim; ++rrow) a[rrow][c] = col[rrow];
    }

    // Decompose blade-by-blade; the operators are Clifford-scalar.
    std::map<std::pair<long, unsigned>, clifford_poly> parts;
    std::vector<blade_mask> blades;
    for (const auto& [alpha, mv] : p.terms())
        for (const auto& [b, coeff] : mv.terms())
            if (std::find(blades.begin(), blades.end(), b) == blades.end()) blades.push_back(b);

    for (const blade_mask b : blades) {
        std::vector<rational> rhs(dim, rational(0));
        for (std::size_t i = 0; i < dim; ++i) rhs[i] = p.coeff(monos[i]).coeff(b);
        const auto x = solve(a, rhs);
        if (!x)
            throw math_error("fourier_decompose: no exact decomposition at degree " +
                             std::to_string(d) + " (violated direct-sum claim)");
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if ((*x)[c].is_zero()) continue;
            const auto key = std::make_pair(columns[c].s, columns[c].r);
            clifford_poly piece(params);
            for (const auto& [alpha, mv] : columns[c].base.terms())
                piece.add_term(alpha, mv.scalar_part() * (*x)[c] *
                                          multivector::basis_blade(params.n, b));
            auto it = parts.find(key);
            if (it == parts.end())
                parts.emplace(key, piece);
            else
                it->second = it->second + piece;
        }
    }

    std::vector<fourier_component> out;
    clifford_poly recon = clifford_poly::zero(params);
    for (const auto& [key, q] : parts) {
        if (q.is_zero()) continue;
        out.push_back(fourier_component{key.first, key.second, q});
        clifford_poly raised = q;
        for (unsigned r = 0; r < key.second; ++r) raised = raise_over_h(raised, sign);
        recon = recon + raised;
    }
    if (recon != p) {
        const clifford_poly residual = p - recon;
        throw math_error("fourier_decompose: reconstruction residual " + residual.str());
    }
    return out;
}

// ---------------------------------------------------------------------------

almansi_record almansi_reconstruct(unsigned s, int sign, const clifford_poly& w_s) {
    if (sign != +1 && sign != -1)
        throw domain_error("almansi_reconstruct: sign must be +1 or -1");
    const lattice_params& params = w_s.params();
    const long n = params.n;

    almansi_record rec{s, sign, {}, clifford_poly::zero(params), false, std::nullopt, false,
                       std::nullopt};

    rec.c.push_back(rational(1));
    for (unsigned r = 0; r + 1 <= s; ++r) {
        const rational den =
            rational(static_cast<long>(r) + 1) *
            rational(-2l * static_cast<long>(s) - n + static_cast<long>(r) + 2);
        if (den.is_zero())
            throw math_error("almansi_reconstruct: singular recursion denominator at r = " +
                             std::to_string(r));
        rec.c.push_back(rec.c.back() / den);
    }

    clifford_poly lowered = w_s; // (E+ - E-)^r w_s
    clifford_poly m = clifford_poly::zero(params);
    for (unsigned r = 0; r <= s; ++r) {
        if (r > 0) lowered = euler(lowered, +1) - euler(lowered, -1);
        clifford_poly raised = lowered;
        for (unsigned i = 0; i < r; ++i) raised = raise_over_h(raised, sign);
        m = m + rec.c[r] * raised;
    }
    rec.constructed = m;

    const clifford_poly sm = rational(static_cast<long>(s)) * m;
    rec.eigen_ok = (euler(m, +1) == sm) && (euler(m, -1) == sm);

    const gamma_value g = gamma_direct(s, params.n);
    if (!g.singular()) rec.gamma = *g.value;

    rec.actual_ratio = proportionality(m, w_s);
    rec.matches_gamma_scaling =
        rec.gamma.has_value() && (m == *rec.gamma * w_s);
    return rec;
}

} // namespace cliflat
