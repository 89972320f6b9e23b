#include "cliflat/poly.hpp"

#include <functional>

namespace cliflat {

std::vector<multi_index> scalar_monomials(int n, int d) {
    std::vector<multi_index> out;
    multi_index cur(n, 0);
    std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == n - 1) {
            cur[pos] = static_cast<std::uint32_t>(remaining);
            out.push_back(cur);
            return;
        }
        for (int e = remaining; e >= 0; --e) {
            cur[pos] = static_cast<std::uint32_t>(e);
            rec(pos + 1, remaining - e);
        }
    };
    for (int deg = 0; deg <= d; ++deg) rec(0, deg);
    return out;
}

std::vector<clifford_poly> monomial_blade_basis(const lattice_params& params, int d,
                                                bool include_blades) {
    std::vector<clifford_poly> out;
    const auto monos = scalar_monomials(params.n, d);
    const blade_mask top = include_blades
                               ? static_cast<blade_mask>((blade_mask{1} << params.n) - 1)
                               : 0;
    for (const auto& alpha : monos)
        for (blade_mask b = 0; b <= top; ++b)
            out.push_back(clifford_poly::monomial(params, alpha, b));
    return out;
}

void clifford_poly::check_alpha(const multi_index& alpha) const {
    if (static_cast<int>(alpha.size()) != params_.n)
        throw domain_error("clifford_poly: multi-index length " +
                           std::to_string(alpha.size()) + " != dimension " +
                           std::to_string(params_.n));
}

void clifford_poly::add_term(const multi_index& alpha, const multivector& m) {
    check_alpha(alpha);
    if (m.dimension() != params_.n)
        throw domain_error("clifford_poly: coefficient dimension mismatch");
    if (m.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(alpha, m);
    if (!inserted) {
        it->second = it->second + m;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

clifford_poly clifford_poly::from_multivector(const lattice_params& p, const multivector& m) {
    clifford_poly out(p);
    out.add_term(multi_index(p.n, 0), m);
    return out;
}

clifford_poly clifford_poly::variable(const lattice_params& p, int j) {
    if (j < 1 || j > p.n) throw domain_error("variable: axis out of range");
    clifford_poly out(p);
    multi_index alpha(p.n, 0);
    alpha[j - 1] = 1;
    out.add_term(alpha, multivector::scalar(p.n, rational(1)));
    return out;
}

clifford_poly clifford_poly::monomial(const lattice_params& p, const multi_index& alpha,
                                      blade_mask b, const rational& c) {
    clifford_poly out(p);
    out.add_term(alpha, c * multivector::basis_blade(p.n, b));
    return out;
}

clifford_poly clifford_poly::linear(const lattice_params& p, int j, const rational& c) {
    clifford_poly out = variable(p, j);
    out.add_term(multi_index(p.n, 0), multivector::scalar(p.n, c));
    return out;
}

int clifford_poly::degree() const {
    int d = -1;
    for (const auto& [alpha, m] : terms_) d = std::max(d, total_degree(alpha));
    return d;
}

multivector clifford_poly::coeff(const multi_index& alpha) const {
    auto it = terms_.find(alpha);
    return it == terms_.end() ? multivector(params_.n) : it->second;
}

bool clifford_poly::has_scalar_blades_only() const {
    for (const auto& [alpha, m] : terms_)
        if (!m.is_scalar()) return false;
    return true;
}

clifford_poly clifford_poly::operator-() const {
    clifford_poly out(params_);
    for (const auto& [alpha, m] : terms_) out.terms_.emplace(alpha, -m);
    return out;
}

clifford_poly operator+(const clifford_poly& a, const clifford_poly& b) {
    if (a.params_ != b.params_) throw domain_error("poly addition: parameter mismatch");
    clifford_poly out = a;
    for (const auto& [alpha, m] : b.terms_) out.add_term(alpha, m);
    return out;
}

clifford_poly operator-(const clifford_poly& a, const clifford_poly& b) {
    if (a.params_ != b.params_) throw domain_error("poly subtraction: parameter mismatch");
    clifford_poly out = a;
    for (const auto& [alpha, m] : b.terms_) out.add_term(alpha, -m);
    return out;
}

clifford_poly operator*(const rational& c, const clifford_poly& p) {
    clifford_poly out(p.params_);
    if (c.is_zero()) return out;
    for (const auto& [alpha, m] : p.terms_) out.add_term(alpha, c * m);
    return out;
}

clifford_poly poly_mul(const clifford_poly& a, const clifford_poly& b) {
    if (a.params() != b.params()) throw domain_error("poly_mul: parameter mismatch");
    clifford_poly out(a.params());
    const int n = a.params().n;
    for (const auto& [aa, ma] : a.terms()) {
        for (const auto& [ab, mb] : b.terms()) {
            multi_index alpha(n);
            for (int i = 0; i < n; ++i) alpha[i] = aa[i] + ab[i];
            out.add_term(alpha, mv_mul(ma, mb));
        }
    }
    return out;
}

clifford_poly poly_blade_lmul(int j, const clifford_poly& p) {
    clifford_poly out(p.params());
    for (const auto& [alpha, m] : p.terms()) out.add_term(alpha, blade_lmul(j, m));
    return out;
}

clifford_poly poly_substitute_shift(const clifford_poly& p, int j, const rational& delta) {
    if (j < 1 || j > p.params().n) throw domain_error("shift: axis out of range");
    clifford_poly out(p.params());
    if (delta.is_zero()) return p;
    for (const auto& [alpha, m] : p.terms()) {
        const unsigned aj = alpha[j - 1];
        // (x_j + delta)^aj expanded exactly.
        for (unsigned r = 0; r <= aj; ++r) {
            multi_index beta = alpha;
            beta[j - 1] = r;
            const rational c = binomial_rat(aj, r) * delta.pow(aj - r);
            out.add_term(beta, c * m);
        }
    }
    return out;
}

clifford_poly shift(const clifford_poly& p, int j, int dir) {
    if (dir != +1 && dir != -1) throw domain_error("shift: direction must be +1 or -1");
    const rational d = dir > 0 ? p.params().h : -p.params().h;
    return poly_substitute_shift(p, j, d);
}

multivector poly_eval_at(const clifford_poly& p, const std::vector<rational>& x) {
    if (static_cast<int>(x.size()) != p.params().n)
        throw domain_error("poly_eval: point dimension mismatch");
    multivector out(p.params().n);
    for (const auto& [alpha, m] : p.terms()) {
        rational c(1);
        for (std::size_t i = 0; i < x.size(); ++i) c *= x[i].pow(alpha[i]);
        out = out + c * m;
    }
    return out;
}

multivector poly_eval(const clifford_poly& p, const std::vector<long>& k) {
    std::vector<rational> x;
    x.reserve(k.size());
    for (long ki : k) x.push_back(rational(ki) * p.params().h);
    return poly_eval_at(p, x);
}

clifford_poly poly_derivative(const clifford_poly& p, int j) {
    if (j < 1 || j > p.params().n) throw domain_error("derivative: axis out of range");
    clifford_poly out(p.params());
    for (const auto& [alpha, m] : p.terms()) {
        const unsigned aj = alpha[j - 1];
        if (aj == 0) continue;
        multi_index beta = alpha;
        beta[j - 1] = aj - 1;
        out.add_term(beta, rational(static_cast<long>(aj)) * m);
    }
    return out;
}

std::string clifford_poly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [alpha, m] : terms_) {
        if (!first) out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < alpha.size(); ++i) {
            if (alpha[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(i + 1);
            if (alpha[i] > 1) mono += "^" + std::to_string(alpha[i]);
        }
        if (mono.empty()) {
            out += "(" + m.str() + ")";
        } else {
            out += "(" + m.str() + ")*" + mono;
        }
        first = false;
    }
    return out;
}

} // namespace cliflat
