#include "cliflat/multivector.hpp"

namespace cliflat {

void multivector::add_term(blade_mask b, const rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(b, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

void multivector::normalize() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (!blade_in_dimension(it->first, n_))
            throw domain_error("multivector: blade out of range for dimension " +
                               std::to_string(n_));
        if (it->second.is_zero())
            it = terms_.erase(it);
        else
            ++it;
    }
}

int multivector::top_grade() const {
    int g = -1;
    for (const auto& [b, c] : terms_) g = std::max(g, grade(b));
    return g;
}

bool multivector::is_grade(int g) const {
    for (const auto& [b, c] : terms_)
        if (grade(b) != g) return false;
    return true;
}

multivector multivector::grade_part(int g) const {
    multivector out(n_);
    for (const auto& [b, c] : terms_)
        if (grade(b) == g) out.terms_.emplace(b, c);
    return out;
}

multivector multivector::operator-() const {
    multivector out(n_);
    for (const auto& [b, c] : terms_) out.terms_.emplace(b, -c);
    return out;
}

multivector operator+(const multivector& a, const multivector& b) {
    if (a.n_ != b.n_) throw domain_error("multivector addition: dimension mismatch");
    multivector out = a;
    for (const auto& [blade, c] : b.terms_) out.add_term(blade, c);
    return out;
}

multivector operator-(const multivector& a, const multivector& b) {
    if (a.n_ != b.n_) throw domain_error("multivector subtraction: dimension mismatch");
    multivector out = a;
    for (const auto& [blade, c] : b.terms_) out.add_term(blade, -c);
    return out;
}

multivector operator*(const rational& c, const multivector& m) {
    multivector out(m.dimension());
    if (c.is_zero()) return out;
    for (const auto& [blade, x] : m.terms()) out.add_term(blade, c * x);
    return out;
}

multivector mv_mul(const multivector& a, const multivector& b) {
    if (a.n_ != b.n_) throw domain_error("mv_mul: dimension mismatch");
    multivector out(a.n_);
    for (const auto& [ba, ca] : a.terms_) {
        for (const auto& [bb, cb] : b.terms_) {
            const signed_blade p = blade_product(ba, bb, a.n_);
            rational c = ca * cb;
            if (p.sign < 0) c = -c;
            out.add_term(p.blade, c);
        }
    }
    return out;
}

multivector blade_lmul(int j, const multivector& m) {
    if (j < 1 || j > m.n_) throw domain_error("blade_lmul: axis out of range");
    const blade_mask ej = blade_mask{1} << (j - 1);
    multivector out(m.n_);
    for (const auto& [b, c] : m.terms_) {
        const signed_blade p = blade_product(ej, b, m.n_);
        out.add_term(p.blade, p.sign < 0 ? -c : c);
    }
    return out;
}

rational bilinear_form(const multivector& x, const multivector& y) {
    if (x.dimension() != y.dimension())
        throw domain_error("bilinear_form: dimension mismatch");
    if (!x.is_grade(1) || !y.is_grade(1) || x.is_zero() || y.is_zero()) {
        // Zero vectors are fine; mixed or higher grades are not.
        if (!(x.is_zero() || x.is_grade(1)) || !(y.is_zero() || y.is_grade(1)))
            throw domain_error("bilinear_form: arguments must be pure grade 1");
    }
    multivector s = mv_mul(x, y) + mv_mul(y, x);
    multivector val = rational(-1, 2) * s;
    if (!val.is_scalar())
        throw domain_error("bilinear_form: product did not reduce to a scalar");
    return val.scalar_part();
}

std::string multivector::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [b, c] : terms_) {
        if (!first) out += " + ";
        out += c.str();
        if (b != 0) out += "*" + blade_str(b);
        first = false;
    }
    return out;
}

} // namespace cliflat
