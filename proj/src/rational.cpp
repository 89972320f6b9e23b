#include "cliflat/rational.hpp"

namespace cliflat {

namespace {

// An integer literal in canonical form: "0" or [-]?[1-9][0-9]*.
bool canonical_integer(const std::string& s, bool allow_negative) {
    std::size_t i = 0;
    if (i < s.size() && s[i] == '-') {
        if (!allow_negative) return false;
        ++i;
    }
    if (i == s.size()) return false;
    if (s[i] == '0') return i + 1 == s.size() && i == 0; // "0" only, never "-0"
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

} // namespace

rational rational::parse(const std::string& text, const std::string& path) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        if (!canonical_integer(text, true))
            throw parse_error(path, "not a canonical integer: '" + text + "'");
        return rational(mpq_class(mpz_class(text, 10)));
    }
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (!canonical_integer(num, true) || num == "0")
        throw parse_error(path, "non-canonical numerator in '" + text + "'");
    if (!canonical_integer(den, false) || den == "0" || den == "1")
        throw parse_error(path, "non-canonical denominator in '" + text + "'");
    mpz_class n(num, 10), d(den, 10);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (g != 1)
        throw parse_error(path, "non-canonical rational '" + text + "' (gcd " + g.get_str() + ")");
    mpq_class q(n);
    q /= mpq_class(d);
    return rational(q);
}

} // namespace cliflat
