#pragma once

#include <cstdint>
#include <string>
#include <gmpxx.h>

#include "cliflat/errors.hpp"

namespace cliflat {

// Arbitrary-precision rational, always in canonical reduced form
// (gcd(|num|, den) = 1, den >= 1). Every operation is exact.
class rational {
public:
    rational() : value_(0) {}
    rational(long num) : value_(num) {}
    rational(long num, long den) : value_(num, den) {
        if (den == 0) throw domain_error("rational: zero denominator");
        value_.canonicalize();
    }
    explicit rational(const mpq_class& q) : value_(q) { value_.canonicalize(); }

    // Strict parse of the canonical textual form: "p" or "p/q" with q >= 2,
    // gcd(|p|, q) = 1, no leading zeros, no '+' sign, no "-0".
    // Anything else is rejected, including reducible fractions like "2/4".
    static rational parse(const std::string& text, const std::string& path = "rational");

    std::string str() const {
        if (value_.get_den() == 1) return value_.get_num().get_str();
        return value_.get_num().get_str() + "/" + value_.get_den().get_str();
    }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integer() const { return value_.get_den() == 1; }
    int sign() const { return sgn(value_); }

    mpz_class numerator() const { return value_.get_num(); }
    mpz_class denominator() const { return value_.get_den(); }

    // Bit size of numerator plus denominator; the pivoting heuristic for
    // exact elimination prefers small entries.
    std::size_t bit_size() const {
        return mpz_sizeinbase(value_.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(value_.get_den().get_mpz_t(), 2);
    }

    rational operator-() const { return rational(mpq_class(-value_)); }

    rational& operator+=(const rational& o) { value_ += o.value_; return *this; }
    rational& operator-=(const rational& o) { value_ -= o.value_; return *this; }
    rational& operator*=(const rational& o) { value_ *= o.value_; return *this; }
    rational& operator/=(const rational& o) {
        if (o.is_zero()) throw domain_error("rational: division by zero");
        value_ /= o.value_;
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { a += b; return a; }
    friend rational operator-(rational a, const rational& b) { a -= b; return a; }
    friend rational operator*(rational a, const rational& b) { a *= b; return a; }
    friend rational operator/(rational a, const rational& b) { a /= b; return a; }

    friend bool operator==(const rational& a, const rational& b) { return a.value_ == b.value_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.value_ != b.value_; }
    friend bool operator<(const rational& a, const rational& b) { return a.value_ < b.value_; }
    friend bool operator<=(const rational& a, const rational& b) { return a.value_ <= b.value_; }
    friend bool operator>(const rational& a, const rational& b) { return a.value_ > b.value_; }
    friend bool operator>=(const rational& a, const rational& b) { return a.value_ >= b.value_; }

    rational abs() const { return rational(mpq_class(::abs(value_))); }

    rational pow(unsigned k) const {
        rational r(1);
        rational base = *this;
        while (k > 0) {
            if (k & 1u) r *= base;
            base *= base;
            k >>= 1u;
        }
        return r;
    }

private:
    mpq_class value_;
};

inline rational factorial_rat(unsigned k) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return rational(mpq_class(f));
}

inline rational binomial_rat(unsigned s, unsigned r) {
    if (r > s) return rational(0);
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), s, r);
    return rational(mpq_class(b));
}

} // namespace cliflat
