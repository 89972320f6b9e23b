#include <doctest.h>

#include <vector>

#include <nlohmann/json.hpp>

#include "cliflat/json_io.hpp"
#include "cliflat/multivector.hpp"

using namespace cliflat;

namespace {

// Independent sign oracle: concatenate the index lists, bubble-sort with a
// sign flip per transposition, then cancel adjacent equal generators with a
// factor -1 each. Never touches the popcount path.
signed_blade rewrite_oracle(blade_mask a, blade_mask b) {
    std::vector<int> word;
    for (int j : blade_indices(a)) word.push_back(j);
    for (int j : blade_indices(b)) word.push_back(j);
    int sign = 1;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::size_t i = 0; i + 1 < word.size(); ++i) {
            if (word[i] > word[i + 1]) {
                std::swap(word[i], word[i + 1]);
                sign = -sign;
                changed = true;
            } else if (word[i] == word[i + 1]) {
                sign = -sign; // e_j^2 = -1
                word.erase(word.begin() + i, word.begin() + i + 2);
                changed = true;
                break;
            }
        }
    }
    blade_mask out = 0;
    for (int j : word) out |= blade_mask{1} << (j - 1);
    return signed_blade{sign, out};
}

} // namespace

TEST_CASE("blade products match the rewriting oracle exhaustively, n <= 4") {
    for (int n = 1; n <= 4; ++n) {
        const blade_mask top = (blade_mask{1} << n) - 1;
        for (blade_mask a = 0; a <= top; ++a) {
            for (blade_mask b = 0; b <= top; ++b) {
                const signed_blade got = blade_product(a, b, n);
                const signed_blade want = rewrite_oracle(a, b);
                CHECK(got.sign == want.sign);
                CHECK(got.blade == want.blade);
            }
        }
    }
}

TEST_CASE("blade product examples") {
    // e1*e1 = -1 (scalar blade)
    CHECK(blade_product(0b1, 0b1, 2).sign == -1);
    CHECK(blade_product(0b1, 0b1, 2).blade == 0u);
    // e1*e2 = +e12, e2*e1 = -e12
    CHECK(blade_product(0b01, 0b10, 2).sign == +1);
    CHECK(blade_product(0b01, 0b10, 2).blade == 0b11u);
    CHECK(blade_product(0b10, 0b01, 2).sign == -1);
    CHECK(blade_product(0b10, 0b01, 2).blade == 0b11u);
    // e12*e2: the rewriting oracle fixes the sign to -1, result e1.
    const signed_blade oracle = rewrite_oracle(0b11, 0b10);
    CHECK(oracle.sign == -1);
    CHECK(oracle.blade == 0b01u);
    CHECK(blade_product(0b11, 0b10, 2).sign == oracle.sign);
    CHECK(blade_product(0b11, 0b10, 2).blade == oracle.blade);

    CHECK_THROWS_AS(blade_product(0b100, 0b1, 2), domain_error);
}

TEST_CASE("swap symmetry: products of a and b agree up to a computable sign") {
    for (int n = 1; n <= 4; ++n) {
        const blade_mask top = (blade_mask{1} << n) - 1;
        for (blade_mask a = 0; a <= top; ++a) {
            for (blade_mask b = 0; b <= top; ++b) {
                const signed_blade ab = blade_product(a, b, n);
                const signed_blade ba = blade_product(b, a, n);
                CHECK(ab.blade == ba.blade);
                const int expo = grade(a) * grade(b) - grade(a & b);
                const int expected = (expo % 2 == 0) ? +1 : -1;
                CHECK(ab.sign * ba.sign == expected);
            }
        }
    }
}

TEST_CASE("multivector product examples") {
    const int n = 2;
    const multivector e1 = multivector::basis_vector(n, 1);
    const multivector e2 = multivector::basis_vector(n, 2);
    const multivector one = multivector::scalar(n, rational(1));

    CHECK(mv_mul(e1, e1) == multivector::scalar(n, rational(-1)));
    const multivector m = rational(3, 4) * multivector::basis_blade(n, 0b11) + e2;
    CHECK(mv_mul(one, m) == m);
    // (e1+e2)(e1-e2) expands to -2 e12 exactly.
    CHECK(mv_mul(e1 + e2, e1 - e2) == rational(-2) * multivector::basis_blade(n, 0b11));
}

TEST_CASE("geometric product is associative, exhaustive over blades for n <= 3") {
    for (int n = 1; n <= 3; ++n) {
        const blade_mask top = (blade_mask{1} << n) - 1;
        for (blade_mask a = 0; a <= top; ++a)
            for (blade_mask b = 0; b <= top; ++b)
                for (blade_mask c = 0; c <= top; ++c) {
                    const multivector ma = multivector::basis_blade(n, a);
                    const multivector mb = multivector::basis_blade(n, b);
                    const multivector mc = multivector::basis_blade(n, c);
                    CHECK(mv_mul(mv_mul(ma, mb), mc) == mv_mul(ma, mv_mul(mb, mc)));
                }
    }
}

TEST_CASE("geometric product distributes and stays reduced") {
    const int n = 3;
    multivector a = multivector::basis_vector(n, 1) +
                    rational(1, 2) * multivector::basis_blade(n, 0b110);
    multivector b = multivector::basis_vector(n, 2) - multivector::scalar(n, rational(3));
    multivector c = multivector::basis_blade(n, 0b101);
    CHECK(mv_mul(a, b + c) == mv_mul(a, b) + mv_mul(a, c));
    // annihilation prunes to the empty map, never a stored zero
    CHECK((a - a).terms().empty());
}

TEST_CASE("bilinear form on grade-1 vectors") {
    const int n = 2;
    const multivector e1 = multivector::basis_vector(n, 1);
    const multivector e2 = multivector::basis_vector(n, 2);
    CHECK(bilinear_form(e1, e1) == rational(1));
    CHECK(bilinear_form(e1, e2) == rational(0));
    CHECK(bilinear_form(rational(2) * e1 + rational(3) * e2, e2) == rational(3));

    // B(x, y) = sum_j x_j y_j over a spanning set
    for (long x1 = -2; x1 <= 2; ++x1)
        for (long x2 = -2; x2 <= 2; ++x2)
            for (long y1 = -1; y1 <= 1; ++y1)
                for (long y2 = -1; y2 <= 1; ++y2) {
                    const multivector x = rational(x1) * e1 + rational(x2) * e2;
                    const multivector y = rational(y1) * e1 + rational(y2) * e2;
                    CHECK(bilinear_form(x, y) == rational(x1 * y1 + x2 * y2));
                }

    CHECK_THROWS_AS(bilinear_form(mv_mul(e1, e2), e1), domain_error);
    CHECK_THROWS_AS(bilinear_form(multivector::scalar(n, rational(1)), e1), domain_error);
}

TEST_CASE("dimension mismatches are rejected") {
    CHECK_THROWS_AS(mv_mul(multivector::basis_vector(2, 1), multivector::basis_vector(3, 1)),
                    domain_error);
    CHECK_THROWS_AS(multivector::basis_vector(2, 3), domain_error);
}

TEST_CASE("multivector JSON form") {
    const int n = 3;
    const multivector m = rational(3, 4) * multivector::basis_blade(n, 0b101) +
                          rational(-2) * multivector::scalar(n, rational(1));
    const nlohmann::json j = multivector_to_json(m);
    CHECK(j["n"] == 3);
    CHECK(j["terms"][0]["blade"] == nlohmann::json::array());
    CHECK(j["terms"][0]["coeff"] == "-2");
    CHECK(j["terms"][1]["blade"] == nlohmann::json({1, 3}));
    CHECK(j["terms"][1]["coeff"] == "3/4");
    CHECK(multivector_from_json(j) == m);

    // non-canonical inputs are rejected with the offending path
    nlohmann::json bad = j;
    bad["terms"][1]["coeff"] = "6/8";
    CHECK_THROWS_AS(multivector_from_json(bad), parse_error);
    bad = j;
    bad["terms"][1]["blade"] = {3, 1};
    CHECK_THROWS_AS(multivector_from_json(bad), parse_error);
    bad = j;
    bad["terms"][1]["blade"] = {1, 4};
    CHECK_THROWS_AS(multivector_from_json(bad), parse_error);
}
