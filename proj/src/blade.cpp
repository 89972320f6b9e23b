#include "cliflat/blade.hpp"

namespace cliflat {

std::vector<int> blade_indices(blade_mask b) {
    std::vector<int> out;
    while (b != 0) {
        const int i = std::countr_zero(b);
        out.push_back(i + 1);
        b &= b - 1;
    }
    return out;
}

blade_mask blade_from_indices(const std::vector<int>& indices, int n, const std::string& path) {
    blade_mask b = 0;
    int prev = 0;
    for (int j : indices) {
        if (j < 1 || j > n)
            throw parse_error(path, "blade index " + std::to_string(j) +
                                        " out of range 1.." + std::to_string(n));
        if (j <= prev)
            throw parse_error(path, "blade indices not strictly increasing");
        prev = j;
        b |= blade_mask{1} << (j - 1);
    }
    return b;
}

bool blade_lex_before(blade_mask a, blade_mask b) {
    while (a != 0 && b != 0) {
        const int ia = std::countr_zero(a);
        const int ib = std::countr_zero(b);
        if (ia != ib) return ia < ib;
        a &= a - 1;
        b &= b - 1;
    }
    return a == 0 && b != 0;
}

signed_blade blade_product(blade_mask a, blade_mask b, int n) {
    if (!blade_in_dimension(a, n) || !blade_in_dimension(b, n))
        throw domain_error("blade_product: index out of range for dimension " +
                           std::to_string(n));
    // Transpositions needed to interleave b into a: each generator of b
    // crosses every strictly larger generator of a.
    int swaps = 0;
    blade_mask hi = a >> 1;
    while (hi != 0) {
        swaps += std::popcount(hi & b);
        hi >>= 1;
    }
    // Each repeated generator contributes e_j^2 = -1.
    swaps += std::popcount(a & b);
    return signed_blade{(swaps & 1) ? -1 : +1, a ^ b};
}

std::string blade_str(blade_mask b) {
    if (b == 0) return "1";
    std::string out = "e[";
    bool first = true;
    for (int j : blade_indices(b)) {
        if (!first) out += ",";
        out += std::to_string(j);
        first = false;
    }
    out += "]";
    return out;
}

} // namespace cliflat
