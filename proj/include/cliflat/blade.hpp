#pragma once

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "cliflat/errors.hpp"

namespace cliflat {

// A basis blade of Cl(0,n) encoded as a bitset: bit j-1 set means the
// generator e_j is a factor. The empty set is the scalar blade.
using blade_mask = std::uint32_t;

constexpr int max_dimension = 16;

inline int grade(blade_mask b) { return std::popcount(b); }

inline bool blade_in_dimension(blade_mask b, int n) {
    return n >= 0 && n <= max_dimension && (b >> n) == 0;
}

// 1-based generator indices, strictly increasing.
std::vector<int> blade_indices(blade_mask b);

blade_mask blade_from_indices(const std::vector<int>& indices, int n,
                              const std::string& path = "blade");

// Lexicographic order on the increasing index sequences, so that
// e.g. [] < [1] < [1,2] < [1,3] < [2].
bool blade_lex_before(blade_mask a, blade_mask b);

struct blade_lex_less {
    bool operator()(blade_mask a, blade_mask b) const { return blade_lex_before(a, b); }
};

// Geometric product of two basis blades in Cl(0,n): e_j e_k = -e_k e_j for
// j != k and e_j^2 = -1. Returns the accumulated sign and the canonical
// blade of the symmetric difference of the index sets.
struct signed_blade {
    int sign; // +1 or -1
    blade_mask blade;
};

signed_blade blade_product(blade_mask a, blade_mask b, int n);

std::string blade_str(blade_mask b);

} // namespace cliflat
