#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

#include "cliflat/blade.hpp"
#include "cliflat/rational.hpp"

namespace cliflat {

// Mesh and weight data: dimension n, mesh width h > 0, and the degree-1
// weight polynomial w(t) = mu*t + b with mu != 0. By construction
// (forward or backward difference of w)(x_k) = delta_{jk} * mu.
struct lattice_params {
    int n = 1;
    rational h = rational(1);
    rational mu = rational(1);
    rational b = rational(0);

    lattice_params() = default;
    lattice_params(int n_, rational h_, rational mu_, rational b_)
        : n(n_), h(std::move(h_)), mu(std::move(mu_)), b(std::move(b_)) {
        validate();
    }

    void validate() const {
        if (n < 1 || n > max_dimension)
            throw domain_error("lattice_params: dimension must be in 1.." +
                               std::to_string(max_dimension));
        if (!(h > rational(0))) throw domain_error("lattice_params: h must be positive");
        if (mu.is_zero()) throw domain_error("lattice_params: mu must be nonzero");
    }

    // mu^{-1} w(t + offset) = t + offset + b/mu, as the (constant, linear)
    // coefficients of a degree-1 polynomial in t.
    rational weight_constant(const rational& offset) const { return offset + b / mu; }

    friend bool operator==(const lattice_params& a, const lattice_params& b) {
        return a.n == b.n && a.h == b.h && a.mu == b.mu && a.b == b.b;
    }
    friend bool operator!=(const lattice_params& a, const lattice_params& b) { return !(a == b); }
};

// Exponent multi-index (alpha_1, ..., alpha_n); compared lexicographically.
using multi_index = std::vector<std::uint32_t>;

inline int total_degree(const multi_index& a) {
    return static_cast<int>(std::accumulate(a.begin(), a.end(), std::uint64_t{0}));
}

} // namespace cliflat
