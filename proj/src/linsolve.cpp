#include "cliflat/linsolve.hpp"

namespace cliflat {

std::vector<std::size_t> rref(rat_matrix& m) {
    std::vector<std::size_t> pivots;
    if (m.empty()) return pivots;
    const std::size_t rows = m.size();
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < rows; ++col) {
        std::size_t best = rows;
        std::size_t best_size = 0;
        for (std::size_t r = row; r < rows; ++r) {
            if (m[r][col].is_zero()) continue;
            const std::size_t sz = m[r][col].bit_size();
            if (best == rows || sz < best_size) {
                best = r;
                best_size = sz;
            }
        }
        if (best == rows) continue;
        std::swap(m[row], m[best]);
        const rational inv = rational(1) / m[row][col];
        for (std::size_t c = col; c < cols; ++c) m[row][c] *= inv;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == row || m[r][col].is_zero()) continue;
            const rational f = m[r][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

rat_matrix nullspace(const rat_matrix& m, std::size_t cols) {
    rat_matrix a = m;
    for (auto& r : a)
        if (r.size() != cols) throw domain_error("nullspace: ragged matrix");
    const std::vector<std::size_t> pivots = rref(a);

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivots) is_pivot[c] = true;

    rat_matrix basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<rational> v(cols, rational(0));
        v[free_col] = rational(1);
        for (std::size_t pr = 0; pr < pivots.size(); ++pr)
            v[pivots[pr]] = -a[pr][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<rational>> solve(const rat_matrix& a, const std::vector<rational>& rhs) {
    if (a.size() != rhs.size()) throw domain_error("solve: shape mismatch");
    if (a.empty()) return std::vector<rational>{};
    const std::size_t cols = a[0].size();
    rat_matrix aug = a;
    for (std::size_t r = 0; r < aug.size(); ++r) {
        if (aug[r].size() != cols) throw domain_error("solve: ragged matrix");
        aug[r].push_back(rhs[r]);
    }
    const std::vector<std::size_t> pivots = rref(aug);
    // A pivot in the augmented column means inconsistency.
    if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
    std::vector<rational> x(cols, rational(0));
    for (std::size_t pr = 0; pr < pivots.size(); ++pr) x[pivots[pr]] = aug[pr][cols];
    return x;
}

} // namespace cliflat
