#pragma once

// Test-only LP oracle: minimizes c.x over {x >= 0, A x >= b} by enumerating
// every choice of n tight constraints, solving the square system exactly and
// keeping the cheapest feasible vertex. Shares no code with the simplex.

#include "fuzzydom/rational.hpp"

#include <algorithm>
#include <optional>
#include <vector>

namespace fuzzydom::oracle {

struct VertexOptimum {
    Rational value;
    std::vector<Rational> x;
};

namespace detail {

// Gaussian elimination; nullopt when singular.
inline std::optional<std::vector<Rational>> solve_square(std::vector<std::vector<Rational>> m,
                                                         std::vector<Rational> rhs) {
    const std::size_t n = rhs.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && sgn(m[pivot][col]) == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(m[pivot], m[col]);
        std::swap(rhs[pivot], rhs[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || sgn(m[r][col]) == 0) continue;
            const Rational f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
            rhs[r] -= f * rhs[col];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = rhs[i] / m[i][i];
    return x;
}

}  // namespace detail

inline std::optional<VertexOptimum> minimize_by_vertex_enumeration(
    const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
    const std::vector<Rational>& c) {
    const std::size_t n = c.size();
    const std::size_t m = b.size();
    const std::size_t total = n + m;

    // constraint k < n: x_k >= 0; otherwise row k - n of A
    auto row_of = [&](std::size_t k) {
        std::vector<Rational> row(n, 0);
        if (k < n) row[k] = 1;
        else row = a[k - n];
        return row;
    };
    auto rhs_of = [&](std::size_t k) { return k < n ? Rational(0) : b[k - n]; };

    std::optional<VertexOptimum> best;
    std::vector<std::size_t> pick(n);
    // iterate all n-subsets of {0..total-1}
    std::vector<bool> mask(total, false);
    std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(std::min(n, total)), true);
    if (n > total) return std::nullopt;
    do {
        std::vector<std::vector<Rational>> sys;
        std::vector<Rational> rhs;
        for (std::size_t k = 0; k < total; ++k) {
            if (!mask[k]) continue;
            sys.push_back(row_of(k));
            rhs.push_back(rhs_of(k));
        }
        auto x = detail::solve_square(sys, rhs);
        if (!x) continue;
        bool feasible = true;
        for (std::size_t j = 0; j < n && feasible; ++j) feasible = sgn((*x)[j]) >= 0;
        for (std::size_t i = 0; i < m && feasible; ++i) {
            Rational lhs = 0;
            for (std::size_t j = 0; j < n; ++j) lhs += a[i][j] * (*x)[j];
            feasible = lhs >= b[i];
        }
        if (!feasible) continue;
        Rational value = 0;
        for (std::size_t j = 0; j < n; ++j) value += c[j] * (*x)[j];
        if (!best || value < best->value) best = VertexOptimum{value, *x};
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return best;
}

}  // namespace fuzzydom::oracle
