#include "fuzzydom/simplex.hpp"

#include <optional>
#include <stdexcept>

namespace fuzzydom {

namespace {

// Columns: [0, n) structural, [n, n+m) surplus, [n+m, n+2m) artificial, then rhs.
class Tableau {
public:
    explicit Tableau(const LinearProgram& lp)
        : n_(lp.variable_count()), m_(lp.constraint_count()), width_(n_ + 2 * m_) {
        rows_.assign(m_, std::vector<Rational>(width_ + 1, 0));
        basis_.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            // a.x - s = b, flipped when b < 0 so the artificial starts feasible
            const int sign = sgn(lp.b[i]) < 0 ? -1 : 1;
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = sign * lp.a[i][j];
            rows_[i][n_ + i] = -sign;
            rows_[i][n_ + m_ + i] = 1;
            rows_[i][width_] = sign * lp.b[i];
            basis_[i] = n_ + m_ + i;
        }
        allowed_.assign(width_, true);
    }

    // Returns false when the objective is unbounded below.
    bool minimize(const std::vector<Rational>& cost) {
        while (true) {
            const auto entering = entering_column(cost);
            if (!entering) return true;
            const auto leaving = leaving_row(*entering);
            if (!leaving) return false;
            pivot(*leaving, *entering);
        }
    }

    Rational objective(const std::vector<Rational>& cost) const {
        Rational total = 0;
        for (std::size_t i = 0; i < rows_.size(); ++i) total += cost[basis_[i]] * rows_[i][width_];
        return total;
    }

    // Pivots zero-valued artificials out of the basis; drops rows that are
    // redundant (no structural or surplus entry to pivot on).
    void evict_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (!is_artificial(basis_[i])) {
                ++i;
                continue;
            }
            std::optional<std::size_t> column;
            for (std::size_t j = 0; j < n_ + m_ && !column; ++j)
                if (sgn(rows_[i][j]) != 0) column = j;
            if (column) {
                pivot(i, *column);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
        for (std::size_t j = n_ + m_; j < width_; ++j) allowed_[j] = false;
    }

    std::vector<Rational> structural_values() const {
        std::vector<Rational> x(n_, 0);
        for (std::size_t i = 0; i < rows_.size(); ++i)
            if (basis_[i] < n_) x[basis_[i]] = rows_[i][width_];
        return x;
    }

    std::size_t width() const noexcept { return width_; }
    std::size_t structural() const noexcept { return n_; }
    std::size_t first_artificial() const noexcept { return n_ + m_; }

private:
    bool is_artificial(std::size_t column) const { return column >= n_ + m_; }

    // Bland: lowest-index column with negative reduced cost.
    std::optional<std::size_t> entering_column(const std::vector<Rational>& cost) const {
        for (std::size_t j = 0; j < width_; ++j) {
            if (!allowed_[j]) continue;
            Rational reduced = cost[j];
            for (std::size_t i = 0; i < rows_.size(); ++i) reduced -= cost[basis_[i]] * rows_[i][j];
            if (sgn(reduced) < 0) return j;
        }
        return std::nullopt;
    }

    // Minimum ratio; ties go to the lowest-index basic variable.
    std::optional<std::size_t> leaving_row(std::size_t column) const {
        std::optional<std::size_t> best;
        Rational best_ratio;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (sgn(rows_[i][column]) <= 0) continue;
            Rational ratio = rows_[i][width_] / rows_[i][column];
            if (!best || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[*best])) {
                best = i;
                best_ratio = std::move(ratio);
            }
        }
        return best;
    }

    void pivot(std::size_t row, std::size_t column) {
        const Rational p = rows_[row][column];
        for (auto& entry : rows_[row]) entry /= p;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == row || sgn(rows_[i][column]) == 0) continue;
            const Rational factor = rows_[i][column];
            for (std::size_t j = 0; j <= width_; ++j) rows_[i][j] -= factor * rows_[row][j];
        }
        basis_[row] = column;
    }

    std::size_t n_;
    std::size_t m_;
    std::size_t width_;
    std::vector<std::vector<Rational>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<bool> allowed_;
};

}  // namespace

LpSolution solve(const LinearProgram& lp) {
    if (lp.a.size() != lp.b.size()) throw std::invalid_argument("row count mismatch");
    for (const auto& row : lp.a)
        if (row.size() != lp.variable_count()) throw std::invalid_argument("ragged constraint row");

    Tableau tableau(lp);

    std::vector<Rational> phase_one(tableau.width(), 0);
    for (std::size_t j = tableau.first_artificial(); j < tableau.width(); ++j) phase_one[j] = 1;
    tableau.minimize(phase_one);

    LpSolution result;
    if (sgn(tableau.objective(phase_one)) != 0) return result;

    tableau.evict_artificials();
    std::vector<Rational> phase_two(tableau.width(), 0);
    for (std::size_t j = 0; j < tableau.structural(); ++j) phase_two[j] = lp.c[j];
    if (!tableau.minimize(phase_two)) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.value = tableau.objective(phase_two);
    result.x = tableau.structural_values();
    return result;
}

}  // namespace fuzzydom
