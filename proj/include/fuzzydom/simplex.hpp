#pragma once

#include "fuzzydom/rational.hpp"

#include <vector>

namespace fuzzydom {

/// minimize c.x  subject to  A x >= b,  x >= 0   (exact arithmetic)
struct LinearProgram {
    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    std::vector<Rational> c;

    std::size_t variable_count() const noexcept { return c.size(); }
    std::size_t constraint_count() const noexcept { return b.size(); }
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpSolution {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;
};

/// Two-phase tableau simplex with Bland's rule in both phases.
///
/// The returned point is a basic optimal solution and is a deterministic
/// function of the input (column order included). Throws
/// std::invalid_argument on ragged input.
LpSolution solve(const LinearProgram& lp);

}  // namespace fuzzydom
