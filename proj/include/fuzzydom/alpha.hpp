#pragma once

#include "fuzzydom/fuzzy_graph.hpp"
#include "fuzzydom/simplex.hpp"

#include <optional>

namespace fuzzydom {

/// Open: f(N(v)) >= alpha (total alpha-domination). Closed: f(N[v]) >= alpha.
enum class NeighborhoodMode { Open, Closed };

/// One nonnegative variable per vertex, one covering row per vertex over its
/// effective neighborhood, minimize the sum of all variables.
struct LpInstance {
    NeighborhoodMode mode = NeighborhoodMode::Open;
    Rational alpha;
    std::size_t variable_count = 0;
    /// rows[v] lists the variables with coefficient 1 in vertex v's constraint.
    std::vector<VertexSet> rows;

    LinearProgram to_linear_program() const;
};

/// A vertex -> value assignment and the domination level it is meant to meet.
struct AlphaFunction {
    std::vector<VertexId> vertices;
    std::vector<Rational> values;
    Rational alpha;
    NeighborhoodMode mode = NeighborhoodMode::Open;
    Rational weight;
};

/// Throws std::invalid_argument unless alpha > 0.
LpInstance build_lp(const FuzzyGraph& g, const Rational& alpha, NeighborhoodMode mode);

/// Exact optimum; status Infeasible when some row has no variables.
LpSolution simplex_solve(const LpInstance& lp);

/// Minimum-weight alpha-dominating function, if any exists.
std::optional<AlphaFunction> min_alpha_function(const FuzzyGraph& g, const Rational& alpha,
                                                NeighborhoodMode mode);

/// Total alpha-domination number; nullopt when infeasible.
std::optional<Rational> gamma_t_alpha(const FuzzyGraph& g, const Rational& alpha);

/// Closed-neighborhood alpha-domination number; always feasible.
Rational gamma_alpha(const FuzzyGraph& g, const Rational& alpha);

enum class FactorSide { Left, Right };

/// f(x) = min(2 alpha, fc(S cap fiber(x))) for every vertex x of the chosen
/// factor. Recorded with level 2 alpha, open mode.
AlphaFunction proof_function_total(const FuzzyGraph& product, const VertexSet& s,
                                   const Rational& alpha, FactorSide side = FactorSide::Left);

enum class CardinalityMode { Fuzzy, CrispCount };

/// f(x) = min(2 alpha, |S cap fiber(x)|) where |.| is the fuzzy cardinality
/// (default) or the plain member count. Recorded with level 2 alpha, closed mode.
AlphaFunction proof_function_closed(const FuzzyGraph& product, const VertexSet& s,
                                    const Rational& alpha,
                                    CardinalityMode cardinality = CardinalityMode::Fuzzy,
                                    FactorSide side = FactorSide::Left);

/// Vertices v where f(N(v)) (open) or f(N[v]) (closed) falls below f.alpha.
/// Empty means f is alpha-dominating. Throws std::invalid_argument if f does
/// not assign exactly g's vertices.
VertexSet verify_alpha_function(const FuzzyGraph& g, const AlphaFunction& f);

}  // namespace fuzzydom
