#include "fuzzydom/alpha.hpp"

#include "fuzzydom/product.hpp"

#include <stdexcept>

namespace fuzzydom {

namespace {

VertexSet neighborhood(const FuzzyGraph& g, VertexIndex v, NeighborhoodMode mode) {
    return mode == NeighborhoodMode::Open ? g.open_neighborhood(v) : g.closed_neighborhood(v);
}

Rational sum(const std::vector<Rational>& values) {
    Rational total = 0;
    for (const auto& x : values) total += x;
    return total;
}

template <class Cardinality>
AlphaFunction fiber_function(const FuzzyGraph& product, const VertexSet& s, const Rational& alpha,
                             FactorSide side, Cardinality&& cardinality) {
    const ProductTag& tag = require_tag(product);
    const bool left = side == FactorSide::Left;

    AlphaFunction f;
    f.vertices = left ? tag.left_vertices : tag.right_vertices;
    f.alpha = 2 * alpha;

    std::vector<VertexSet> members(f.vertices.size());
    for (VertexIndex v : s) {
        if (v >= product.vertex_count()) throw UnknownVertex("#" + std::to_string(v));
        const auto& [l, r] = tag.factor_of[v];
        members[left ? l : r].push_back(v);
    }
    f.values.reserve(members.size());
    for (const auto& fiber_members : members) {
        Rational size = cardinality(fiber_members);
        f.values.push_back(size < f.alpha ? size : f.alpha);
    }
    f.weight = sum(f.values);
    return f;
}

}  // namespace

LinearProgram LpInstance::to_linear_program() const {
    LinearProgram lp;
    lp.c.assign(variable_count, 1);
    for (const auto& row : rows) {
        std::vector<Rational> coefficients(variable_count, 0);
        for (VertexIndex u : row) coefficients.at(u) = 1;
        lp.a.push_back(std::move(coefficients));
        lp.b.push_back(alpha);
    }
    return lp;
}

LpInstance build_lp(const FuzzyGraph& g, const Rational& alpha, NeighborhoodMode mode) {
    if (sgn(alpha) <= 0) throw std::invalid_argument("alpha must be positive");
    LpInstance lp;
    lp.mode = mode;
    lp.alpha = alpha;
    lp.variable_count = g.vertex_count();
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) lp.rows.push_back(neighborhood(g, v, mode));
    return lp;
}

LpSolution simplex_solve(const LpInstance& lp) { return solve(lp.to_linear_program()); }

std::optional<AlphaFunction> min_alpha_function(const FuzzyGraph& g, const Rational& alpha,
                                                NeighborhoodMode mode) {
    const LpSolution solution = simplex_solve(build_lp(g, alpha, mode));
    if (solution.status != LpStatus::Optimal) return std::nullopt;

    AlphaFunction f;
    for (const auto& v : g.vertices()) f.vertices.push_back(v.id);
    f.values = solution.x;
    f.alpha = alpha;
    f.mode = mode;
    f.weight = solution.value;
    return f;
}

std::optional<Rational> gamma_t_alpha(const FuzzyGraph& g, const Rational& alpha) {
    if (auto f = min_alpha_function(g, alpha, NeighborhoodMode::Open)) return f->weight;
    return std::nullopt;
}

Rational gamma_alpha(const FuzzyGraph& g, const Rational& alpha) {
    auto f = min_alpha_function(g, alpha, NeighborhoodMode::Closed);
    if (!f) throw std::logic_error("closed alpha-domination LP reported infeasible");
    return f->weight;
}

AlphaFunction proof_function_total(const FuzzyGraph& product, const VertexSet& s,
                                   const Rational& alpha, FactorSide side) {
    AlphaFunction f = fiber_function(product, s, alpha, side, [&](const VertexSet& members) {
        return fuzzy_cardinality(product, members);
    });
    f.mode = NeighborhoodMode::Open;
    return f;
}

AlphaFunction proof_function_closed(const FuzzyGraph& product, const VertexSet& s,
                                    const Rational& alpha, CardinalityMode cardinality,
                                    FactorSide side) {
    AlphaFunction f = fiber_function(product, s, alpha, side, [&](const VertexSet& members) {
        return cardinality == CardinalityMode::Fuzzy ? fuzzy_cardinality(product, members)
                                                     : Rational(members.size());
    });
    f.mode = NeighborhoodMode::Closed;
    return f;
}

VertexSet verify_alpha_function(const FuzzyGraph& g, const AlphaFunction& f) {
    if (f.values.size() != g.vertex_count() || f.vertices.size() != g.vertex_count())
        throw std::invalid_argument("alpha function does not cover the graph's vertices");
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (f.vertices[v] != g.id(v))
            throw std::invalid_argument("alpha function vertex order differs from graph");

    VertexSet violated;
    for (VertexIndex v = 0; v < g.vertex_count(); ++v) {
        Rational total = 0;
        for (VertexIndex u : neighborhood(g, v, f.mode)) total += f.values[u];
        if (total < f.alpha) violated.push_back(v);
    }
    return violated;
}

}  // namespace fuzzydom
