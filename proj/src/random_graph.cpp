#include "fuzzydom/random_graph.hpp"

#include <limits>
#include <stdexcept>

namespace fuzzydom {

std::uint64_t SeededRng::below(std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = engine_();
    while (x >= limit) x = engine_();
    return x % bound;
}

bool SeededRng::chance(const Weight& p) {
    const Rational& q = p.value();
    if (!q.get_den().fits_ulong_p()) throw std::invalid_argument("probability denominator too large");
    return below(q.get_den().get_ui()) < q.get_num().get_ui();
}

std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

void check_params(const GenParams& params) {
    if (params.vertex_count == 0) throw std::invalid_argument("vertex count must be at least 1");
    if (params.sigma_grid < 1 || params.sigma_grid > 100)
        throw std::invalid_argument("sigma grid must be in [1, 100]");
    if (!is_valid_vertex_id(params.id_prefix + "1"))
        throw std::invalid_argument("invalid vertex id prefix '" + params.id_prefix + "'");
}

FuzzyGraph gen_random(const GenParams& params) {
    check_params(params);
    SeededRng rng(params.seed);
    const unsigned d = params.sigma_grid;

    std::vector<Vertex> vertices;
    vertices.reserve(params.vertex_count);
    for (std::size_t i = 0; i < params.vertex_count; ++i) {
        const auto k = rng.below(d) + 1;
        vertices.push_back({params.id_prefix + std::to_string(i + 1),
                            Weight::from_rational(Rational(static_cast<unsigned long>(k), d))});
    }

    const unsigned ratio_grid = d < 2 ? 2 : d;
    std::vector<Edge> edges;
    for (VertexIndex u = 0; u < vertices.size(); ++u) {
        for (VertexIndex v = u + 1; v < vertices.size(); ++v) {
            if (!rng.chance(params.edge_probability)) continue;
            const Weight& cap = min(vertices[u].sigma, vertices[v].sigma);
            if (rng.chance(params.effective_probability)) {
                edges.push_back({u, v, cap});
            } else {
                const auto j = rng.below(ratio_grid - 1) + 1;
                Rational mu = cap.value() * Rational(static_cast<unsigned long>(j), ratio_grid);
                mu.canonicalize();
                edges.push_back({u, v, Weight::from_rational(mu)});
            }
        }
    }
    return FuzzyGraph(params.name, std::move(vertices), std::move(edges));
}

}  // namespace fuzzydom
