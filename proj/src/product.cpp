#include "fuzzydom/product.hpp"

#include <algorithm>
#include <set>

namespace fuzzydom {

namespace {

void require_valid(const FuzzyGraph& g, const char* role) {
    const auto violations = validate(g);
    if (!violations.empty())
        throw GraphError(std::string(role) + " factor '" + g.name() +
                         "' is invalid: " + violations.front().message);
}

VertexSet fiber(const FuzzyGraph& product, std::string_view id, bool left_side) {
    const ProductTag& tag = require_tag(product);
    const auto& ids = left_side ? tag.left_vertices : tag.right_vertices;
    const auto it = std::find(ids.begin(), ids.end(), id);
    if (it == ids.end()) throw UnknownVertex(id);
    const auto wanted = static_cast<VertexIndex>(it - ids.begin());

    VertexSet out;
    for (VertexIndex v = 0; v < tag.factor_of.size(); ++v) {
        const auto& [l, r] = tag.factor_of[v];
        if ((left_side ? l : r) == wanted) out.push_back(v);
    }
    return out;
}

}  // namespace

const ProductTag& require_tag(const FuzzyGraph& g) {
    if (!g.product_tag()) throw GraphError("graph '" + g.name() + "' is not a product graph");
    return *g.product_tag();
}

FuzzyGraph direct_product(const FuzzyGraph& left, const FuzzyGraph& right,
                          const std::string& separator) {
    require_valid(left, "left");
    require_valid(right, "right");

    const std::size_t n_right = right.vertex_count();
    auto pair_index = [n_right](VertexIndex g, VertexIndex h) { return g * n_right + h; };

    ProductTag tag;
    tag.left_name = left.name();
    tag.right_name = right.name();
    tag.separator = separator;
    for (const auto& v : left.vertices()) tag.left_vertices.push_back(v.id);
    for (const auto& v : right.vertices()) tag.right_vertices.push_back(v.id);

    std::vector<Vertex> vertices;
    vertices.reserve(left.vertex_count() * n_right);
    std::set<std::string> ids;
    for (VertexIndex g = 0; g < left.vertex_count(); ++g) {
        for (VertexIndex h = 0; h < n_right; ++h) {
            std::string id = left.id(g) + separator + right.id(h);
            if (!ids.insert(id).second) throw GraphError("product vertex id collision on '" + id + "'");
            vertices.push_back({std::move(id), min(left.sigma(g), right.sigma(h))});
            tag.factor_of.emplace_back(g, h);
        }
    }

    // Each pair of factor edges {g1,g2} x {h1,h2} yields {g1h1,g2h2} and {g1h2,g2h1}.
    std::vector<Edge> edges;
    edges.reserve(2 * left.edge_count() * right.edge_count());
    for (const Edge& eg : left.edges()) {
        for (const Edge& eh : right.edges()) {
            const Weight& mu = min(eg.mu, eh.mu);
            edges.push_back({pair_index(eg.u, eh.u), pair_index(eg.v, eh.v), mu});
            edges.push_back({pair_index(eg.u, eh.v), pair_index(eg.v, eh.u), mu});
        }
    }
    for (const Edge& e : edges) {
        if (e.mu > min(vertices[e.u].sigma, vertices[e.v].sigma))
            throw GraphError("product edge violates mu <= min sigma");
    }

    std::string name = left.name() + " x " + right.name();
    return FuzzyGraph(std::move(name), std::move(vertices), std::move(edges), std::move(tag));
}

Rational product_order(const FuzzyGraph& product) {
    require_tag(product);
    return fuzzy_order(product);
}

VertexSet fiber_gH(const FuzzyGraph& product, std::string_view g) { return fiber(product, g, true); }

VertexSet fiber_Gh(const FuzzyGraph& product, std::string_view h) { return fiber(product, h, false); }

bool is_complete_product(const FuzzyGraph& product) {
    const ProductTag& tag = require_tag(product);
    const std::size_t n = product.vertex_count();
    for (VertexIndex a = 0; a < n; ++a) {
        for (VertexIndex b = a + 1; b < n; ++b) {
            const auto& [ga, ha] = tag.factor_of[a];
            const auto& [gb, hb] = tag.factor_of[b];
            if (ga == gb || ha == hb) continue;
            if (!product.is_effective(a, b)) return false;
        }
    }
    return true;
}

}  // namespace fuzzydom
