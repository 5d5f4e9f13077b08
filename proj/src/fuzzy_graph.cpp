#include "fuzzydom/fuzzy_graph.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace fuzzydom {

namespace {

std::pair<VertexIndex, VertexIndex> ordered(VertexIndex u, VertexIndex v) {
    return u < v ? std::pair{u, v} : std::pair{v, u};
}

std::string edge_label(const FuzzyGraph& g, const Edge& e) {
    auto name = [&](VertexIndex v) {
        return v < g.vertex_count() ? g.id(v) : "#" + std::to_string(v);
    };
    return "(" + name(e.u) + "," + name(e.v) + ")";
}

}  // namespace

FuzzyGraph::FuzzyGraph(std::string name, std::vector<Vertex> vertices, std::vector<Edge> edges,
                       std::optional<ProductTag> tag)
    : name_(std::move(name)),
      vertices_(std::move(vertices)),
      edges_(std::move(edges)),
      tag_(std::move(tag)),
      effective_(vertices_.size()) {
    for (VertexIndex v = 0; v < vertices_.size(); ++v) index_.emplace(vertices_[v].id, v);

    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.u == e.v || e.u >= vertices_.size() || e.v >= vertices_.size()) continue;
        const bool fresh = edge_lookup_.emplace(ordered(e.u, e.v), i).second;
        if (fresh && e.mu == min(vertices_[e.u].sigma, vertices_[e.v].sigma)) {
            effective_[e.u].push_back(e.v);
            effective_[e.v].push_back(e.u);
        }
    }
    for (auto& n : effective_) std::sort(n.begin(), n.end());
}

std::optional<VertexIndex> FuzzyGraph::find(std::string_view id) const {
    const auto it = index_.find(id);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

VertexIndex FuzzyGraph::index_of(std::string_view id) const {
    if (auto v = find(id)) return *v;
    throw UnknownVertex(id);
}

std::optional<Weight> FuzzyGraph::edge_membership(VertexIndex u, VertexIndex v) const {
    const auto it = edge_lookup_.find(ordered(u, v));
    if (it == edge_lookup_.end()) return std::nullopt;
    return edges_[it->second].mu;
}

bool FuzzyGraph::is_effective(VertexIndex u, VertexIndex v) const {
    if (u >= vertex_count()) throw UnknownVertex("#" + std::to_string(u));
    if (v >= vertex_count()) throw UnknownVertex("#" + std::to_string(v));
    const auto& n = effective_[u];
    return std::binary_search(n.begin(), n.end(), v);
}

VertexSet FuzzyGraph::closed_neighborhood(VertexIndex v) const {
    VertexSet result = open_neighborhood(v);
    result.insert(std::lower_bound(result.begin(), result.end(), v), v);
    return result;
}

bool is_valid_vertex_id(std::string_view id) {
    if (id.empty()) return false;
    return std::none_of(id.begin(), id.end(), [](unsigned char c) {
        return std::isspace(c) != 0 || c == ',' || c == '(' || c == ')';
    });
}

std::vector<Violation> validate(const FuzzyGraph& g) {
    using Kind = Violation::Kind;
    std::vector<Violation> out;

    std::set<std::string_view> seen;
    for (const auto& v : g.vertices()) {
        if (!is_valid_vertex_id(v.id))
            out.push_back({Kind::BadVertexId, "bad vertex id '" + v.id + "'"});
        if (!seen.insert(v.id).second)
            out.push_back({Kind::DuplicateVertex, "duplicate vertex '" + v.id + "'"});
    }

    std::set<std::pair<VertexIndex, VertexIndex>> pairs;
    for (const auto& e : g.edges()) {
        const std::string label = edge_label(g, e);
        if (e.u >= g.vertex_count() || e.v >= g.vertex_count()) {
            out.push_back({Kind::UnknownEndpoint, "unknown endpoint on " + label});
            continue;
        }
        if (e.u == e.v) {
            out.push_back({Kind::Loop, "loop on " + label});
            continue;
        }
        if (!pairs.insert(ordered(e.u, e.v)).second)
            out.push_back({Kind::DuplicateEdge, "duplicate edge " + label});
        if (e.mu > min(g.sigma(e.u), g.sigma(e.v)))
            out.push_back({Kind::MuExceedsSigma, "mu exceeds min sigma on " + label});
    }

    if (const auto& tag = g.product_tag()) {
        const std::size_t left = tag->left_vertices.size();
        const std::size_t right = tag->right_vertices.size();
        if (tag->factor_of.size() != g.vertex_count() || left * right != g.vertex_count()) {
            out.push_back({Kind::BadProductTag, "product tag size mismatch"});
        } else {
            std::set<std::pair<VertexIndex, VertexIndex>> images;
            for (const auto& [l, r] : tag->factor_of) {
                if (l >= left || r >= right || !images.insert({l, r}).second) {
                    out.push_back({Kind::BadProductTag, "product tag is not a bijection"});
                    break;
                }
            }
        }
    }
    return out;
}

bool is_effective(const FuzzyGraph& g, std::string_view u, std::string_view v) {
    return g.is_effective(g.index_of(u), g.index_of(v));
}

VertexSet open_neighborhood(const FuzzyGraph& g, std::string_view v) {
    return g.open_neighborhood(g.index_of(v));
}

VertexSet closed_neighborhood(const FuzzyGraph& g, std::string_view v) {
    return g.closed_neighborhood(g.index_of(v));
}

bool is_complete(const FuzzyGraph& g) {
    const std::size_t n = g.vertex_count();
    for (VertexIndex v = 0; v < n; ++v)
        if (g.open_neighborhood(v).size() != n - 1) return false;
    return true;
}

Rational fuzzy_order(const FuzzyGraph& g) {
    Rational total = 0;
    for (const auto& v : g.vertices()) total += v.sigma.value();
    return total;
}

Rational fuzzy_cardinality(const FuzzyGraph& g, const VertexSet& s) {
    Rational total = 0;
    for (VertexIndex v : s) {
        if (v >= g.vertex_count()) throw UnknownVertex("#" + std::to_string(v));
        total += g.sigma(v).value();
    }
    return total;
}

VertexSet vertex_set(const FuzzyGraph& g, const std::vector<std::string>& ids) {
    VertexSet s;
    s.reserve(ids.size());
    for (const auto& id : ids) s.push_back(g.index_of(id));
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

std::string format_vertex_set(const FuzzyGraph& g, const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i > 0) out += ", ";
        out += g.id(s[i]);
    }
    return out + "}";
}

}  // namespace fuzzydom
