#pragma once

#include "fuzzydom/rational.hpp"
#include "fuzzydom/weight.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fuzzydom {

using VertexId = std::string;
using VertexIndex = std::size_t;

/// Vertex indices in ascending (input) order.
using VertexSet = std::vector<VertexIndex>;

class GraphError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class UnknownVertex : public GraphError {
public:
    explicit UnknownVertex(std::string_view id)
        : GraphError("unknown vertex '" + std::string(id) + "'") {}
};

struct Vertex {
    VertexId id;
    Weight sigma;
};

struct Edge {
    VertexIndex u = 0;
    VertexIndex v = 0;
    Weight mu;
};

/// Links each product vertex back to its (left, right) factor pair.
struct ProductTag {
    std::string left_name;
    std::string right_name;
    std::string separator = "|";
    std::vector<VertexId> left_vertices;
    std::vector<VertexId> right_vertices;
    /// Indexed by product vertex; indices into left_vertices / right_vertices.
    std::vector<std::pair<VertexIndex, VertexIndex>> factor_of;
};

/// Undirected simple fuzzy graph (sigma on vertices, mu on edges).
///
/// The constructor accepts any input so that `validate` can report what is
/// wrong with it; neighborhood queries ignore edges with out-of-range or
/// looping endpoints. Immutable once built.
class FuzzyGraph {
public:
    FuzzyGraph() = default;
    FuzzyGraph(std::string name, std::vector<Vertex> vertices, std::vector<Edge> edges,
               std::optional<ProductTag> tag = std::nullopt);

    const std::string& name() const noexcept { return name_; }
    const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    const std::optional<ProductTag>& product_tag() const noexcept { return tag_; }

    std::size_t vertex_count() const noexcept { return vertices_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const VertexId& id(VertexIndex v) const { return vertices_.at(v).id; }
    const Weight& sigma(VertexIndex v) const { return vertices_.at(v).sigma; }

    std::optional<VertexIndex> find(std::string_view id) const;
    /// Throws UnknownVertex.
    VertexIndex index_of(std::string_view id) const;

    /// mu of the edge {u,v}, if present.
    std::optional<Weight> edge_membership(VertexIndex u, VertexIndex v) const;

    /// True iff {u,v} is an edge with mu = min(sigma(u), sigma(v)).
    bool is_effective(VertexIndex u, VertexIndex v) const;

    /// Effective neighbors of v, ascending.
    const VertexSet& open_neighborhood(VertexIndex v) const { return effective_.at(v); }
    VertexSet closed_neighborhood(VertexIndex v) const;

private:
    std::string name_;
    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    std::optional<ProductTag> tag_;

    std::map<VertexId, VertexIndex, std::less<>> index_;
    std::map<std::pair<VertexIndex, VertexIndex>, std::size_t> edge_lookup_;
    std::vector<VertexSet> effective_;
};

struct Violation {
    enum class Kind {
        BadVertexId,
        DuplicateVertex,
        UnknownEndpoint,
        Loop,
        DuplicateEdge,
        MuExceedsSigma,
        BadProductTag,
    };
    Kind kind;
    std::string message;
};

/// Every broken invariant (simple, undirected, mu <= min sigma, well-formed ids).
std::vector<Violation> validate(const FuzzyGraph& g);

/// Token rule for vertex ids: nonempty, no whitespace, comma or parenthesis.
bool is_valid_vertex_id(std::string_view id);

bool is_effective(const FuzzyGraph& g, std::string_view u, std::string_view v);
VertexSet open_neighborhood(const FuzzyGraph& g, std::string_view v);
VertexSet closed_neighborhood(const FuzzyGraph& g, std::string_view v);

/// Every unordered pair of distinct vertices is an effective edge.
bool is_complete(const FuzzyGraph& g);

/// Sum of sigma over all vertices.
Rational fuzzy_order(const FuzzyGraph& g);

/// Sum of sigma over `s`. Throws UnknownVertex for an out-of-range index.
Rational fuzzy_cardinality(const FuzzyGraph& g, const VertexSet& s);

/// Indices for a list of ids, sorted ascending. Throws UnknownVertex.
VertexSet vertex_set(const FuzzyGraph& g, const std::vector<std::string>& ids);

/// "{a, b, c}" in index order.
std::string format_vertex_set(const FuzzyGraph& g, const VertexSet& s);

}  // namespace fuzzydom
