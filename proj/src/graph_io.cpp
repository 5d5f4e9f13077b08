#include "fuzzydom/graph_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace fuzzydom {

namespace {

using ordered_json = nlohmann::ordered_json;

const ordered_json& field(const ordered_json& object, const char* key, const std::string& where) {
    if (!object.is_object() || !object.contains(key))
        throw ParseError(where + ": missing field '" + key + "'");
    return object.at(key);
}

std::string string_field(const ordered_json& object, const char* key, const std::string& where) {
    const auto& value = field(object, key, where);
    if (!value.is_string()) throw ParseError(where + "." + key + ": expected a string");
    return value.get<std::string>();
}

Weight weight_field(const ordered_json& object, const char* key, const std::string& where) {
    const std::string text = string_field(object, key, where);
    try {
        return parse_weight(text);
    } catch (const WeightError& e) {
        throw ParseError(where + "." + key + ": " + e.what());
    }
}

const ordered_json& array_field(const ordered_json& object, const char* key, const std::string& where) {
    const auto& value = field(object, key, where);
    if (!value.is_array()) throw ParseError(where + "." + key + ": expected an array");
    return value;
}

ProductTag rebuild_tag(const ordered_json& block, const std::vector<Vertex>& vertices) {
    ProductTag tag;
    tag.left_name = string_field(block, "left", "product_of");
    tag.right_name = string_field(block, "right", "product_of");
    tag.separator = string_field(block, "separator", "product_of");
    if (tag.separator.empty()) throw ParseError("product_of.separator: must be nonempty");

    std::map<std::string, VertexIndex> left;
    std::map<std::string, VertexIndex> right;
    auto intern = [](std::map<std::string, VertexIndex>& seen, std::vector<VertexId>& order,
                     const std::string& id) {
        auto [it, fresh] = seen.emplace(id, order.size());
        if (fresh) order.push_back(id);
        return it->second;
    };
    for (const auto& v : vertices) {
        const auto cut = v.id.find(tag.separator);
        if (cut == std::string::npos || v.id.find(tag.separator, cut + 1) != std::string::npos)
            throw ParseError("product vertex '" + v.id + "' does not split on '" + tag.separator + "'");
        const auto l = intern(left, tag.left_vertices, v.id.substr(0, cut));
        const auto r = intern(right, tag.right_vertices, v.id.substr(cut + tag.separator.size()));
        tag.factor_of.emplace_back(l, r);
    }
    return tag;
}

std::vector<Edge> canonical_edges(const FuzzyGraph& g) {
    std::vector<Edge> edges = g.edges();
    for (auto& e : edges)
        if (e.v < e.u) std::swap(e.u, e.v);
    std::stable_sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        return std::pair{a.u, a.v} < std::pair{b.u, b.v};
    });
    return edges;
}

std::string quoted(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

std::string describe(const std::vector<Violation>& violations) {
    std::string out = "graph is invalid:";
    for (const auto& v : violations) out += "\n  " + v.message;
    return out;
}

}  // namespace

ValidationError::ValidationError(std::vector<Violation> violations)
    : std::runtime_error(describe(violations)), violations_(std::move(violations)) {}

FuzzyGraph parse_graph(std::string_view text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!doc.is_object()) throw ParseError("document: expected an object");

    const std::string name = string_field(doc, "name", "document");

    std::vector<Vertex> vertices;
    std::map<std::string, VertexIndex> index;
    const auto& vertex_list = array_field(doc, "vertices", "document");
    for (std::size_t i = 0; i < vertex_list.size(); ++i) {
        const std::string where = "vertices[" + std::to_string(i) + "]";
        std::string id = string_field(vertex_list[i], "id", where);
        if (!index.emplace(id, vertices.size()).second)
            throw ParseError(where + ": duplicate vertex id '" + id + "'");
        vertices.push_back({std::move(id), weight_field(vertex_list[i], "sigma", where)});
    }

    std::vector<Edge> edges;
    const auto& edge_list = array_field(doc, "edges", "document");
    for (std::size_t i = 0; i < edge_list.size(); ++i) {
        const std::string where = "edges[" + std::to_string(i) + "]";
        auto endpoint = [&](const char* key) {
            const std::string id = string_field(edge_list[i], key, where);
            const auto it = index.find(id);
            if (it == index.end()) throw ParseError(where + "." + key + ": unknown vertex '" + id + "'");
            return it->second;
        };
        const VertexIndex u = endpoint("u");
        const VertexIndex v = endpoint("v");
        edges.push_back({u, v, weight_field(edge_list[i], "mu", where)});
    }

    std::optional<ProductTag> tag;
    if (doc.contains("product_of")) tag = rebuild_tag(doc["product_of"], vertices);

    return FuzzyGraph(name, std::move(vertices), std::move(edges), std::move(tag));
}

std::string serialize_graph(const FuzzyGraph& g) {
    ordered_json doc;
    doc["name"] = g.name();
    doc["vertices"] = ordered_json::array();
    for (const auto& v : g.vertices())
        doc["vertices"].push_back({{"id", v.id}, {"sigma", v.sigma.to_string()}});
    doc["edges"] = ordered_json::array();
    for (const auto& e : canonical_edges(g))
        doc["edges"].push_back({{"u", g.id(e.u)}, {"v", g.id(e.v)}, {"mu", e.mu.to_string()}});
    if (const auto& tag = g.product_tag()) {
        doc["product_of"] = {
            {"left", tag->left_name}, {"right", tag->right_name}, {"separator", tag->separator}};
    }
    return doc.dump(2) + "\n";
}

FuzzyGraph load(const std::filesystem::path& path) {
    FuzzyGraph g = parse_graph(read_text_file(path));
    auto violations = validate(g);
    if (!violations.empty()) throw ValidationError(std::move(violations));
    return g;
}

void save(const FuzzyGraph& g, const std::filesystem::path& path) {
    write_text_file(path, serialize_graph(g));
}

std::string to_dot(const FuzzyGraph& g) {
    std::ostringstream out;
    out << "graph " << quoted(g.name()) << " {\n";
    for (const auto& v : g.vertices())
        out << "  " << quoted(v.id) << " [label=" << quoted(v.id + " (" + v.sigma.to_string() + ")")
            << "];\n";
    for (const auto& e : canonical_edges(g)) {
        const bool effective = e.mu == min(g.sigma(e.u), g.sigma(e.v));
        out << "  " << quoted(g.id(e.u)) << " -- " << quoted(g.id(e.v))
            << " [label=" << quoted(e.mu.to_string()) << ", style=" << (effective ? "solid" : "dashed")
            << "];\n";
    }
    out << "}\n";
    return out.str();
}

void export_dot(const FuzzyGraph& g, const std::filesystem::path& path) {
    write_text_file(path, to_dot(g));
}

std::string read_text_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write '" + path.string() + "'");
    out << text;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
}

}  // namespace fuzzydom
