#pragma once

#include "fuzzydom/fuzzy_graph.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fuzzydom {

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const noexcept { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Reads a graph document without validating it (structure errors still throw
/// ParseError: malformed JSON, missing fields, bad weights, duplicate vertex
/// ids, edges naming unknown vertices).
///
///   { "name": "G",
///     "vertices": [ {"id": "g1", "sigma": "0.15"}, ... ],
///     "edges":    [ {"u": "g1", "v": "g2", "mu": "0.15"}, ... ],
///     "product_of": {"left": "G", "right": "H", "separator": "|"} }   // optional
FuzzyGraph parse_graph(std::string_view text);

/// Canonical document: vertices in input order, edges sorted by endpoint
/// index with the lower-index endpoint first, weights in minimal form.
std::string serialize_graph(const FuzzyGraph& g);

/// parse_graph + validate; throws ValidationError listing every violation.
FuzzyGraph load(const std::filesystem::path& path);
void save(const FuzzyGraph& g, const std::filesystem::path& path);

/// Undirected DOT. Nodes labelled "id (sigma)", edges labelled with mu,
/// solid when effective and dashed otherwise.
std::string to_dot(const FuzzyGraph& g);
void export_dot(const FuzzyGraph& g, const std::filesystem::path& path);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace fuzzydom
