#pragma once

#include "fuzzydom/fuzzy_graph.hpp"

#include <stdexcept>

namespace fuzzydom {

enum class DominationKind { Dominating, Total };

/// Optimum of a minimum fuzzy-cardinality (total) dominating set search.
///
/// `found == false` only for Total on graphs with a vertex whose open
/// neighborhood is empty. Among optimal sets the witness is the
/// lexicographically smallest sorted index list.
struct DominationResult {
    DominationKind kind = DominationKind::Dominating;
    bool found = false;
    Rational optimum;
    VertexSet witness;
};

class TooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

/// Every vertex outside `s` has an effective neighbor in `s`.
bool is_dominating(const FuzzyGraph& g, const VertexSet& s);

/// Every vertex, members of `s` included, has an effective neighbor in `s`.
bool is_total_dominating(const FuzzyGraph& g, const VertexSet& s);

/// True iff no vertex has an empty open neighborhood.
bool has_total_dominating(const FuzzyGraph& g);

DominationResult min_dominating(const FuzzyGraph& g);
DominationResult min_total_dominating(const FuzzyGraph& g);
DominationResult min_domination(const FuzzyGraph& g, DominationKind kind);

inline constexpr std::size_t brute_force_limit = 20;

/// Exhaustive subset enumeration; shares nothing with the branch-and-bound
/// search and serves as its oracle. Throws TooLarge above 20 vertices.
DominationResult brute_force_min(const FuzzyGraph& g, DominationKind kind);

}  // namespace fuzzydom
