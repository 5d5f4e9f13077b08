#pragma once

#include "fuzzydom/fuzzy_graph.hpp"

#include <string>

namespace fuzzydom {

/// Direct (tensor) product of two fuzzy graphs.
///
/// Vertices are all pairs (g,h) with sigma = min(sigma_G(g), sigma_H(h)),
/// in left-major order and named "g<sep>h". {g1h1, g2h2} is an edge exactly
/// when {g1,g2} is an edge of G and {h1,h2} an edge of H; its mu is
/// min(mu_G, mu_H). Throws GraphError if two pairs render to the same id or
/// either factor fails validation.
FuzzyGraph direct_product(const FuzzyGraph& left, const FuzzyGraph& right,
                          const std::string& separator = "|");

/// Sum of sigma over the product's vertices. Throws GraphError without a product tag.
Rational product_order(const FuzzyGraph& product);

/// Product vertices whose left coordinate is `g` (the fiber gH).
VertexSet fiber_gH(const FuzzyGraph& product, std::string_view g);
/// Product vertices whose right coordinate is `h` (the fiber Gh).
VertexSet fiber_Gh(const FuzzyGraph& product, std::string_view h);

/// Every pair of product vertices differing in both coordinates is an
/// effective edge. Pairs sharing a coordinate are exempt.
bool is_complete_product(const FuzzyGraph& product);

/// Throws GraphError when `g` carries no product tag.
const ProductTag& require_tag(const FuzzyGraph& g);

}  // namespace fuzzydom
