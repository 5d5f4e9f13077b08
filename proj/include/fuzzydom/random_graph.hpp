#pragma once

#include "fuzzydom/fuzzy_graph.hpp"

#include <cstdint>
#include <random>
#include <string>

namespace fuzzydom {

struct GenParams {
    std::size_t vertex_count = 4;
    Weight edge_probability = Weight::from_rational(Rational(1, 2));
    /// Probability that an edge gets mu = min(sigma(u), sigma(v)).
    Weight effective_probability = Weight::from_rational(Rational(1, 2));
    /// sigma is drawn uniformly from {1/d, ..., d/d}.
    unsigned sigma_grid = 10;
    std::uint64_t seed = 0;
    std::string id_prefix = "v";
    std::string name = "G";
};

/// Throws std::invalid_argument for vertex_count == 0, a grid outside
/// [1, 100] or an invalid id prefix.
void check_params(const GenParams& params);

/// Seeded random fuzzy graph; identical params give identical graphs.
///
/// Non-effective edges get mu = r * min(sigma(u), sigma(v)) with r drawn from
/// {1/d, ..., (d-1)/d} (d = max(grid, 2)), so mu is strictly below the min.
FuzzyGraph gen_random(const GenParams& params);

/// Deterministic 64-bit generator with portable bounded draws
/// (std::uniform_int_distribution is implementation-defined).
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [0, bound); bound > 0.
    std::uint64_t below(std::uint64_t bound);
    /// True with probability p.
    bool chance(const Weight& p);

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; used to derive per-instance seeds.
std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index);

}  // namespace fuzzydom
