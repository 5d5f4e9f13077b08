#include "fuzzydom/domination.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace fuzzydom {

namespace {

std::vector<bool> membership(const FuzzyGraph& g, const VertexSet& s) {
    std::vector<bool> in(g.vertex_count(), false);
    for (VertexIndex v : s) {
        if (v >= g.vertex_count()) throw UnknownVertex("#" + std::to_string(v));
        in[v] = true;
    }
    return in;
}

bool has_neighbor_in(const FuzzyGraph& g, VertexIndex v, const std::vector<bool>& in) {
    const auto& n = g.open_neighborhood(v);
    return std::any_of(n.begin(), n.end(), [&](VertexIndex u) { return in[u]; });
}

bool better(const Rational& weight, const VertexSet& set, const DominationResult& best) {
    if (!best.found) return true;
    const int c = cmp(weight, best.optimum);
    return c < 0 || (c == 0 && set < best.witness);
}

// Exact weighted covering search.
//
// Element v must be covered by some chosen u in cover(v): N[v] for ordinary
// domination, N(v) for total domination (effective adjacency is symmetric, so
// the same lists say what u covers). Branching is on the lowest-indexed
// uncovered vertex; branch i takes option i and excludes options 0..i-1, so
// the branches partition the search space. Pruning is strict (bound > best)
// so every optimal set survives and the lexicographic tie-break is exact.
//
// Lower bound: each uncovered v is charged min over its undecided coverers u
// of sigma(u) / (number of uncovered vertices u would cover). Any completion
// pays at least this much, since a chosen u's sigma is split across the
// vertices it covers.
class CoverSearch {
public:
    CoverSearch(const FuzzyGraph& g, DominationKind kind) : g_(g), n_(g.vertex_count()) {
        covers_.resize(n_);
        for (VertexIndex v = 0; v < n_; ++v)
            covers_[v] = kind == DominationKind::Total ? g.open_neighborhood(v)
                                                       : g.closed_neighborhood(v);
        state_.assign(n_, State::Undecided);
        covered_by_.assign(n_, 0);
        best_.kind = kind;
    }

    void force(VertexIndex v) { choose(v); }

    DominationResult run() {
        std::vector<Frame> stack;
        bool descend = true;
        while (true) {
            if (descend) {
                descend = false;
                if (auto target = expand()) {
                    stack.push_back({*target, undecided_options(*target)});
                }
            }
            if (stack.empty()) break;

            Frame& top = stack.back();
            if (top.next > 0) {
                const VertexIndex previous = top.options[top.next - 1];
                unchoose(previous);
                state_[previous] = State::Excluded;
            }
            if (top.next < top.options.size()) {
                choose(top.options[top.next++]);
                descend = true;
            } else {
                for (VertexIndex u : top.options) state_[u] = State::Undecided;
                stack.pop_back();
            }
        }
        return best_;
    }

private:
    enum class State : std::uint8_t { Undecided, Chosen, Excluded };

    struct Frame {
        VertexIndex target;
        VertexSet options;
        std::size_t next = 0;
    };

    void choose(VertexIndex u) {
        state_[u] = State::Chosen;
        weight_ += g_.sigma(u).value();
        for (VertexIndex v : covers_[u]) ++covered_by_[v];
    }

    void unchoose(VertexIndex u) {
        state_[u] = State::Undecided;
        weight_ -= g_.sigma(u).value();
        for (VertexIndex v : covers_[u]) --covered_by_[v];
    }

    VertexSet undecided_options(VertexIndex target) const {
        VertexSet out;
        for (VertexIndex u : covers_[target])
            if (state_[u] == State::Undecided) out.push_back(u);
        return out;
    }

    // Evaluates the current node. Returns the vertex to branch on, or nothing
    // when the node is a leaf or is pruned.
    std::optional<VertexIndex> expand() {
        std::optional<VertexIndex> target;
        std::vector<std::size_t> gain(n_, 0);
        for (VertexIndex v = 0; v < n_; ++v) {
            if (covered_by_[v] > 0) continue;
            if (!target) target = v;
            for (VertexIndex u : covers_[v])
                if (state_[u] == State::Undecided) ++gain[u];
        }
        if (!target) {
            record_leaf();
            return std::nullopt;
        }

        Rational bound = 0;
        for (VertexIndex v = *target; v < n_; ++v) {
            if (covered_by_[v] > 0) continue;
            std::optional<Rational> share;
            for (VertexIndex u : covers_[v]) {
                if (state_[u] != State::Undecided) continue;
                Rational s = g_.sigma(u).value() / gain[u];
                if (!share || s < *share) share = std::move(s);
            }
            if (!share) return std::nullopt;
            bound += *share;
        }
        if (best_.found && weight_ + bound > best_.optimum) return std::nullopt;
        return target;
    }

    // Adds undecided zero-weight vertices below the largest chosen index:
    // that is the lexicographically smallest optimal-weight superset.
    void record_leaf() {
        VertexSet set;
        for (VertexIndex v = 0; v < n_; ++v)
            if (state_[v] == State::Chosen) set.push_back(v);
        if (!set.empty()) {
            const VertexIndex top = set.back();
            for (VertexIndex v = 0; v < top; ++v)
                if (state_[v] == State::Undecided && sgn(g_.sigma(v).value()) == 0)
                    set.push_back(v);
            std::sort(set.begin(), set.end());
        }
        if (better(weight_, set, best_)) {
            best_.found = true;
            best_.optimum = weight_;
            best_.witness = std::move(set);
        }
    }

    const FuzzyGraph& g_;
    std::size_t n_;
    std::vector<VertexSet> covers_;
    std::vector<State> state_;
    std::vector<std::size_t> covered_by_;
    Rational weight_ = 0;
    DominationResult best_;
};

}  // namespace

bool is_dominating(const FuzzyGraph& g, const VertexSet& s) {
    const auto in = membership(g, s);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (!in[v] && !has_neighbor_in(g, v, in)) return false;
    return true;
}

bool is_total_dominating(const FuzzyGraph& g, const VertexSet& s) {
    const auto in = membership(g, s);
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (!has_neighbor_in(g, v, in)) return false;
    return true;
}

bool has_total_dominating(const FuzzyGraph& g) {
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (g.open_neighborhood(v).empty()) return false;
    return true;
}

DominationResult min_dominating(const FuzzyGraph& g) {
    CoverSearch search(g, DominationKind::Dominating);
    // Nobody else can dominate a vertex with no effective neighbor.
    for (VertexIndex v = 0; v < g.vertex_count(); ++v)
        if (g.open_neighborhood(v).empty()) search.force(v);
    return search.run();
}

DominationResult min_total_dominating(const FuzzyGraph& g) {
    if (!has_total_dominating(g)) {
        DominationResult none;
        none.kind = DominationKind::Total;
        return none;
    }
    return CoverSearch(g, DominationKind::Total).run();
}

DominationResult min_domination(const FuzzyGraph& g, DominationKind kind) {
    return kind == DominationKind::Total ? min_total_dominating(g) : min_dominating(g);
}

DominationResult brute_force_min(const FuzzyGraph& g, DominationKind kind) {
    const std::size_t n = g.vertex_count();
    if (n > brute_force_limit)
        throw TooLarge("brute force limited to " + std::to_string(brute_force_limit) +
                       " vertices, got " + std::to_string(n));

    std::vector<std::uint32_t> adjacent(n, 0);
    for (VertexIndex u = 0; u < n; ++u)
        for (VertexIndex v = 0; v < n; ++v)
            if (u != v && g.is_effective(u, v)) adjacent[u] |= std::uint32_t{1} << v;

    DominationResult best;
    best.kind = kind;
    const std::uint32_t end = std::uint32_t{1} << n;
    for (std::uint32_t mask = 0; mask < end; ++mask) {
        bool ok = true;
        for (VertexIndex v = 0; v < n && ok; ++v) {
            const bool inside = ((mask >> v) & 1U) != 0;
            const bool neighbor = (adjacent[v] & mask) != 0;
            ok = kind == DominationKind::Total ? neighbor : (inside || neighbor);
        }
        if (!ok) continue;

        VertexSet set;
        Rational weight = 0;
        for (VertexIndex v = 0; v < n; ++v) {
            if (((mask >> v) & 1U) == 0) continue;
            set.push_back(v);
            weight += g.sigma(v).value();
        }
        if (better(weight, set, best)) {
            best.found = true;
            best.optimum = std::move(weight);
            best.witness = std::move(set);
        }
    }
    return best;
}

}  // namespace fuzzydom
