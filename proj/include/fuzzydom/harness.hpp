#pragma once

#include "fuzzydom/random_graph.hpp"
#include "fuzzydom/theorems.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace fuzzydom {

using ParamsPair = std::pair<GenParams, GenParams>;

/// Vertex-count range plus fixed probabilities; expanded per instance by seed.
struct GenTemplate {
    std::size_t min_vertices = 1;
    std::size_t max_vertices = 4;
    Weight edge_probability = Weight::from_rational(Rational(3, 4));
    Weight effective_probability = Weight::from_rational(Rational(3, 4));
    unsigned sigma_grid = 10;
};

/// "vertices=1..4,edge-prob=0.75,effective-prob=0.5,grid=10"; omitted keys
/// keep their defaults. Throws std::invalid_argument.
GenTemplate parse_gen_template(std::string_view text);

/// `count` pairs drawn from the two templates; factor ids are g1.. and h1..
std::vector<ParamsPair> template_corpus(const GenTemplate& left, const GenTemplate& right,
                                        std::size_t count, std::uint64_t seed);

/// `count` pairs with 1..max_vertices vertices per factor and edge/effective
/// probabilities and sigma grids cycled through a fixed menu (dense and
/// complete factors included).
std::vector<ParamsPair> standard_corpus(std::size_t count, std::uint64_t seed,
                                        std::size_t max_vertices = 4);

enum class ReportStatus { HoldsOnCorpus, CounterexampleFound, NotApplicable };

std::string_view to_string(ReportStatus status);

struct Counterexample {
    std::size_t instance = 0;
    FuzzyGraph g;
    FuzzyGraph h;
    nlohmann::ordered_json witness;
};

struct TheoremReport {
    TheoremId theorem = TheoremId::T1;
    std::size_t instances_checked = 0;
    std::size_t violations = 0;
    ReportStatus status = ReportStatus::NotApplicable;
    std::vector<Counterexample> counterexamples;
    double wall_time_ms = 0;
};

struct CorpusOptions {
    CheckOptions check;
    /// Counterexamples kept per theorem (first ones by instance index).
    std::size_t max_counterexamples = 5;
    bool shrink_counterexamples = true;
    /// Cap on |V(G)| * |V(H)| so every exact solver stays cheap.
    std::size_t max_product_vertices = 16;
};

/// Runs every theorem in `ids` on every generated pair; reports come back in
/// registry order. Throws std::invalid_argument when a pair exceeds the cap.
std::vector<TheoremReport> run_corpus(const std::vector<ParamsPair>& config,
                                      const std::vector<TheoremId>& ids,
                                      const CorpusOptions& options = {});

/// Greedily deletes vertices (G then H, by index) and then edges while the
/// checker still reports a violation. Throws std::invalid_argument when the
/// input pair does not violate `id`.
std::pair<FuzzyGraph, FuzzyGraph> shrink(const FuzzyGraph& g, const FuzzyGraph& h, TheoremId id,
                                         const CheckOptions& options = {});

FuzzyGraph without_vertex(const FuzzyGraph& g, VertexIndex v);
FuzzyGraph without_edge(const FuzzyGraph& g, std::size_t edge);

/// Report document; graphs are embedded as graph documents.
/// Without wall time the document is a pure function of config and seeds.
nlohmann::ordered_json report_to_json(const std::vector<TheoremReport>& reports,
                                      const CorpusOptions& options = {},
                                      bool include_wall_time = true);

/// Re-runs the checker on each serialized counterexample of a report
/// document (with the alpha override it records); returns a description of
/// every entry whose verdict or witness differs. Empty means all replayed.
std::vector<std::string> replay_report(const nlohmann::ordered_json& report);

/// True if any forced theorem found a counterexample.
bool has_forced_failure(const std::vector<TheoremReport>& reports);

}  // namespace fuzzydom
