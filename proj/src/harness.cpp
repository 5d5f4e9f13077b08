#include "fuzzydom/harness.hpp"

#include "fuzzydom/graph_io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <stdexcept>

namespace fuzzydom {

namespace {

using json = nlohmann::ordered_json;

std::size_t parse_size(std::string_view text, std::string_view what) {
    std::size_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || end != text.data() + text.size())
        throw std::invalid_argument("bad " + std::string(what) + " '" + std::string(text) + "'");
    return value;
}

GenParams expand(const GenTemplate& t, std::uint64_t seed, std::string prefix, std::string name) {
    if (t.min_vertices == 0 || t.max_vertices < t.min_vertices)
        throw std::invalid_argument("bad vertex range");
    SeededRng rng(seed);
    GenParams p;
    p.vertex_count = t.min_vertices + rng.below(t.max_vertices - t.min_vertices + 1);
    p.edge_probability = t.edge_probability;
    p.effective_probability = t.effective_probability;
    p.sigma_grid = t.sigma_grid;
    p.seed = mix_seed(seed, 0);
    p.id_prefix = std::move(prefix);
    p.name = std::move(name);
    return p;
}

std::vector<std::pair<std::size_t, std::size_t>> removal_moves(const FuzzyGraph& g) {
    std::vector<std::pair<std::size_t, std::size_t>> moves;  // (kind, index): 0 vertex, 1 edge
    if (g.vertex_count() > 1)
        for (std::size_t v = 0; v < g.vertex_count(); ++v) moves.emplace_back(0, v);
    for (std::size_t e = 0; e < g.edge_count(); ++e) moves.emplace_back(1, e);
    return moves;
}

bool violates(TheoremId id, const FuzzyGraph& g, const FuzzyGraph& h, const CheckOptions& options) {
    return check_theorem(id, g, h, options).kind == VerdictKind::Violated;
}

}  // namespace

GenTemplate parse_gen_template(std::string_view text) {
    GenTemplate t;
    while (!text.empty()) {
        const auto comma = text.find(',');
        const std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);

        const auto eq = item.find('=');
        if (eq == std::string_view::npos) throw std::invalid_argument("expected key=value, got '" + std::string(item) + "'");
        const std::string_view key = item.substr(0, eq);
        const std::string_view value = item.substr(eq + 1);
        if (key == "vertices") {
            const auto dots = value.find("..");
            if (dots == std::string_view::npos) {
                t.min_vertices = t.max_vertices = parse_size(value, "vertex count");
            } else {
                t.min_vertices = parse_size(value.substr(0, dots), "vertex count");
                t.max_vertices = parse_size(value.substr(dots + 2), "vertex count");
            }
        } else if (key == "edge-prob") {
            t.edge_probability = parse_weight(value);
        } else if (key == "effective-prob") {
            t.effective_probability = parse_weight(value);
        } else if (key == "grid") {
            t.sigma_grid = static_cast<unsigned>(parse_size(value, "grid"));
        } else {
            throw std::invalid_argument("unknown generator key '" + std::string(key) + "'");
        }
    }
    if (t.min_vertices == 0 || t.max_vertices < t.min_vertices)
        throw std::invalid_argument("bad vertex range");
    return t;
}

std::vector<ParamsPair> template_corpus(const GenTemplate& left, const GenTemplate& right,
                                        std::size_t count, std::uint64_t seed) {
    std::vector<ParamsPair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.emplace_back(expand(left, mix_seed(seed, 2 * i), "g", "G"),
                         expand(right, mix_seed(seed, 2 * i + 1), "h", "H"));
    }
    return out;
}

std::vector<ParamsPair> standard_corpus(std::size_t count, std::uint64_t seed,
                                        std::size_t max_vertices) {
    static const std::array<Rational, 3> edge_menu = {Rational(1, 2), Rational(3, 4), Rational(1)};
    static const std::array<Rational, 3> effective_menu = {Rational(1, 2), Rational(3, 4), Rational(1)};
    static const std::array<unsigned, 4> grid_menu = {3, 4, 5, 10};

    std::vector<ParamsPair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
        auto pick = [&](std::uint64_t stream) {
            SeededRng rng(mix_seed(seed, 4 * i + stream));
            GenTemplate t;
            t.min_vertices = 1;
            t.max_vertices = max_vertices;
            t.edge_probability = Weight::from_rational(edge_menu[rng.below(edge_menu.size())]);
            t.effective_probability = Weight::from_rational(effective_menu[rng.below(effective_menu.size())]);
            t.sigma_grid = grid_menu[rng.below(grid_menu.size())];
            return t;
        };
        out.emplace_back(expand(pick(0), mix_seed(seed, 4 * i + 2), "g", "G"),
                         expand(pick(1), mix_seed(seed, 4 * i + 3), "h", "H"));
    }
    return out;
}

std::string_view to_string(ReportStatus status) {
    switch (status) {
        case ReportStatus::HoldsOnCorpus: return "holds-on-corpus";
        case ReportStatus::CounterexampleFound: return "counterexample-found";
        case ReportStatus::NotApplicable: return "not-applicable";
    }
    return "?";
}

std::vector<TheoremReport> run_corpus(const std::vector<ParamsPair>& config,
                                      const std::vector<TheoremId>& ids,
                                      const CorpusOptions& options) {
    for (const auto& [left, right] : config) {
        check_params(left);
        check_params(right);
        if (left.vertex_count * right.vertex_count > options.max_product_vertices)
            throw std::invalid_argument("factor sizes " + std::to_string(left.vertex_count) + "x" +
                                        std::to_string(right.vertex_count) + " exceed the product cap of " +
                                        std::to_string(options.max_product_vertices));
    }

    std::vector<TheoremId> order;
    for (TheoremId id : all_theorems())
        if (std::find(ids.begin(), ids.end(), id) != ids.end()) order.push_back(id);

    std::vector<TheoremReport> reports(order.size());
    for (std::size_t t = 0; t < order.size(); ++t) reports[t].theorem = order[t];
    if (config.empty()) return {};

    std::vector<double> elapsed;
    for (std::size_t i = 0; i < config.size(); ++i) {
        const FuzzyGraph g = gen_random(config[i].first);
        const FuzzyGraph h = gen_random(config[i].second);
        const auto verdicts = check_theorems(order, g, h, options.check, &elapsed);
        for (std::size_t t = 0; t < order.size(); ++t) {
            TheoremReport& report = reports[t];
            report.wall_time_ms += elapsed[t];
            if (verdicts[t].kind == VerdictKind::NotApplicable) continue;
            ++report.instances_checked;
            if (verdicts[t].kind != VerdictKind::Violated) continue;
            ++report.violations;
            if (report.counterexamples.size() >= options.max_counterexamples) continue;

            const auto start = std::chrono::steady_clock::now();
            Counterexample cx{i, g, h, verdicts[t].witness};
            if (options.shrink_counterexamples) {
                auto [sg, sh] = shrink(g, h, order[t], options.check);
                cx.witness = check_theorem(order[t], sg, sh, options.check).witness;
                cx.g = std::move(sg);
                cx.h = std::move(sh);
            }
            report.counterexamples.push_back(std::move(cx));
            const std::chrono::duration<double, std::milli> spent = std::chrono::steady_clock::now() - start;
            report.wall_time_ms += spent.count();
        }
    }

    for (auto& report : reports) {
        if (report.violations > 0)
            report.status = ReportStatus::CounterexampleFound;
        else if (report.instances_checked > 0)
            report.status = ReportStatus::HoldsOnCorpus;
    }
    return reports;
}

FuzzyGraph without_vertex(const FuzzyGraph& g, VertexIndex v) {
    std::vector<Vertex> vertices;
    for (VertexIndex u = 0; u < g.vertex_count(); ++u)
        if (u != v) vertices.push_back(g.vertices()[u]);
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
        if (e.u == v || e.v == v) continue;
        edges.push_back({e.u > v ? e.u - 1 : e.u, e.v > v ? e.v - 1 : e.v, e.mu});
    }
    return FuzzyGraph(g.name(), std::move(vertices), std::move(edges));
}

FuzzyGraph without_edge(const FuzzyGraph& g, std::size_t edge) {
    std::vector<Edge> edges = g.edges();
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(edge));
    return FuzzyGraph(g.name(), g.vertices(), std::move(edges));
}

std::pair<FuzzyGraph, FuzzyGraph> shrink(const FuzzyGraph& g, const FuzzyGraph& h, TheoremId id,
                                         const CheckOptions& options) {
    if (!violates(id, g, h, options))
        throw std::invalid_argument("shrink: pair does not violate " + std::string(theorem_info(id).name));

    FuzzyGraph left = g;
    FuzzyGraph right = h;
    bool progress = true;
    while (progress) {
        progress = false;
        for (int side = 0; side < 2 && !progress; ++side) {
            const FuzzyGraph& current = side == 0 ? left : right;
            for (const auto& [kind, index] : removal_moves(current)) {
                FuzzyGraph candidate = kind == 0 ? without_vertex(current, index) : without_edge(current, index);
                const bool still = side == 0 ? violates(id, candidate, right, options)
                                             : violates(id, left, candidate, options);
                if (!still) continue;
                (side == 0 ? left : right) = std::move(candidate);
                progress = true;
                break;
            }
        }
    }
    return {std::move(left), std::move(right)};
}

json report_to_json(const std::vector<TheoremReport>& reports, const CorpusOptions& options,
                    bool include_wall_time) {
    json doc;
    doc["alpha_override"] = options.check.alpha ? json(format_rational(*options.check.alpha)) : json(nullptr);
    doc["separator"] = options.check.separator;
    doc["reports"] = json::array();
    for (const auto& report : reports) {
        const TheoremInfo& info = theorem_info(report.theorem);
        json entry;
        entry["theorem_id"] = info.name;
        entry["quote_anchor"] = info.quote_anchor;
        entry["forced"] = info.forced;
        entry["instances_checked"] = report.instances_checked;
        entry["violations"] = report.violations;
        entry["status"] = to_string(report.status);
        entry["counterexamples"] = json::array();
        for (const auto& cx : report.counterexamples) {
            entry["counterexamples"].push_back({{"instance", cx.instance},
                                                {"g", json::parse(serialize_graph(cx.g))},
                                                {"h", json::parse(serialize_graph(cx.h))},
                                                {"witness", cx.witness}});
        }
        if (include_wall_time) entry["wall_time_ms"] = report.wall_time_ms;
        doc["reports"].push_back(std::move(entry));
    }
    return doc;
}

std::vector<std::string> replay_report(const json& report) {
    CheckOptions options;
    if (report.contains("alpha_override") && report["alpha_override"].is_string())
        options.alpha = parse_rational(report["alpha_override"].get<std::string>());
    if (report.contains("separator")) options.separator = report["separator"].get<std::string>();

    std::vector<std::string> mismatches;
    for (const auto& entry : report.at("reports")) {
        const std::string name = entry.at("theorem_id").get<std::string>();
        const auto id = parse_theorem_id(name);
        if (!id) {
            mismatches.push_back("unknown theorem " + name);
            continue;
        }
        for (const auto& cx : entry.at("counterexamples")) {
            const FuzzyGraph g = parse_graph(cx.at("g").dump());
            const FuzzyGraph h = parse_graph(cx.at("h").dump());
            const Verdict verdict = check_theorem(*id, g, h, options);
            if (verdict.kind != VerdictKind::Violated || verdict.witness != cx.at("witness"))
                mismatches.push_back(name + " instance " + std::to_string(cx.at("instance").get<std::size_t>()));
        }
    }
    return mismatches;
}

bool has_forced_failure(const std::vector<TheoremReport>& reports) {
    return std::any_of(reports.begin(), reports.end(), [](const TheoremReport& r) {
        return theorem_info(r.theorem).forced && r.violations > 0;
    });
}

}  // namespace fuzzydom
