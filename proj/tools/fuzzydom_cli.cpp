// fuzzydom: command-line front end for the fuzzy direct-product toolkit.

#include "fuzzydom/alpha.hpp"
#include "fuzzydom/domination.hpp"
#include "fuzzydom/graph_io.hpp"
#include "fuzzydom/harness.hpp"
#include "fuzzydom/product.hpp"
#include "fuzzydom/random_graph.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace fd = fuzzydom;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failure = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int cmd_validate(const std::string& file) {
    fd::FuzzyGraph g;
    try {
        g = fd::parse_graph(fd::read_text_file(file));
    } catch (const fd::ParseError& e) {
        std::cout << "invalid: " << e.what() << "\n";
        return exit_failure;
    }
    const auto violations = fd::validate(g);
    if (violations.empty()) {
        std::cout << "ok: " << g.vertex_count() << " vertices, " << g.edge_count() << " edges\n";
        return exit_ok;
    }
    for (const auto& v : violations) std::cout << "violation: " << v.message << "\n";
    return exit_failure;
}

int cmd_product(const std::string& left, const std::string& right, const std::string& out,
                const std::string& separator) {
    const fd::FuzzyGraph product = fd::direct_product(fd::load(left), fd::load(right), separator);
    fd::save(product, out);
    std::cout << "wrote " << out << ": " << product.vertex_count() << " vertices, "
              << product.edge_count() << " edges, p = " << fd::format_rational(fd::product_order(product))
              << "\n";
    return exit_ok;
}

int cmd_dominate(const std::string& file, bool total, bool oracle) {
    const fd::FuzzyGraph g = fd::load(file);
    const auto kind = total ? fd::DominationKind::Total : fd::DominationKind::Dominating;
    const fd::DominationResult r = oracle ? fd::brute_force_min(g, kind) : fd::min_domination(g, kind);
    if (!r.found) {
        std::cout << "no total dominating set\n";
        return exit_ok;
    }
    std::cout << (total ? "nu_t" : "nu") << " = " << fd::format_rational(r.optimum)
              << ", witness = " << fd::format_vertex_set(g, r.witness) << "\n";
    return exit_ok;
}

int cmd_alpha(const std::string& file, const std::string& alpha_text, bool closed) {
    const fd::FuzzyGraph g = fd::load(file);
    fd::Rational alpha;
    try {
        alpha = fd::parse_rational(alpha_text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--alpha: ") + e.what());
    }
    if (sgn(alpha) <= 0) throw UsageError("--alpha must be positive");

    const auto mode = closed ? fd::NeighborhoodMode::Closed : fd::NeighborhoodMode::Open;
    const char* label = closed ? "gamma" : "gamma_t";
    const auto f = fd::min_alpha_function(g, alpha, mode);
    if (!f) {
        std::cout << label << " = infeasible\n";
        return exit_ok;
    }
    std::cout << label << " = " << fd::format_rational(f->weight) << "\n";
    std::cout << "f = {";
    for (std::size_t i = 0; i < f->vertices.size(); ++i)
        std::cout << (i ? ", " : "") << f->vertices[i] << ": " << fd::format_rational(f->values[i]);
    std::cout << "}\n";
    return exit_ok;
}

struct CheckArgs {
    std::string left_params;
    std::string right_params;
    std::size_t seeds = 100;
    std::uint64_t seed = 1;
    std::string theorems = "all";
    std::string alpha;
    std::size_t max_counterexamples = 5;
    bool no_shrink = false;
    std::string out;
};

std::vector<fd::TheoremId> parse_theorem_list(const std::string& list) {
    if (list == "all") return fd::all_theorems();
    if (list == "forced") return fd::forced_theorems();
    std::vector<fd::TheoremId> ids;
    std::stringstream in(list);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto id = fd::parse_theorem_id(item);
        if (!id) throw UsageError("unknown theorem '" + item + "'");
        ids.push_back(*id);
    }
    return ids;
}

int cmd_check(const CheckArgs& args) {
    fd::CorpusOptions options;
    options.max_counterexamples = args.max_counterexamples;
    options.shrink_counterexamples = !args.no_shrink;
    if (!args.alpha.empty()) {
        try {
            options.check.alpha = fd::parse_rational(args.alpha);
        } catch (const std::invalid_argument& e) {
            throw UsageError(std::string("--alpha: ") + e.what());
        }
    }
    const auto ids = parse_theorem_list(args.theorems);

    std::vector<fd::ParamsPair> config;
    try {
        if (args.left_params.empty() && args.right_params.empty()) {
            config = fd::standard_corpus(args.seeds, args.seed);
        } else {
            const auto left = fd::parse_gen_template(args.left_params);
            const auto right = fd::parse_gen_template(args.right_params.empty() ? args.left_params
                                                                                : args.right_params);
            config = fd::template_corpus(left, right, args.seeds, args.seed);
        }
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }

    std::vector<fd::TheoremReport> reports;
    try {
        reports = fd::run_corpus(config, ids, options);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    fd::write_text_file(args.out, fd::report_to_json(reports, options).dump(2) + "\n");

    for (const auto& r : reports) {
        const auto& info = fd::theorem_info(r.theorem);
        std::cout << info.name << (info.forced ? " [forced] " : " ") << fd::to_string(r.status)
                  << " checked=" << r.instances_checked << " violations=" << r.violations << "\n";
    }
    if (fd::has_forced_failure(reports)) {
        std::cerr << "error: a forced theorem has a counterexample\n";
        return exit_failure;
    }
    return exit_ok;
}

int cmd_gen(const fd::GenParams& params, const std::string& edge_prob, const std::string& effective_prob,
            const std::string& out) {
    fd::GenParams p = params;
    try {
        p.edge_probability = fd::parse_weight(edge_prob);
        p.effective_probability = fd::parse_weight(effective_prob);
        fd::check_params(p);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    fd::save(fd::gen_random(p), out);
    return exit_ok;
}

int cmd_export_dot(const std::string& file, const std::string& out) {
    fd::export_dot(fd::load(file), out);
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Domination toolkit for direct products of fuzzy graphs"};
    app.require_subcommand(1);

    std::string file, left, right, out, separator = "|", alpha_text;
    bool total = false, oracle = false, closed = false;

    auto* validate = app.add_subcommand("validate", "Check a graph file against the fuzzy-graph rules");
    validate->add_option("FILE", file)->required();

    auto* product = app.add_subcommand("product", "Write the direct product of two graphs");
    product->add_option("LEFT", left)->required();
    product->add_option("RIGHT", right)->required();
    product->add_option("-o,--out", out)->required();
    product->add_option("--separator", separator, "Pair separator in product vertex ids");

    auto* dominate = app.add_subcommand("dominate", "Minimum fuzzy-cardinality (total) dominating set");
    dominate->add_option("FILE", file)->required();
    dominate->add_flag("--total", total, "Total domination");
    dominate->add_flag("--oracle", oracle, "Use exhaustive enumeration (at most 20 vertices)");

    auto* alpha = app.add_subcommand("alpha", "Minimum-weight alpha-dominating function (exact LP)");
    alpha->add_option("FILE", file)->required();
    alpha->add_option("--alpha", alpha_text, "Domination level, decimal or num/den")->required();
    auto* alpha_total = alpha->add_flag("--total", "Open neighborhoods (default)");
    auto* alpha_closed = alpha->add_flag("--closed", closed, "Closed neighborhoods");
    alpha_total->excludes(alpha_closed);

    CheckArgs check_args;
    auto* check = app.add_subcommand("check", "Check every theorem over a seeded random corpus");
    check->add_option("--left-params", check_args.left_params,
                      "e.g. vertices=1..4,edge-prob=0.75,effective-prob=0.5,grid=10");
    check->add_option("--right-params", check_args.right_params, "Defaults to --left-params");
    check->add_option("--seeds", check_args.seeds, "Number of factor pairs");
    check->add_option("--seed", check_args.seed, "Base seed");
    check->add_option("--theorems", check_args.theorems, "Comma list (T1,T2a,...), 'forced' or 'all'");
    check->add_option("--alpha", check_args.alpha, "Override alpha for T9-T12");
    check->add_option("--max-counterexamples", check_args.max_counterexamples);
    check->add_flag("--no-shrink", check_args.no_shrink);
    check->add_option("-o,--out", check_args.out, "Report JSON path")->required();

    fd::GenParams gen_params;
    std::string edge_prob, effective_prob;
    auto* gen = app.add_subcommand("gen", "Generate a seeded random fuzzy graph");
    gen->add_option("--out", out)->required();
    gen->add_option("--vertices", gen_params.vertex_count)->required();
    gen->add_option("--edge-prob", edge_prob)->required();
    gen->add_option("--effective-prob", effective_prob)->required();
    gen->add_option("--grid", gen_params.sigma_grid)->required();
    gen->add_option("--seed", gen_params.seed)->required();
    gen->add_option("--prefix", gen_params.id_prefix, "Vertex id prefix");
    gen->add_option("--name", gen_params.name, "Graph name");

    auto* dot = app.add_subcommand("export-dot", "Write a Graphviz rendering");
    dot->add_option("FILE", file)->required();
    dot->add_option("-o,--out", out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*validate) return cmd_validate(file);
        if (*product) return cmd_product(left, right, out, separator);
        if (*dominate) return cmd_dominate(file, total, oracle);
        if (*alpha) return cmd_alpha(file, alpha_text, closed);
        if (*check) return cmd_check(check_args);
        if (*gen) return cmd_gen(gen_params, edge_prob, effective_prob, out);
        if (*dot) return cmd_export_dot(file, out);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return exit_usage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_failure;
    }
    return exit_usage;
}
