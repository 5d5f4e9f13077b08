#include "fuzzydom/harness.hpp"
#include "fuzzydom/domination.hpp"
#include "fuzzydom/graph_io.hpp"
#include "fuzzydom/product.hpp"

#include "test_support.hpp"

#include <doctest.h>

using namespace fuzzydom;
using fuzzydom::testing::make_graph;

TEST_CASE("gen_random") {
    GenParams p;
    p.vertex_count = 1;
    const auto one = gen_random(p);
    CHECK(one.vertex_count() == 1);
    CHECK(one.edge_count() == 0);

    p.vertex_count = 5;
    p.edge_probability = testing::w("1");
    p.effective_probability = testing::w("1");
    const auto complete = gen_random(p);
    CHECK(is_complete(complete));
    CHECK(complete.edge_count() == 10);

    p.effective_probability = testing::w("0");
    const auto weak = gen_random(p);
    for (const auto& e : weak.edges()) CHECK(e.mu < min(weak.sigma(e.u), weak.sigma(e.v)));
    CHECK(validate(weak).empty());

    p.sigma_grid = 1;
    CHECK(validate(gen_random(p)).empty());

    p.seed = 42;
    p.sigma_grid = 7;
    p.effective_probability = testing::w("0.5");
    p.edge_probability = testing::w("0.6");
    CHECK(serialize_graph(gen_random(p)) == serialize_graph(gen_random(p)));

    p.vertex_count = 0;
    CHECK_THROWS_AS(gen_random(p), std::invalid_argument);
    p.vertex_count = 3;
    p.sigma_grid = 101;
    CHECK_THROWS_AS(gen_random(p), std::invalid_argument);
}

TEST_CASE("sigma values stay on the grid") {
    GenParams p;
    p.vertex_count = 30;
    p.sigma_grid = 4;
    const auto g = gen_random(p);
    for (const auto& v : g.vertices()) {
        CHECK(v.sigma.value() > 0);
        CHECK(Rational(v.sigma.value() * 4).get_den() == 1);
    }
}

TEST_CASE("theorem checks on the Example-1 pair") {
    const auto g = testing::example1_g();
    const auto h = testing::example1_h();
    for (auto id : {TheoremId::T1, TheoremId::T2a, TheoremId::T2b, TheoremId::T3, TheoremId::T4a,
                    TheoremId::T5, TheoremId::T6, TheoremId::T7, TheoremId::T8, TheoremId::T9,
                    TheoremId::T10, TheoremId::T11, TheoremId::T12}) {
        CAPTURE(theorem_info(id).name);
        CHECK(check_theorem(id, g, h).kind == VerdictKind::Holds);
    }
    // ν_t(G) = 0.35 with |D1| = 2, ν_t(H) = 0.4 with |D2| = 2: 0.7 <= min(0.7, 0.8)
    CHECK(min_total_dominating(g).optimum == Rational(7, 20));
    CHECK(min_total_dominating(h).optimum == Rational(2, 5));

    // α = 0.15: γ_t^{0.3} of each factor is 0.6 <= 0.7; closed γ^{0.3} is 0.3 = ν
    CheckOptions opts;
    opts.alpha = Rational(3, 20);
    CHECK(check_theorem(TheoremId::T9, g, h, opts).kind == VerdictKind::Holds);
    CHECK(check_theorem(TheoremId::T10, g, h, opts).kind == VerdictKind::Holds);

    // alpha above some sigma: hypothesis fails
    opts.alpha = Rational(1, 2);
    CHECK(check_theorem(TheoremId::T9, g, h, opts).kind == VerdictKind::NotApplicable);
}

TEST_CASE("theorem checks on the Example-3 pair") {
    const auto g = testing::example3_g();
    const auto h = testing::example3_h();
    CHECK(check_theorem(TheoremId::T2a, g, h).kind == VerdictKind::NotApplicable);
    CHECK(check_theorem(TheoremId::T2b, g, h).kind == VerdictKind::NotApplicable);
    CHECK(check_theorem(TheoremId::T6, g, h).kind == VerdictKind::NotApplicable);
    CHECK(check_theorem(TheoremId::T8, g, h).kind == VerdictKind::Holds);
}

TEST_CASE("converse of T2a fails with an ineffective factor edge") {
    // G's edge is not effective but H's small sigma makes the product edges effective.
    const auto g = make_graph({{"g1", "0.5"}, {"g2", "0.5"}}, {{"g1", "g2", "0.3"}});
    const auto h = make_graph({{"h1", "0.2"}, {"h2", "0.2"}}, {{"h1", "h2", "0.2"}}, "H");
    const auto v = check_theorem(TheoremId::T2b, g, h);
    REQUIRE(v.kind == VerdictKind::Violated);
    CHECK(v.witness["factor"] == "G");
    CHECK(has_total_dominating(direct_product(g, h)));
}

TEST_CASE("T7 skips one-vertex factors") {
    const auto g = make_graph({{"g1", "0.5"}, {"g2", "0.5"}}, {{"g1", "g2", "0.5"}});
    const auto h = make_graph({{"h1", "0.2"}}, {}, "H");
    CHECK(is_complete_product(direct_product(g, h)));
    CHECK(check_theorem(TheoremId::T7, g, h).kind == VerdictKind::NotApplicable);
}

TEST_CASE("T10 fails when a factor edge is not effective") {
    // alpha = 0.5: the product is edgeless, so nu = 1, while G needs 2 at level 1
    const auto g = make_graph({{"g1", "1"}, {"g2", "1"}}, {{"g1", "g2", "0.5"}});
    const auto h = make_graph({{"h1", "0.5"}}, {}, "H");
    const auto v = check_theorem(TheoremId::T10, g, h);
    REQUIRE(v.kind == VerdictKind::Violated);
    CHECK(v.witness["nu_product"] == "1");
    CHECK(v.witness["gamma_2alpha_G"] == "2");
    CHECK(v.witness["gamma_2alpha_H"] == "1");
}

TEST_CASE("check_theorems agrees with check_theorem") {
    const auto ids = all_theorems();
    for (std::size_t i = 0; i < 40; ++i) {
        const auto g = testing::random_graph(81, 4, i, "g");
        const auto h = testing::random_graph(82, 4, i, "h");
        const auto batch = check_theorems(ids, g, h);
        for (std::size_t t = 0; t < ids.size(); ++t) {
            const auto single = check_theorem(ids[t], g, h);
            CHECK(batch[t].kind == single.kind);
            CHECK(batch[t].witness == single.witness);
        }
    }
}

TEST_CASE("theorem registry") {
    CHECK(all_theorems().size() == 14);
    CHECK(parse_theorem_id("T4b") == TheoremId::T4b);
    CHECK_FALSE(parse_theorem_id("T13").has_value());
    const auto forced = forced_theorems();
    CHECK(forced == std::vector<TheoremId>{TheoremId::T1, TheoremId::T2a, TheoremId::T3, TheoremId::T6,
                                           TheoremId::T7, TheoremId::T12});
}

TEST_CASE("run_corpus") {
    CHECK(run_corpus({}, all_theorems()).empty());

    const auto config = standard_corpus(100, 2024);
    const auto reports = run_corpus(config, {TheoremId::T1});
    REQUIRE(reports.size() == 1);
    CHECK(reports[0].status == ReportStatus::HoldsOnCorpus);
    CHECK(reports[0].instances_checked == 100);

    // reports come back in registry order whatever order was requested
    const auto ordered = run_corpus(standard_corpus(5, 1), {TheoremId::T8, TheoremId::T1});
    REQUIRE(ordered.size() == 2);
    CHECK(ordered[0].theorem == TheoremId::T1);

    auto big = standard_corpus(1, 3);
    big[0].first.vertex_count = 5;
    big[0].second.vertex_count = 4;
    CHECK_THROWS_AS(run_corpus(big, {TheoremId::T1}), std::invalid_argument);
}

TEST_CASE("shrink") {
    const auto g = make_graph({{"g1", "1"}, {"g2", "1"}, {"g3", "0.8"}},
                              {{"g1", "g2", "0.5"}, {"g2", "g3", "0.8"}});
    const auto h = make_graph({{"h1", "0.5"}, {"h2", "0.9"}}, {{"h1", "h2", "0.5"}}, "H");
    REQUIRE(check_theorem(TheoremId::T10, g, h).kind == VerdictKind::Violated);
    const auto [sg, sh] = shrink(g, h, TheoremId::T10);
    CHECK(check_theorem(TheoremId::T10, sg, sh).kind == VerdictKind::Violated);
    CHECK(sg.vertex_count() <= g.vertex_count());
    CHECK(sh.vertex_count() <= h.vertex_count());
    CHECK(sg.vertex_count() + sh.vertex_count() < g.vertex_count() + h.vertex_count());

    // already minimal: unchanged
    const auto [again_g, again_h] = shrink(sg, sh, TheoremId::T10);
    CHECK(serialize_graph(again_g) == serialize_graph(sg));
    CHECK(serialize_graph(again_h) == serialize_graph(sh));

    // reproducible
    const auto [sg2, sh2] = shrink(g, h, TheoremId::T10);
    CHECK(serialize_graph(sg2) == serialize_graph(sg));
    CHECK(serialize_graph(sh2) == serialize_graph(sh));

    CHECK_THROWS_AS(shrink(testing::example1_g(), testing::example1_h(), TheoremId::T1), std::invalid_argument);
}

TEST_CASE("reports replay and are deterministic") {
    const auto config = standard_corpus(60, 99);
    CorpusOptions options;
    const auto a = report_to_json(run_corpus(config, all_theorems(), options), options, false);
    const auto b = report_to_json(run_corpus(config, all_theorems(), options), options, false);
    CHECK(a.dump() == b.dump());
    CHECK(replay_report(a).empty());

    auto tampered = a;
    bool changed = false;
    for (auto& entry : tampered["reports"]) {
        if (entry["counterexamples"].empty()) continue;
        entry["counterexamples"][0]["witness"]["tampered"] = true;
        changed = true;
        break;
    }
    if (changed) CHECK(replay_report(tampered).size() == 1);
}

TEST_CASE("generator templates") {
    const auto t = parse_gen_template("vertices=2..3,edge-prob=0.5,effective-prob=1,grid=20");
    CHECK(t.min_vertices == 2);
    CHECK(t.max_vertices == 3);
    CHECK(t.sigma_grid == 20);
    CHECK(t.effective_probability == testing::w("1"));
    CHECK_THROWS_AS(parse_gen_template("vertices=0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gen_template("colour=blue"), std::invalid_argument);
    CHECK_THROWS_AS(parse_gen_template("vertices"), std::invalid_argument);

    const auto corpus = template_corpus(t, t, 20, 5);
    for (const auto& [l, r] : corpus) {
        CHECK(l.vertex_count >= 2);
        CHECK(l.vertex_count <= 3);
        CHECK(r.id_prefix == "h");
    }
}
