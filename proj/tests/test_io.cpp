#include "fuzzydom/graph_io.hpp"
#include "fuzzydom/product.hpp"

#include "test_support.hpp"

#include <doctest.h>

#include <filesystem>

using namespace fuzzydom;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "fuzzydom_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

std::size_t count(const std::string& text, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST_CASE("load the shipped fixtures") {
    const auto g = load(testing::data_path("example1_G.fg"));
    CHECK(g.name() == "G");
    CHECK(g.vertex_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK_FALSE(g.product_tag().has_value());

    const auto p = load(testing::data_path("example1_product.fg"));
    REQUIRE(p.product_tag().has_value());
    CHECK(p.product_tag()->left_vertices == std::vector<VertexId>{"g1", "g2"});
    CHECK(p.product_tag()->right_vertices == std::vector<VertexId>{"h1", "h2"});
    CHECK(serialize_graph(p) == serialize_graph(direct_product(testing::example1_g(), testing::example1_h())));
    CHECK(serialize_graph(load(testing::data_path("example3_product.fg"))) ==
          serialize_graph(direct_product(testing::example3_g(), testing::example3_h())));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_WITH_AS(parse_graph("{\"name\": \"G\", \"vertices\": [ }"),
                         doctest::Contains("line 1"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_graph(R"({"name":"G","vertices":[{"id":"a","sigma":"0.1"},{"id":"a","sigma":"0.2"}],"edges":[]})"),
        doctest::Contains("duplicate vertex id"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_graph(R"({"name":"G","vertices":[{"id":"a","sigma":0.1}],"edges":[]})"),
        doctest::Contains("expected a string"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_graph(R"({"name":"G","vertices":[{"id":"a","sigma":"0.1234567"}],"edges":[]})"),
        doctest::Contains("more than 6"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_graph(R"({"name":"G","vertices":[{"id":"a","sigma":"0.1"}],"edges":[{"u":"a","v":"b","mu":"0"}]})"),
        doctest::Contains("unknown vertex 'b'"), ParseError);
    CHECK_THROWS_AS(parse_graph(R"({"name":"G","vertices":[]})"), ParseError);
}

TEST_CASE("load refuses invalid graphs and lists violations") {
    const auto path = temp_file("invalid.fg");
    write_text_file(path, R"({"name":"G","vertices":[{"id":"a","sigma":"0.3"},{"id":"b","sigma":"0.2"}],)"
                          R"("edges":[{"u":"a","v":"b","mu":"0.25"}]})");
    try {
        load(path);
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        REQUIRE(e.violations().size() == 1);
        CHECK(std::string(e.what()).find("mu exceeds min sigma on (a,b)") != std::string::npos);
    }
}

TEST_CASE("canonical save") {
    // edges sorted by endpoint index, lower index first, minimal decimals
    const auto g = testing::make_graph({{"c", "0.50"}, {"a", "0.3"}, {"b", "1/3"}},
                                       {{"b", "a", "0.30"}, {"a", "c", "0.1"}, {"c", "b", "1/3"}});
    const std::string text = serialize_graph(g);
    const auto again = parse_graph(text);
    CHECK(serialize_graph(again) == text);
    CHECK(text.find("\"0.50\"") == std::string::npos);
    CHECK(text.find("\"1/3\"") != std::string::npos);
    CHECK(text.find("\"u\": \"c\",\n      \"v\": \"a\"") < text.find("\"u\": \"c\",\n      \"v\": \"b\""));

    const auto edgeless = testing::make_graph({{"a", "0.3"}}, {});
    CHECK(serialize_graph(edgeless).find("\"edges\": []") != std::string::npos);

    const auto p = direct_product(testing::example1_g(), testing::example1_h());
    CHECK(serialize_graph(p).find("\"product_of\"") != std::string::npos);
}

TEST_CASE("property: save/load/save is byte-identical") {
    for (std::size_t i = 0; i < 3; ++i) {
        const auto g = testing::random_graph(71, 8, i);
        const auto path = temp_file("roundtrip" + std::to_string(i) + ".fg");
        save(g, path);
        const std::string first = read_text_file(path);
        const auto loaded = load(path);
        save(loaded, path);
        CHECK(read_text_file(path) == first);
        CHECK(loaded.vertex_count() == g.vertex_count());
        for (VertexIndex v = 0; v < g.vertex_count(); ++v) CHECK(loaded.sigma(v) == g.sigma(v));
    }
}

TEST_CASE("DOT export") {
    const auto p1 = direct_product(testing::example1_g(), testing::example1_h());
    const std::string dot1 = to_dot(p1);
    CHECK(dot1.rfind("graph ", 0) == 0);
    CHECK(count(dot1, "[label=\"g") == 4);
    CHECK(count(dot1, " -- ") == 2);
    CHECK(count(dot1, "style=solid") == 2);
    CHECK(dot1.find("\"g1|h1\" [label=\"g1|h1 (0.15)\"]") != std::string::npos);

    const std::string dot3 = to_dot(direct_product(testing::example3_g(), testing::example3_h()));
    CHECK(count(dot3, " -- ") == 4);
    CHECK(count(dot3, "style=solid") == 2);
    CHECK(count(dot3, "style=dashed") == 2);

    const std::string lonely = to_dot(testing::make_graph({{"a", "0.3"}, {"b", "0.2"}}, {}));
    CHECK(count(lonely, " -- ") == 0);
    CHECK(count(lonely, "[label=") == 2);
}
