#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "unienergy/canonical.hpp"
#include "unienergy/energy.hpp"
#include "unienergy/enumerate.hpp"
#include "unienergy/families.hpp"
#include "unienergy/graph_io.hpp"
#include "unienergy/jsonschema.hpp"
#include "unienergy/report_json.hpp"

using namespace unienergy;

namespace {

Json load_schema(const std::string& name) {
    for (const std::string prefix : {"schemas/", "../schemas/", "../../schemas/"}) {
        std::ifstream in(prefix + name);
        if (in) return Json::parse(in);
    }
    throw std::runtime_error("schema not found: " + name);
}

}  // namespace

TEST_CASE("text edge-list format") {
    auto g = parse_graph_line("4; 0 1; 1 2; 2 3; 3 0");
    CHECK(g.n == 4);
    CHECK(g.edge_count() == 4);
    CHECK(fragment_key(g) == fragment_key(build(Family::Cycle, 4)));
    CHECK(parse_graph_line(write_graph_text(build(Family::A, 10))) == build(Family::A, 10));
    CHECK_THROWS_AS((void)parse_graph_line("4; 0 9"), Error);
    CHECK_THROWS_AS((void)parse_graph_line("x; 0 1"), Error);
}

TEST_CASE("graph6 strings") {
    // 'C' encodes n=4; the body byte sets exactly the cycle 0-1-2-3.
    // Derived from the bit layout: columns (0,1),(0,2),(1,2),(0,3),(1,3),(2,3).
    auto c4 = parse_graph6("Cr");
    CHECK(c4.n == 4);
    CHECK(c4.edge_count() == 4);
    CHECK(fragment_key(c4) == fragment_key(build(Family::Cycle, 4)));
    auto with_header = parse_graph_line(">>graph6<<Cr");
    CHECK(with_header == c4);
    // a line without ';' routes to graph6
    auto k2 = parse_graph_line("A_");
    CHECK(k2.n == 2);
    CHECK(k2.edge_count() == 1);
}

TEST_CASE("round trip through a file") {
    std::string path = "io_roundtrip.txt";
    {
        std::ofstream out(path);
        out << "# corpus\n";
        out << write_graph_text(build(Family::D, 8)) << "\n\n";
        out << write_graph_text(build(Family::Path, 3)) << "\n";
    }
    auto graphs = parse_graph_file(path);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == build(Family::D, 8));
    CHECK(graphs[1] == build(Family::Path, 3));
    std::remove(path.c_str());
}

TEST_CASE("reports validate against the shipped schemas") {
    SUBCASE("energy") {
        auto rep = json_energy(energy_eigen(build(Family::B, 8)));
        CHECK(schema_validate(load_schema("energy.schema.json"), rep).empty());
    }
    SUBCASE("charpoly") {
        auto g = build(Family::A, 8);
        auto rep = json_charpoly_report(g, charpoly_recursive(g));
        CHECK(schema_validate(load_schema("charpoly.schema.json"), rep).empty());
    }
    SUBCASE("compare") {
        auto b1 = b_sequence(build(Family::B, 8));
        auto b2 = b_sequence(build(Family::A, 8));
        auto rep = json_compare_report(compare(b1, b2), b1, b2, 9.15, 8.9);
        CHECK(schema_validate(load_schema("compare.schema.json"), rep).empty());
    }
    SUBCASE("enumeration with verification reports") {
        auto run = enumerate_Un(8);
        std::vector<VerificationReport> reports = {verify_main_theorem(8)};
        auto rep = json_enumeration_run(run, reports);
        CHECK(schema_validate(load_schema("enumerate.schema.json"), rep).empty());
    }
    SUBCASE("violations are caught") {
        Json schema = load_schema("energy.schema.json");
        Json bad = {{"value", "nan"}, {"method", "eigen"}};
        CHECK(!schema_validate(schema, bad).empty());
    }
}

TEST_CASE("json big integers degrade to strings only past 64 bits") {
    BigInt small = 123;
    BigInt big = BigInt("123456789012345678901234567890");
    CHECK(json_bigint(small).is_number_integer());
    CHECK(json_bigint(big).is_string());
}
