#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "caysum/graph.hpp"
#include "caysum/parse.hpp"
#include "caysum/sweep.hpp"

using namespace caysum;

namespace {

CayleySumGraph graph_of(const std::string& group, const std::string& t) {
    GroupSpec g = parse_group_spec(group);
    return build_graph(g, validate_connection_set(g, parse_element_set(g, t)));
}

}  // namespace

TEST_CASE("connection set validation") {
    GroupSpec z12 = parse_group_spec("Z12");
    ConnectionSet t = validate_connection_set(z12, parse_element_set(z12, "1,11"));
    CHECK(t.size() == 2);
    CHECK(t.zero_extended == parse_element_set(z12, "0,1,11"));

    CHECK_THROWS_AS(validate_connection_set(z12, parse_element_set(z12, "2")),
                    validation_error);
    // every offender is reported
    try {
        validate_connection_set(z12, parse_element_set(z12, "1,2,6,11"));
        CHECK(false);
    } catch (const validation_error& e) {
        std::string msg = e.what();
        CHECK(msg.find("2") != std::string::npos);
        CHECK(msg.find("6") != std::string::npos);
    }

    GroupSpec g = parse_group_spec("Z2xZ4xZ3");
    CHECK_NOTHROW(
        validate_connection_set(g, parse_element_set(g, "(1,0,0),(0,1,0)")));

    GroupSpec z15 = parse_group_spec("Z15");
    CHECK_NOTHROW(validate_connection_set(z15, ElementSet()));
    CHECK_THROWS_AS(validate_connection_set(z15, parse_element_set(z15, "1")),
                    validation_error);
}

TEST_CASE("neighbors") {
    CayleySumGraph graph = graph_of("Z12", "1,11");
    GroupSpec g = graph.group;
    CHECK(neighbors(graph, parse_element(g, "0")) == parse_element_set(g, "1,11"));
    CHECK(neighbors(graph, parse_element(g, "5")) == parse_element_set(g, "8,6"));

    CayleySumGraph empty = graph_of("Z12", "");
    CHECK(neighbors(empty, parse_element(g, "3")).empty());
}

TEST_CASE("regularity, symmetry, loop-freeness") {
    for (const GroupSpec& g : all_abelian_group_types(24, /*even_only=*/true)) {
        if (g.order() > 24) continue;
        std::vector<Element> elems = all_elements(g);
        ElementSet nonsquares;
        for (const Element& e : elems)
            if (!is_square(g, e)) nonsquares.insert(e);
        // a few connection sets per group: singletons plus the full non-square set
        std::vector<ElementSet> ts;
        for (std::size_t i = 0; i < nonsquares.size(); ++i)
            ts.push_back(ElementSet({nonsquares[i]}));
        ts.push_back(nonsquares);
        for (const ElementSet& tset : ts) {
            CayleySumGraph graph = build_graph(g, validate_connection_set(g, tset));
            for (const Element& x : elems) {
                ElementSet nb = neighbors(graph, x);
                CHECK(nb.size() == tset.size());
                CHECK_FALSE(nb.contains(x));
                for (const Element& y : nb)
                    CHECK(neighbors(graph, y).contains(x));
            }
        }
    }
}

TEST_CASE("brute-force oracle on the worked Z12 cases") {
    {
        CayleySumGraph graph = graph_of("Z12", "1,11");
        GroupSpec g = graph.group;
        auto cert =
            brute_force_is_perfect_code(graph, parse_element_set(g, "0,3,6,9"));
        CHECK(cert.verdict);
        CHECK(cert.failure == PerfectCodeCertificate::Failure::none);
        CHECK(cert.partition_witness.size() == 8);
        // each outside vertex mapped to an actual neighbor inside the code
        for (auto& [v, c] : cert.partition_witness) {
            CHECK(neighbors(graph, v).contains(c));
            CHECK(cert.code.contains(c));
        }
    }
    {
        CayleySumGraph graph = graph_of("Z12", "1,3,5,7,9");
        GroupSpec g = graph.group;
        CHECK(brute_force_is_perfect_code(graph, parse_element_set(g, "0,11"))
                  .verdict);
    }
    {
        CayleySumGraph graph = graph_of("Z12", "1,11");
        GroupSpec g = graph.group;
        auto cert = brute_force_is_perfect_code(
            graph, parse_element_set(g, "0,2,4,6,8,10"));
        CHECK_FALSE(cert.verdict);
        CHECK(cert.failure != PerfectCodeCertificate::Failure::none);
        CHECK(cert.failure_witness.has_value());
    }
}

TEST_CASE("failure taxonomy") {
    CayleySumGraph graph = graph_of("Z4", "1");
    GroupSpec g = graph.group;
    auto indep = brute_force_is_perfect_code(graph, parse_element_set(g, "0,1"));
    CHECK_FALSE(indep.verdict);
    CHECK(indep.failure == PerfectCodeCertificate::Failure::independence);
    auto under = brute_force_is_perfect_code(graph, parse_element_set(g, "0"));
    CHECK_FALSE(under.verdict);
    CHECK(under.failure == PerfectCodeCertificate::Failure::under_domination);
    std::string names;
    for (auto f : {PerfectCodeCertificate::Failure::none,
                   PerfectCodeCertificate::Failure::independence,
                   PerfectCodeCertificate::Failure::under_domination,
                   PerfectCodeCertificate::Failure::over_domination,
                   PerfectCodeCertificate::Failure::cardinality})
        names += std::string(to_string(f)) + ";";
    CHECK(names ==
          "none;independence;under-domination;over-domination;cardinality;");
}

TEST_CASE("whole group is a perfect code of the empty graph") {
    for (const GroupSpec& g : all_abelian_group_types(16)) {
        CayleySumGraph graph =
            build_graph(g, validate_connection_set(g, ElementSet()));
        ElementSet all(all_elements(g));
        CHECK(brute_force_is_perfect_code(graph, all).verdict);
    }
}

TEST_CASE("code enumeration in Z4") {
    CayleySumGraph graph = graph_of("Z4", "1");
    GroupSpec g = graph.group;
    EnumerationResult r = enumerate_perfect_codes(graph);
    std::vector<ElementSet> expected = {
        parse_element_set(g, "0,2"), parse_element_set(g, "0,3"),
        parse_element_set(g, "1,2"), parse_element_set(g, "1,3")};
    CHECK(r.codes == expected);
    CHECK_FALSE(r.cardinality_obstruction);
}

TEST_CASE("code enumeration in Z12") {
    CayleySumGraph graph = graph_of("Z12", "1,11");
    GroupSpec g = graph.group;
    EnumerationResult r = enumerate_perfect_codes(graph);
    ElementSet x = parse_element_set(g, "0,3,6,9");
    CHECK(std::find(r.codes.begin(), r.codes.end(), x) != r.codes.end());
    for (const ElementSet& c : r.codes) {
        CHECK(c.size() == 4);
        CHECK(brute_force_is_perfect_code(graph, c).verdict);
    }

    CayleySumGraph g13 = graph_of("Z12", "1,3");
    EnumerationResult r13 = enumerate_perfect_codes(g13);
    for (const ElementSet& c : r13.codes)
        CHECK(brute_force_is_perfect_code(g13, c).verdict);
}

TEST_CASE("cardinality obstruction short-circuits enumeration") {
    CayleySumGraph graph = graph_of("Z12", "1,11,3,9");  // |T|+1 = 5, 5 ∤ 12
    EnumerationResult r = enumerate_perfect_codes(graph);
    CHECK(r.codes.empty());
    CHECK(r.cardinality_obstruction);
}

TEST_CASE("enumeration bound") {
    GroupSpec g = parse_group_spec("Z2xZ2xZ2xZ2xZ2");
    CayleySumGraph graph =
        build_graph(g, validate_connection_set(g, ElementSet()));
    CHECK_THROWS_AS(enumerate_perfect_codes(graph, 24), resource_error);
}

TEST_CASE("graph export") {
    {
        CayleySumGraph graph = graph_of("Z4", "1");
        std::string dot = export_graph(graph, ExportFormat::dot);
        CHECK(dot.find("n0 -- n1") != std::string::npos);
        CHECK(dot.find("n2 -- n3") != std::string::npos);
        CHECK(dot.find("n0 -- n2") == std::string::npos);
    }
    {
        CayleySumGraph graph = graph_of("Z2", "1");
        std::string dot = export_graph(graph, ExportFormat::dot);
        CHECK(dot.find("n0 -- n1") != std::string::npos);
    }
    {
        CayleySumGraph graph = graph_of("Z12", "");
        std::string dot = export_graph(graph, ExportFormat::dot);
        CHECK(dot.find("--") == std::string::npos);
        std::string json = export_graph(graph, ExportFormat::json);
        CHECK(json.find("\"edges\": []") != std::string::npos);
    }
    // byte-determinism
    CayleySumGraph graph = graph_of("Z12", "1,11");
    CHECK(export_graph(graph, ExportFormat::dot) ==
          export_graph(graph, ExportFormat::dot));
    CHECK(export_graph(graph, ExportFormat::json) ==
          export_graph(graph, ExportFormat::json));
}
