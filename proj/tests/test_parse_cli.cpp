#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>
#include <string>
#include <vector>

#include "caysum/cli.hpp"
#include "caysum/parse.hpp"

using namespace caysum;

namespace {

struct CliRun {
    int status;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

}  // namespace

TEST_CASE("group spec grammar") {
    CHECK(parse_group_spec("Z4xZ2xZ3").factor_orders() ==
          std::vector<long>{4, 2, 3});
    CHECK(parse_group_spec("z4XZ2xz3").factor_orders() ==
          std::vector<long>{4, 2, 3});
    CHECK(parse_group_spec("[12]").factor_orders() == std::vector<long>{12});
    CHECK(parse_group_spec("[4, 2, 3]").factor_orders() ==
          std::vector<long>{4, 2, 3});

    CHECK_THROWS_AS(parse_group_spec("Z1xZ2"), validation_error);
    CHECK_THROWS_AS(parse_group_spec(""), parse_error);
    CHECK_THROWS_AS(parse_group_spec("Zx"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("Z4x"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("[4,2"), parse_error);
    CHECK_THROWS_AS(parse_group_spec("Z4 junk"), parse_error);
    try {
        parse_group_spec("Z4xQ8");
        CHECK(false);
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("position") != std::string::npos);
    }
}

TEST_CASE("element grammar") {
    GroupSpec z12 = parse_group_spec("Z12");
    CHECK(parse_element(z12, "7") == Element{{7}});
    CHECK(parse_element(z12, "(7)") == Element{{7}});
    CHECK_THROWS_AS(parse_element(z12, "12"), structural_error);
    CHECK_THROWS_AS(parse_element(z12, "x"), parse_error);

    GroupSpec g = parse_group_spec("Z2xZ4xZ3");
    CHECK(parse_element(g, "(1,0,2)") == Element{{1, 0, 2}});
    CHECK_THROWS_AS(parse_element(g, "(1,0)"), parse_error);
    CHECK_THROWS_AS(parse_element(g, "1,0,2x"), parse_error);
}

TEST_CASE("element set grammar") {
    GroupSpec z12 = parse_group_spec("Z12");
    CHECK(parse_element_set(z12, "1,11").size() == 2);
    CHECK(parse_element_set(z12, "").empty());
    CHECK(parse_element_set(z12, "3,3").size() == 1);

    GroupSpec g = parse_group_spec("Z2xZ4xZ3");
    ElementSet s = parse_element_set(g, "(1,0,0),(0,1,0)");
    CHECK(s.size() == 2);
    CHECK(s.contains(Element{{0, 1, 0}}));
    CHECK_THROWS_AS(parse_element_set(g, "(1,0,0),"), parse_error);
}

TEST_CASE("check-code exit codes and output") {
    CliRun ok = cli({"check-code", "Z12", "--set", "1,11", "--code", "0,3,6,9"});
    CHECK(ok.status == 0);
    CHECK(ok.out.find("graph oracle: perfect code") != std::string::npos);

    CliRun no =
        cli({"check-code", "Z12", "--set", "1,11", "--code", "0,2,4,6,8,10"});
    CHECK(no.status == 1);

    CliRun bad = cli({"check-code", "Z12", "--set", "2", "--code", "0"});
    CHECK(bad.status == 2);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("check-code json round trip") {
    CliRun r = cli({"check-code", "Z12", "--set", "1,11", "--code", "0,3,6,9",
                    "--format", "json"});
    CHECK(r.status == 0);
    CHECK(r.out.find("\"cardinality_ok\": true") != std::string::npos);
    CHECK(r.out.find("\"independence_ok\": true") != std::string::npos);
    CHECK(r.out.find("\"uniqueness_ok\": true") != std::string::npos);
    CHECK(r.out.find("\"partition_ok\": true") != std::string::npos);
    // byte-determinism
    CliRun again = cli({"check-code", "Z12", "--set", "1,11", "--code",
                        "0,3,6,9", "--format", "json"});
    CHECK(r.out == again.out);
}

TEST_CASE("find-codes") {
    CliRun r = cli({"find-codes", "Z4", "--set", "1"});
    CHECK(r.status == 0);
    CliRun none = cli({"find-codes", "Z12", "--set", "1,11,3,9"});
    CHECK(none.status == 1);
}

TEST_CASE("check-subgroup and witness") {
    CHECK(cli({"check-subgroup", "Z12", "--subgroup-gen", "3"}).status == 0);
    CliRun no = cli({"check-subgroup", "Z12", "--subgroup-gen", "4"});
    CHECK(no.status == 1);
    CHECK(no.out.find("neither") != std::string::npos);

    CliRun w = cli({"witness", "Z12", "--subgroup-gen", "3"});
    CHECK(w.status == 0);
    CHECK(w.out.find("1") != std::string::npos);
    CHECK(w.out.find("5") != std::string::npos);
    CHECK(cli({"witness", "Z12", "--subgroup-gen", "4"}).status == 1);
}

TEST_CASE("witness feeds back through check-code") {
    // the spec'd round trip: {1,5} makes {0,3,6,9} a perfect code
    CliRun r =
        cli({"check-code", "Z12", "--set", "1,5", "--code", "0,3,6,9"});
    CHECK(r.status == 0);
}

TEST_CASE("classify and equivalences") {
    CliRun c = cli({"classify", "Z12", "--format", "json"});
    CHECK(c.status == 0);
    CHECK(c.out.find("equals-squares-subgroup") != std::string::npos);
    CHECK(c.out.find("has-non-square") != std::string::npos);

    CliRun e = cli({"equivalences", "Z12", "--subgroup-gen", "3"});
    CHECK(e.status == 0);
    CliRun e0 = cli({"equivalences", "Z12", "--subgroup-gen", ""});
    CHECK(e0.status == 1);
}

TEST_CASE("export") {
    CliRun dot = cli({"export", "Z4", "--set", "1", "--format", "dot"});
    CHECK(dot.status == 0);
    CHECK(dot.out.find("n0 -- n1") != std::string::npos);
    CliRun js = cli({"export", "Z4", "--set", "1", "--format", "json"});
    CHECK(js.status == 0);
    CHECK(js.out.find("\"edges\"") != std::string::npos);
    CHECK(cli({"export", "Z4", "--set", "1", "--format", "png"}).status == 2);
}

TEST_CASE("sweep smoke") {
    CliRun r = cli({"sweep", "--max-order", "8", "--which", "both", "--serial"});
    CHECK(r.status == 0);
    CHECK(r.out.find("discrepancies") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(cli({}).status == 2);
    CHECK(cli({"frobnicate"}).status == 2);
    CHECK(cli({"check-code"}).status == 2);
    CHECK(cli({"check-code", "Z1", "--set", "", "--code", ""}).status == 2);
    CHECK(cli({"check-code", "Z12", "--set", "1,11", "--code", "0,3,6,9",
               "--bogus"})
              .status == 2);
    CliRun help = cli({"--help"});
    CHECK(help.status == 0);
    CHECK_FALSE(help.out.empty());
}
