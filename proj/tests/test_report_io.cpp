#include <doctest.h>

#include <pmat/families.hpp>
#include <pmat/io.hpp>
#include <pmat/report.hpp>

using namespace pmat;
using nlohmann::ordered_json;

TEST_CASE("report serialization") {
    CheckReport ok = CheckReport::passed("demo", {{"n", 7}, {"p", 3}});
    ordered_json j = report_to_json(ok);
    CHECK(j["check"] == "demo");
    CHECK(j["params"]["n"] == 7);
    CHECK(j["verdict"] == "pass");
    CHECK_FALSE(j.contains("witness"));
    // parameter order is preserved, so the line is byte-stable
    CHECK(j.dump() == R"({"check":"demo","params":{"n":7,"p":3},"verdict":"pass"})");

    CheckReport bad = CheckReport::failed("demo", {{"n", 7}}, {{"got", "0"}, {"want", "1"}});
    ordered_json jb = report_to_json(bad);
    CHECK(jb["verdict"] == "fail");
    CHECK(jb["witness"]["got"] == "0");

    CHECK(report_to_json(CheckReport::na("demo", {}))["verdict"] == "not-applicable");
}

TEST_CASE("csv projection is rectangular") {
    CHECK(report_csv_header() == "check,params,verdict");
    CheckReport r = CheckReport::passed("demo", {{"q", 8}, {"k", 2}});
    CHECK(report_to_csv(r) == "demo,\"q=8;k=2\",pass");

    // non-scalar params are dropped rather than breaking the row shape
    CheckReport nested = CheckReport::passed("demo", {{"q", 8}, {"chi", ordered_json::array({"1", "0"})}});
    CHECK(report_to_csv(nested) == "demo,\"q=8\",pass");
}

TEST_CASE("plain rendering") {
    CheckReport r = CheckReport::failed("demo", {{"n", 3}}, {{"got", "2"}});
    std::string line = report_to_plain(r);
    CHECK(line.find("fail") == 0);
    CHECK(line.find("demo") != std::string::npos);
    CHECK(line.find("n=3") != std::string::npos);
    CHECK(line.find("witness") != std::string::npos);
}

TEST_CASE("polynomial rendering") {
    ZDomain z;
    PolyZ f = PolyZ::from_ints(z, {1, -2, 0, -2, 1});
    CHECK(poly_to_string(f) == "t^4 - 2t^3 - 2t + 1");
    CHECK(poly_to_string(PolyZ::zero(z)) == "0");
    CHECK(poly_to_string(PolyZ::from_ints(z, {-7})) == "-7");
    CHECK(poly_to_string(PolyZ::from_ints(z, {0, 1})) == "t");
    CHECK(poly_to_string(PolyZ::from_ints(z, {0, -1, 1})) == "t^2 - t");

    ordered_json j = poly_to_json(f);
    CHECK(j.size() == 5);
    CHECK(j[0] == "1");
    CHECK(j[1] == "-2");
    CHECK(poly_to_json(PolyZ::zero(z)).empty());
}

TEST_CASE("matrix rendering") {
    MatZ p = pascal_symmetric(2);
    ordered_json j = matrix_to_json(p);
    CHECK(j["rows"] == 2);
    CHECK(j["domain"] == "Z");
    CHECK(j["entries"] == ordered_json::array({"1", "1", "1", "2"}));

    FpDomain d7(7);
    CHECK(matrix_to_json(reduce_mod(p, d7))["domain"] == "Fp:7");

    MatQ q(1, 2, QDomain{});
    q.at(0, 1) = mpq_class(1, 2);
    ordered_json jq = matrix_to_json(q);
    CHECK(jq["domain"] == "Q");
    CHECK(jq["entries"][1] == "1/2");

    CHECK(matrix_to_plain(p) == "1 1\n1 2\n");
}
