#include <doctest.h>

#include "stackyaut/json_io.hpp"
#include "stackyaut/weighted.hpp"

using namespace stackyaut;

namespace {

std::string fixture(const char* name) {
    return std::string(STACKYAUT_FIXTURE_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("matrix and vector round trips") {
    IntMatrix m{{1, -2, 3}, {0, 5, -6}};
    CHECK(matrix_from_json(matrix_to_json(m)) == m);

    IntVector v{0, -7, 42};
    CHECK(vector_from_json(vector_to_json(v)) == v);

    // entries beyond 64 bits travel as strings and survive
    Int big("123456789012345678901234567890");
    IntMatrix wide(1, 2);
    wide.at(0, 0) = big;
    wide.at(0, 1) = -big;
    Json j = matrix_to_json(wide);
    CHECK(j[0][0].is_string());
    CHECK(matrix_from_json(j) == wide);

    CHECK_THROWS_AS(matrix_from_json(Json::parse("[[1],[2,3]]")), InputError);
    CHECK_THROWS_AS(matrix_from_json(Json::parse("7")), InputError);
    CHECK_THROWS_AS(vector_from_json(Json::parse("[1.5]")), InputError);
}

TEST_CASE("group invariants serialization") {
    Json j = group_invariants_json(FgAbelianGroup::diagonal(1, IntVector{2, 4}));
    CHECK(j["free_rank"] == 1);
    CHECK(j["torsion"] == Json::parse("[2,4]"));
    CHECK(j["name"].is_string());
}

TEST_CASE("parse stacky fan fixture") {
    InputDocument doc = parse_document_file(fixture("wps_468_stacky.json"));
    CHECK(doc.kind == DocumentKind::StackyFan);
    REQUIRE(doc.stacky_fan.has_value());
    CHECK(doc.stacky_fan->n_group.generators() == 3);
    CHECK(doc.stacky_fan->fan.rays.size() == 3);
    CHECK(validate_stacky_fan(*doc.stacky_fan).ok());

    // serialization round trip reproduces the same stacky fan
    Json echo;
    echo["schema_version"] = "1";
    echo["kind"] = "stacky_fan";
    echo["payload"] = stacky_fan_to_json(*doc.stacky_fan);
    InputDocument again = parse_document(echo);
    CHECK(again.stacky_fan->beta_columns == doc.stacky_fan->beta_columns);
    CHECK(again.stacky_fan->fan.rays == doc.stacky_fan->fan.rays);
    CHECK(again.stacky_fan->fan.max_cones == doc.stacky_fan->fan.max_cones);
    CHECK(again.stacky_fan->n_group.relations() == doc.stacky_fan->n_group.relations());
}

TEST_CASE("parse the other fixture kinds") {
    InputDocument w = parse_document_file(fixture("weights_468.json"));
    CHECK(w.kind == DocumentKind::Weights);
    CHECK(*w.weights == IntVector{4, 6, 8});

    InputDocument m = parse_document_file(fixture("identity_beta.json"));
    CHECK(m.kind == DocumentKind::Matrix);
    CHECK(m.matrix->is_identity());

    InputDocument x = parse_document_file(fixture("z4_mod2_z2.json"));
    CHECK(x.kind == DocumentKind::CrossedModule);
    CHECK(verify_crossed_module(*x.crossed_module).ok());

    InputDocument p = parse_document_file(fixture("peiffer_fail.json"));
    CHECK(!verify_crossed_module(*p.crossed_module).ok());
}

TEST_CASE("schema violations raise InputError") {
    CHECK_THROWS_AS(parse_document_file(fixture("malformed.json")), InputError);
    CHECK_THROWS_AS(parse_document_file(fixture("bad_schema.json")), InputError);
    CHECK_THROWS_AS(parse_document_file(fixture("does_not_exist.json")), InputError);

    CHECK_THROWS_AS(parse_document(Json::parse(R"({"schema_version":"1"})")), InputError);
    CHECK_THROWS_AS(
        parse_document(Json::parse(R"({"schema_version":"1","kind":"nope","payload":{}})")),
        InputError);
    // a structurally broken group table surfaces as an input error too
    CHECK_THROWS_AS(
        parse_document(Json::parse(
            R"({"schema_version":"1","kind":"crossed_module",
                "payload":{"g2":{"table":[[0,0],[1,1]]},"g1":{"cyclic":2},
                           "phi":[0,0],"trivial_action":true}})")),
        InputError);
}

TEST_CASE("text rendering is stable and total") {
    Json report;
    report["command"] = "wps";
    report["input"]["weights"] = Json::parse("[4,6,8]");
    report["results"]["d"] = 2;
    report["results"]["matrix"] = Json::parse("[[1,0],[0,1]]");
    report["results"]["list"] = Json::parse(R"([{"a":1},{"a":2}])");
    report["status"] = "ok";
    std::string once = render_text(report);
    CHECK(once == render_text(report));
    CHECK(once.find("command: wps") != std::string::npos);
    CHECK(once.find("[[1,0],[0,1]]") != std::string::npos);
    CHECK(once.find("status: ok") != std::string::npos);
}
