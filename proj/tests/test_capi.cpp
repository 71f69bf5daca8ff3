#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "cremona.h"

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    crm_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("counts per degree") {
    int count = 0;
    REQUIRE(crm_lines_count(3, &count) == CRM_OK);
    CHECK(count == 27);
    REQUIRE(crm_lines_count(2, &count) == CRM_OK);
    CHECK(count == 56);
    REQUIRE(crm_roots_count(3, &count) == CRM_OK);
    CHECK(count == 72);
    CHECK(crm_lines_count(9, &count) == CRM_EINVAL);
    CHECK(crm_lines_count(0, &count) == CRM_EINVAL);
    CHECK(crm_lines_count(3, nullptr) == CRM_EINVAL);
}

TEST_CASE("vector lists serialize") {
    char* out = nullptr;
    REQUIRE(crm_lines_json(6, &out) == CRM_OK);
    auto text = take(out);
    CHECK(text.find("\"coords\"") != std::string::npos);
    CHECK(text.find("\"r\":3") != std::string::npos);
}

TEST_CASE("graph exports") {
    char* out = nullptr;
    REQUIRE(crm_graph_dot(6, &out) == CRM_OK);
    CHECK(take(out).find("--") != std::string::npos);
    REQUIRE(crm_graph_json(5, &out) == CRM_OK);
    CHECK(take(out).find("\"edges\"") != std::string::npos);
}

TEST_CASE("classify the identity and reject junk") {
    const char* identity6 =
        "{\"r\":6,\"matrix\":[[1,0,0,0,0,0,0],[0,1,0,0,0,0,0],[0,0,1,0,0,0,0],"
        "[0,0,0,1,0,0,0],[0,0,0,0,1,0,0],[0,0,0,0,0,1,0],[0,0,0,0,0,0,1]]}";
    char* out = nullptr;
    REQUIRE(crm_classify(identity6, &out) == CRM_OK);
    auto text = take(out);
    CHECK(text.find("\"order\":1") != std::string::npos);
    CHECK(text.find("\"trace\":6") != std::string::npos);
    CHECK(text.find("\"minimal\":false") != std::string::npos);

    CHECK(crm_classify("{\"r\":6}", &out) == CRM_EINVAL);
    take(out);
    CHECK(crm_classify("not json", &out) == CRM_EINVAL);
    take(out);
    // a matrix scaling e1 by 2 is not an isometry
    const char* bad =
        "{\"r\":2,\"matrix\":[[1,0,0],[0,2,0],[0,0,1]]}";
    CHECK(crm_classify(bad, &out) == CRM_EINVAL);
    take(out);
}

TEST_CASE("action analysis reports both rank computations") {
    // trivial action in rank 4: invariant rank 5
    const char* spec =
        "{\"r\":4,\"generators\":[[[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],"
        "[0,0,0,1,0],[0,0,0,0,1]]],\"sigma\":null}";
    char* out = nullptr;
    REQUIRE(crm_action_analyze(spec, &out) == CRM_OK);
    auto text = take(out);
    CHECK(text.find("\"invariant_rank_formula\":5") != std::string::npos);
    CHECK(text.find("\"invariant_rank_oracle\":5") != std::string::npos);
    CHECK(text.find("\"group_order\":1") != std::string::npos);
}

TEST_CASE("group handles") {
    crm_group* g = nullptr;
    REQUIRE(crm_group_build(4, 0, &g) == CRM_OK);
    long long order = 0;
    REQUIRE(crm_group_order(g, &order) == CRM_OK);
    CHECK(order == 120);
    crm_group_free(g);

    crm_group* big = nullptr;
    CHECK(crm_group_build(7, 0, &big) == CRM_ERESOURCE);
    CHECK(big == nullptr);
    CHECK(crm_group_build(8, 1, &big) == CRM_ERESOURCE);
}

TEST_CASE("verification suites route verdicts and errors") {
    char* report = nullptr;
    CHECK(crm_verify("dp5", 0, 0, &report) == CRM_OK);
    CHECK(take(report).find("\"passed\":true") != std::string::npos);

    CHECK(crm_verify("nosuch", 0, 0, &report) == CRM_EINVAL);
    take(report);
    CHECK(crm_verify(nullptr, 0, 0, &report) == CRM_EINVAL);
}

TEST_CASE("surface examples") {
    char* report = nullptr;
    CHECK(crm_surfaces_verify("quadric", &report) == CRM_OK);
    CHECK(take(report).find("\"passed\":true") != std::string::npos);
    CHECK(crm_surfaces_verify("nosuch", &report) == CRM_EINVAL);
    take(report);
}

TEST_CASE("table emission") {
    char* out = nullptr;
    REQUIRE(crm_emit_tables(&out) == CRM_OK);
    auto tsv = take(out);
    CHECK(tsv.find("2903040") != std::string::npos);
    CHECK(tsv.find("D4^2") != std::string::npos);
}
