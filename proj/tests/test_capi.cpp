#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstring>
#include <string>

#include <nlohmann/json.hpp>

#include "heller.h"

using nlohmann::json;

namespace {

std::string take(char* s) {
    std::string out = s ? s : "";
    heller_string_free(s);
    return out;
}

}  // namespace

TEST_CASE("version and error state") {
    CHECK(heller_version() == std::string("0.1.0"));
    CHECK(heller_last_error() == std::string(""));
    heller_algebra* a = nullptr;
    CHECK(heller_algebra_builtin("nope", 2, &a) == HELLER_USER_ERROR);
    CHECK(std::string(heller_last_error()).find("unknown") != std::string::npos);
    CHECK(heller_algebra_builtin("A", 9, &a) == HELLER_USER_ERROR);
    CHECK(heller_algebra_builtin("A", 1009, &a) == HELLER_USER_ERROR);
    CHECK(heller_algebra_builtin(nullptr, 2, &a) == HELLER_USER_ERROR);
    // a successful call clears the error
    REQUIRE(heller_algebra_builtin("A", 2, &a) == HELLER_OK);
    CHECK(heller_last_error() == std::string(""));
    heller_algebra_free(a);
}

TEST_CASE("algebra json roundtrip") {
    heller_algebra* a = nullptr;
    REQUIRE(heller_algebra_builtin("C3", 5, &a) == HELLER_OK);
    char* text = nullptr;
    REQUIRE(heller_algebra_to_json(a, &text) == HELLER_OK);
    std::string j1 = take(text);
    heller_algebra* b = nullptr;
    REQUIRE(heller_algebra_from_json(j1.c_str(), &b) == HELLER_OK);
    REQUIRE(heller_algebra_to_json(b, &text) == HELLER_OK);
    CHECK(take(text) == j1);
    heller_algebra_free(a);
    heller_algebra_free(b);
    heller_algebra* c = nullptr;
    CHECK(heller_algebra_from_json("{broken", &c) == HELLER_USER_ERROR);
}

TEST_CASE("module handles") {
    heller_algebra* a = nullptr;
    REQUIRE(heller_algebra_builtin("A", 2, &a) == HELLER_OK);

    heller_module* x1 = nullptr;
    REQUIRE(heller_module_catalog(a, "X1", &x1) == HELLER_OK);
    int dim = 0;
    REQUIRE(heller_module_dim(x1, &dim) == HELLER_OK);
    CHECK(dim == 2);
    heller_module* nothing = nullptr;
    CHECK(heller_module_catalog(a, "X99", &nothing) == HELLER_USER_ERROR);

    heller_module* from_json = nullptr;
    const char* pair = R"({"e_part": [1], "f_part": [1], "a": [["1"]]})";
    REQUIRE(heller_module_from_json(a, pair, &from_json) == HELLER_OK);
    REQUIRE(heller_module_dim(from_json, &dim) == HELLER_OK);
    CHECK(dim == 2);
    CHECK(heller_module_from_json(a, "{]", &nothing) == HELLER_USER_ERROR);
    const char* bad_pair = R"({"e_part": [99], "f_part": [], "a": []})";
    CHECK(heller_module_from_json(a, bad_pair, &nothing) == HELLER_USER_ERROR);

    heller_module* rnd1 = nullptr;
    heller_module* rnd2 = nullptr;
    REQUIRE(heller_module_random(a, 42, 10, &rnd1) == HELLER_OK);
    REQUIRE(heller_module_random(a, 42, 10, &rnd2) == HELLER_OK);
    int d1 = 0, d2 = 0;
    heller_module_dim(rnd1, &d1);
    heller_module_dim(rnd2, &d2);
    CHECK(d1 == d2);
    CHECK(d1 <= 10);

    heller_module_free(x1);
    heller_module_free(from_json);
    heller_module_free(rnd1);
    heller_module_free(rnd2);
    heller_algebra_free(a);
}

TEST_CASE("omega, stable hom and identification") {
    heller_algebra* a = nullptr;
    REQUIRE(heller_algebra_builtin("A", 3, &a) == HELLER_OK);
    heller_module* x1 = nullptr;
    heller_module* x2 = nullptr;
    REQUIRE(heller_module_catalog(a, "X1", &x1) == HELLER_OK);
    REQUIRE(heller_module_catalog(a, "X2", &x2) == HELLER_OK);

    heller_module* ox1 = nullptr;
    REQUIRE(heller_omega(x1, &ox1) == HELLER_OK);
    int iso = 0;
    REQUIRE(heller_is_stably_isomorphic(ox1, x2, 0, &iso) == HELLER_OK);
    CHECK(iso == 1);
    REQUIRE(heller_is_stably_isomorphic(ox1, x1, 0, &iso) == HELLER_OK);
    CHECK(iso == 0);

    char* labels = nullptr;
    REQUIRE(heller_identify(ox1, &labels) == HELLER_OK);
    CHECK(json::parse(take(labels)) == json{{"X2", 1}});

    int d = -1;
    REQUIRE(heller_sthom_dim(x1, x1, &d) == HELLER_OK);
    CHECK(d >= 1);

    char* dec = nullptr;
    REQUIRE(heller_decompose(x1, 0, &dec) == HELLER_OK);
    json dj = json::parse(take(dec));
    CHECK(dj["kind"] == "decompose");
    CHECK(dj["labels"] == json{{"X1", 1}});

    heller_module_free(ox1);
    heller_module_free(x1);
    heller_module_free(x2);
    heller_algebra_free(a);
}

TEST_CASE("batch reports") {
    char* rep = nullptr;
    REQUIRE(heller_sthom_matrix("C3", 3, &rep) == HELLER_OK);
    json j = json::parse(take(rep));
    CHECK(j["schema"] == "heller-report-1");
    CHECK(j["H"]["labels"].size() == 7);

    REQUIRE(heller_right_adjoint("C3", 3, &rep) == HELLER_OK);
    j = json::parse(take(rep));
    CHECK(j["obstructed"] == true);

    REQUIRE(heller_left_adjoint("C7", 2, 6, 0, &rep) == HELLER_OK);
    j = json::parse(take(rep));
    CHECK(j["success"] == true);
    CHECK(j["rows"].size() == 5);

    REQUIRE(heller_verify_paper("C3", 3, 6, 0, &rep) == HELLER_OK);
    j = json::parse(take(rep));
    CHECK(j["match"] == true);

    CHECK(heller_verify_paper("D1", 3, 6, 0, &rep) == HELLER_USER_ERROR);
    CHECK(heller_verify_paper("A", 6, 6, 0, &rep) == HELLER_USER_ERROR);
    CHECK(heller_verify_paper("A", 2, 6, 0, nullptr) == HELLER_USER_ERROR);
}
