#include <doctest.h>

#include <stdexcept>

#include "vsqc/json_io.hpp"

using namespace vsqc;

TEST_CASE("matrix JSON carries dimensions, rows, tag and optional P") {
    const auto E = ExponentMatrix::from_rows({{0, 0}, {0, 1}, {0, 2}});
    const auto j = matrix_to_json(E, 7);
    CHECK(j["J"] == 3);
    CHECK(j["L"] == 2);
    CHECK(j["P"] == 7);
    CHECK(j["tag"] == "general");
    CHECK(j["rows"][2][1] == 2);

    const auto no_p = matrix_to_json(E);
    CHECK(no_p["P"].is_null());
}

TEST_CASE("matrix JSON round-trips and recomputes the tag") {
    const auto E = ExponentMatrix::from_rows({{0, 0, 0}, {0, 1, 3}, {0, -1, -3}});
    auto j = matrix_to_json(E, 55);
    j["tag"] = "general";  // stored tags are advisory
    const auto loaded = matrix_from_json(j);
    CHECK(loaded.matrix == E);
    CHECK(loaded.matrix.tag() == StructureTag::vs_odd);
    REQUIRE(loaded.P.has_value());
    CHECK(*loaded.P == 55);
}

TEST_CASE("matrix JSON validation") {
    CHECK_THROWS_AS(matrix_from_json(nlohmann::json{{"J", 2}}), std::invalid_argument);
    auto j = matrix_to_json(ExponentMatrix::from_rows({{1, 2}}));
    j["J"] = 5;
    CHECK_THROWS_AS(matrix_from_json(j), std::invalid_argument);
    j = matrix_to_json(ExponentMatrix::from_rows({{1, 2}}));
    j["L"] = 5;
    CHECK_THROWS_AS(matrix_from_json(j), std::invalid_argument);
}

TEST_CASE("mask JSON round-trip and validation") {
    Mask mask = Mask::all_ones(2, 3);
    mask.bits[4] = 0;
    const auto j = mask_to_json(mask);
    const auto back = mask_from_json(j);
    CHECK(back.rows == 2);
    CHECK(back.cols == 3);
    CHECK(back.bits == mask.bits);

    CHECK_THROWS_AS(mask_from_json(nlohmann::json{{"rows", {{0, 2}}}}), std::invalid_argument);
}

TEST_CASE("girth report JSON uses a number when exact and a bound otherwise") {
    GirthReport exact{8, true, 12, std::nullopt};
    CHECK(girth_to_json(exact)["girth"] == 8);
    GirthReport open{14, false, 12, std::nullopt};
    CHECK(girth_to_json(open)["girth"] == ">=14");

    CycleWitness w{4, {0, 1}, {0, 1}, 5, 0};
    exact.witness = w;
    const auto j = girth_to_json(exact);
    CHECK(j["witness"]["length"] == 4);
    CHECK(j["witness"]["P"] == 5);
}
