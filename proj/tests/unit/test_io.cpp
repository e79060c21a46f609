#include "doctest.h"
#include "redn/io.hpp"
#include "redn/orbits.hpp"

using namespace redn;

namespace {

std::string where_of(const Json& j) {
    try {
        subspace_from_json(j);
    } catch (const InputError& e) {
        return e.where;
    }
    return "";
}

}  // namespace

TEST_CASE("subspace round trip") {
    for (OrbitLabel l : all_labels()) {
        LieSubspace a = representative(l);
        Json j = Json::parse(to_json(a).dump());
        LieSubspace b = subspace_from_json(j);
        REQUIRE(b.dim() == a.dim());
        for (int i = 0; i < a.dim(); ++i) CHECK(b.basis()[i] == a.basis()[i]);
        CHECK(classify_orbit(b) == l);
    }
    CHECK(rational_from_json("-3/6", "$") == frac(-1, 2));
    CHECK(rational_from_json(7, "$") == 7);
    CHECK(to_json(frac(2, -4)) == "-1/2");
}

TEST_CASE("malformed input is located") {
    Json good = to_json(representative(OrbitLabel::O6));
    Json j = good;
    j["basis"][1][2][1] = "1/0";
    CHECK(where_of(j) == "$.basis[1][2][1]");
    j = good;
    j["basis"][2][3] = Json::array({"0", "0"});
    CHECK(where_of(j) == "$.basis[2][3]");
    j = good;
    j["n"] = 5;
    CHECK(where_of(j).rfind("$.basis[0]", 0) == 0);
    j = good;
    j["basis"][2] = j["basis"][0];
    CHECK(where_of(j) == "$.basis");
    j = good;
    j.erase("n");
    CHECK(where_of(j) == "$");   // missing keys are reported at the parent
    CHECK_THROWS_AS(element_from_json(Json::array({Json::array({"1"})}), 4, "$"), InputError);
}
