#include <doctest.h>

#include <mwplet.h>

#include <json.hpp>

#include <string>

using nlohmann::json;

namespace {

struct Str {
    char* s = nullptr;
    ~Str() { mwp_string_free(s); }
};

} // namespace

TEST_CASE("default model fibers through the C surface") {
    mwp_model* m = nullptr;
    REQUIRE(mwp_model_default(&m) == MWP_OK);
    Str js;
    REQUIRE(mwp_model_fibers_json(m, &js.s) == MWP_OK);
    json fibers = json::parse(js.s);
    int i2 = 0;
    for (const auto& f : fibers)
        if (f["type"] == "I2") ++i2;
    CHECK(i2 == 5);
    mwp_model_free(m);
}

TEST_CASE("group law and height through the C surface") {
    mwp_model* m = nullptr;
    REQUIRE(mwp_model_default(&m) == MWP_OK);
    mwp_section* p = nullptr;
    REQUIRE(mwp_section_parse(m, "sL2", &p) == MWP_OK);
    mwp_section* d = nullptr;
    REQUIRE(mwp_section_group(m, "dbl", p, nullptr, 2, &d) == MWP_OK);
    Str js;
    REQUIRE(mwp_section_json(d, &js.s) == MWP_OK);
    json sec = json::parse(js.s);
    CHECK(sec["x"] == "1/10*t^2 - 2");
    Str hj;
    REQUIRE(mwp_height_json(m, p, p, &hj.s) == MWP_OK);
    json h = json::parse(hj.s);
    CHECK(h["value"] == "1/2");
    mwp_section_free(d);
    mwp_section_free(p);
    mwp_model_free(m);
}

TEST_CASE("custom curve via factored text") {
    mwp_model* m = nullptr;
    REQUIRE(mwp_model_from_factored("(x)*(x^2-t^2-1)", &m) == MWP_OK);
    mwp_section* s = nullptr;
    REQUIRE(mwp_section_parse(m, "(0, 0)", &s) == MWP_OK);
    mwp_section_free(s);
    mwp_model_free(m);
    CHECK(mwp_model_from_factored("(x", &m) == MWP_ERR_PARSE);
    CHECK(std::string(mwp_last_error()).size() > 0);
}

TEST_CASE("bisection, implicitize, young and arrange through the C surface") {
    Str bj;
    REQUIRE(mwp_bisection_json(1, "1", &bj.s) == MWP_OK);
    json b = json::parse(bj.s);
    CHECK(b["image_is_family_image"] == true);
    Str conic;
    REQUIRE(mwp_implicitize("1/2*t^2-2", &conic.s) == MWP_OK);
    CHECK(std::string(conic.s) == "T^2 - 2*X*Z - 4*Z^2");
    long y = 0;
    REQUIRE(mwp_young_count(6, &y) == MWP_OK);
    CHECK(y == 7);
    CHECK(mwp_young_count(0, &y) == MWP_ERR_DOMAIN);
    Str aj;
    REQUIRE(mwp_arrange_json(2, 1, 1, 0, "weak", &aj.s) == MWP_OK);
    json arr = json::parse(aj.s);
    CHECK(arr["members"].size() == 2);
}

TEST_CASE("section validation errors surface as domain errors") {
    mwp_model* m = nullptr;
    REQUIRE(mwp_model_default(&m) == MWP_OK);
    mwp_section* s = nullptr;
    CHECK(mwp_section_parse(m, "(t, t)", &s) == MWP_ERR_DOMAIN);
    CHECK(mwp_section_parse(m, "(t^2+2, 0)", &s) == MWP_ERR_DOMAIN);
    mwp_model_free(m);
}
