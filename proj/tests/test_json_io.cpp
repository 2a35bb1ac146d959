#include "moonshine/json_io.hpp"
#include "moonshine/modular.hpp"
#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace moonshine;

TEST_CASE("series JSON shape") {
    const nlohmann::json j = series_to_json(modular::moonshine_J(3));
    CHECK(j.at("valuation") == -1);
    CHECK(j.at("order") == 3);
    REQUIRE(j.at("coeffs").size() == 5);
    CHECK(j.at("coeffs")[0] == nlohmann::json({"1", "1"}));
    CHECK(j.at("coeffs")[2][0] == "196884");
}

TEST_CASE("round trip preserves the series") {
    for (int i = 0; i < 30; ++i) {
        const LaurentSeries f = testing::random_series(-4, 12);
        const LaurentSeries g = series_from_json(series_to_json(f));
        CHECK(f == g);
        CHECK(f.valuation() == g.valuation());
        CHECK(f.order() == g.order());
    }
    const LaurentSeries z = LaurentSeries::zero(7);
    CHECK(series_from_json(series_to_json(z)).order() == 7);
}

TEST_CASE("big coefficients survive as decimal strings") {
    const LaurentSeries J = modular::moonshine_J(30);
    // a_30 has well over 64 bits
    CHECK(numerator(J.coefficient(30)) > Int("18446744073709551616"));  // 2^64
    CHECK(series_from_json(series_to_json(J)) == J);
}
