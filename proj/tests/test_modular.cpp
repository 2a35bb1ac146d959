#include "moonshine/modular.hpp"

#include <catch_amalgamated.hpp>

using namespace moonshine;
using namespace moonshine::modular;

TEST_CASE("divisor sums") {
    CHECK(divisor_sigma(3, 1) == 1);
    CHECK(divisor_sigma(3, 2) == 9);       // 1 + 8
    CHECK(divisor_sigma(5, 2) == 33);      // 1 + 32
    CHECK(divisor_sigma(1, 12) == 28);     // 1+2+3+4+6+12
    CHECK(divisor_sigma(3, 6) == 1 + 8 + 27 + 216);
}

TEST_CASE("Eisenstein series") {
    const LaurentSeries e4 = eisenstein(4, 10);
    CHECK(e4.coefficient(0) == 1);
    CHECK(e4.coefficient(1) == 240);
    CHECK(e4.coefficient(2) == 240 * 9);

    const LaurentSeries e6 = eisenstein(6, 10);
    CHECK(e6.coefficient(0) == 1);
    CHECK(e6.coefficient(1) == -504);
    CHECK(e6.coefficient(2) == -16632);

    CHECK_THROWS_AS(eisenstein(8, 10), std::invalid_argument);
}

TEST_CASE("Delta: both constructions agree") {
    const LaurentSeries d1 = delta_eisenstein(50);
    const LaurentSeries d2 = delta_eta_product(50);
    CHECK(d1 == d2);
    CHECK(d1.valuation() == 1);
    CHECK(d1.coefficient(1) == 1);
    CHECK(d1.coefficient(2) == -24);
    CHECK(d1.coefficient(3) == 252);
    CHECK(d1.coefficient(4) == -1472);
    CHECK(d1.has_integer_coefficients());
}

TEST_CASE("j-invariant") {
    const LaurentSeries j = j_invariant(20);
    CHECK(j.valuation() == -1);
    CHECK(j.coefficient(-1) == 1);
    CHECK(j.coefficient(0) == 744);
    CHECK(j.coefficient(1) == 196884);
    CHECK(j.coefficient(2) == 21493760);
    CHECK(j.has_integer_coefficients());

    // independent route: j coefficient 1 from long division by Delta
    const LaurentSeries e4 = eisenstein(4, 22);
    const LaurentSeries num = mul(mul(e4, e4), e4);
    const LaurentSeries d = delta(22);
    // long division: r0 = num; subtract coefficient(v)*q^(v-1)*Delta at each step
    LaurentSeries rem = num;
    std::vector<Rat> quot;
    for (int e = -1; e <= 2; ++e) {
        const Rat c = rem.coefficient(e + 1) / d.coefficient(1);
        quot.push_back(c);
        rem = rem - (c * d.shifted(e));
    }
    CHECK(quot[0] == 1);
    CHECK(quot[1] == 744);
    CHECK(quot[2] == 196884);
    CHECK(quot[3] == 21493760);
}

TEST_CASE("Moonshine J") {
    const LaurentSeries J = moonshine_J(15);
    CHECK(J.coefficient(-1) == 1);
    CHECK(J.coefficient(0) == 0);
    CHECK(J.coefficient(1) == 196884);
    CHECK(J.coefficient(2) == 21493760);
    CHECK(J.coefficient(3) == 864299970);
    CHECK(J.has_integer_coefficients());
}

TEST_CASE("J*J constant term counts the cross terms twice") {
    const LaurentSeries J = moonshine_J(5);
    CHECK(mul(J, J).coefficient(0) == 2 * 196884);
}

TEST_CASE("inv(Delta) leading behavior") {
    const LaurentSeries di = inv(delta(20));
    CHECK(di.valuation() == -1);
    CHECK(di.coefficient(-1) == 1);
    CHECK(di.coefficient(0) == 24);
}
