#include "moonshine/hecke.hpp"
#include "moonshine/modular.hpp"
#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

using namespace moonshine;
using namespace moonshine::hecke;

namespace {

// Brute evaluation of the double-coset sum for k*T_k f, working in
// exponents: f((a tau + b)/d) contributes c_n zeta_d^{bn} q^{an/d}, and
// the geometric b-sum is d when d | n and 0 otherwise. Iterates (a, d, n)
// literally instead of using the closed coefficient formula.
LaurentSeries brute_hecke_scaled(const LaurentSeries& f, int k, int out_order) {
    const int out_val = k * std::min(f.valuation(), 0);
    std::vector<Rat> c(static_cast<size_t>(out_order - out_val + 1));
    for (int a = 1; a <= k; ++a) {
        if (k % a != 0) continue;
        const int d = k / a;
        for (int n = f.valuation(); n <= f.stored_end(); ++n) {
            if (((n % d) + d) % d != 0) continue;  // b-sum kills this term
            const long long e = static_cast<long long>(a) * n / d;
            if (e < out_val || e > out_order) continue;
            c[static_cast<size_t>(e - out_val)] += Rat(d) * f.coefficient(n);
        }
    }
    return LaurentSeries(out_val, out_order, std::move(c));
}

} // namespace

TEST_CASE("T_1 is the identity") {
    const LaurentSeries J = modular::moonshine_J(20);
    CHECK(hecke_scaled(J, 1) == J);
    CHECK(hecke_op(J, 1) == J);
}

TEST_CASE("2 T_2 J principal and constant terms") {
    const LaurentSeries J = modular::moonshine_J(40);
    const LaurentSeries t2 = hecke_scaled(J, 2);
    CHECK(t2.coefficient(-2) == 1);
    CHECK(t2.coefficient(-1) == 0);
    CHECK(t2.coefficient(0) == 0);
    // coefficient of q^1 in 2 T_2 J: only (a,d) = (1,2) contributes, giving 2 a_2
    CHECK(t2.coefficient(1) == 2 * J.coefficient(2));
}

TEST_CASE("closed form matches the double-coset sum") {
    const LaurentSeries J = modular::moonshine_J(125);
    for (int k = 1; k <= 6; ++k) {
        const LaurentSeries closed = hecke_scaled_to_order(J, k, 20);
        const LaurentSeries brute = brute_hecke_scaled(J, k, 20);
        INFO("k = " << k);
        CHECK(closed == brute);
    }
    for (int i = 0; i < 20; ++i) {
        const LaurentSeries f = testing::random_series(-1, 60);
        for (int k = 1; k <= 5; ++k) {
            const LaurentSeries closed = hecke_scaled_to_order(f, k, 10);
            const LaurentSeries brute = brute_hecke_scaled(f, k, 10);
            INFO("random series, k = " << k);
            CHECK(closed == brute);
        }
    }
}

TEST_CASE("principal-part law for J") {
    const LaurentSeries J = modular::moonshine_J(150);
    for (int k = 1; k <= 12; ++k) {
        const LaurentSeries s = hecke_scaled(J, k);
        INFO("k = " << k);
        CHECK(s.coefficient(-k) == 1);
        for (int e = -k + 1; e <= 0; ++e) CHECK(s.coefficient(e) == 0);
    }
}

TEST_CASE("integrality of k T_k on integer input") {
    const LaurentSeries J = modular::moonshine_J(100);
    for (int k = 2; k <= 10; ++k) CHECK(hecke_scaled(J, k).has_integer_coefficients());
}

TEST_CASE("Hecke commutativity on coprime indices") {
    const LaurentSeries J = modular::moonshine_J(420);
    for (auto [m, n] : {std::pair{2, 3}, std::pair{2, 5}, std::pair{3, 4}}) {
        const LaurentSeries lhs = hecke_op(hecke_op(J, n), m).truncated(20);
        const LaurentSeries rhs = hecke_op(J, m * n).truncated(20);
        INFO("(m,n) = (" << m << "," << n << ")");
        CHECK(lhs == rhs);
        CHECK(lhs.order() >= 20);
        CHECK(rhs.order() >= 20);
    }
}

TEST_CASE("precision contract fails loudly") {
    const LaurentSeries J = modular::moonshine_J(10);
    CHECK_THROWS_AS(hecke_scaled_to_order(J, 3, 20), std::invalid_argument);
}

TEST_CASE("adams_on_series is the identity on rational coefficients") {
    const LaurentSeries J = modular::moonshine_J(15);
    CHECK(adams_on_series(J, 2) == J);
    CHECK(adams_on_series(LaurentSeries::zero(5), 5) == LaurentSeries::zero(5));
    CHECK(adams_on_series(modular::eisenstein(4, 10), 3) == modular::eisenstein(4, 10));
    CHECK_THROWS_AS(adams_on_series(J, 0), std::invalid_argument);
}
