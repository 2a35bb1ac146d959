#include "moonshine/bundles.hpp"
#include "test_helpers.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace moonshine;
using namespace moonshine::bundles;

namespace {

VirtualBundle random_bundle(int max_rank, int alphabet = 3, int max_exp = 2) {
    std::uniform_int_distribution<int> rank_dist(0, max_rank);
    std::uniform_int_distribution<int> exp_dist(0, max_exp);
    VirtualBundle V;
    const int r = rank_dist(testing::rng());
    for (int i = 0; i < r; ++i) {
        Monomial m(static_cast<size_t>(alphabet));
        for (int& e : m) e = exp_dist(testing::rng());
        V.eigenvalues.push_back(std::move(m));
    }
    return V;
}

TSeries one_series(int t_order) { return TSeries(t_order, MonomialPoly(Rat(1))); }

} // namespace

TEST_CASE("lambda_t basics") {
    CHECK(lambda_t(VirtualBundle{}, 4) == one_series(4));

    // eigenvalues {x, y}: 1 + (x+y) t + xy t^2
    VirtualBundle V{{Monomial{1}, Monomial{0, 1}}};
    const TSeries L = lambda_t(V, 4);
    CHECK(L[0] == MonomialPoly(Rat(1)));
    CHECK(L[1] == MonomialPoly::monomial({1}) + MonomialPoly::monomial({0, 1}));
    CHECK(L[2] == MonomialPoly::monomial({1, 1}));
    CHECK(L[3].is_zero());
    CHECK(L[4].is_zero());
}

TEST_CASE("symmetric_t basics") {
    CHECK(symmetric_t(VirtualBundle{}, 4) == one_series(4));

    VirtualBundle V{{Monomial{1}}};  // single eigenvalue x: geometric
    const TSeries S = symmetric_t(V, 4);
    for (int k = 0; k <= 4; ++k) CHECK(S[k] == MonomialPoly::monomial({k}));
}

TEST_CASE("adams_psi basics") {
    VirtualBundle V{{Monomial{1}, Monomial{0, 1}}};
    CHECK(adams_psi(V, 1) == MonomialPoly::monomial({1}) + MonomialPoly::monomial({0, 1}));
    CHECK(adams_psi(V, 2) == MonomialPoly::monomial({2}) + MonomialPoly::monomial({0, 2}));
    CHECK_THROWS_AS(adams_psi(V, 0), std::invalid_argument);
}

TEST_CASE("lambda-ring identities, randomized") {
    const int T = 8;
    for (int i = 0; i < 100; ++i) {
        const VirtualBundle V = random_bundle(4);
        const VirtualBundle W = random_bundle(4);

        // Lambda_t(V + W) = Lambda_t(V) Lambda_t(W)
        CHECK(lambda_t(V.direct_sum(W), T) == lambda_t(V, T) * lambda_t(W, T));

        // Lambda_{-t}(V) S_t(V) = 1
        CHECK(lambda_t(V, T).negated_variable() * symmetric_t(V, T) == one_series(T));

        // S_t(V) = exp(sum psi^k(V) t^k / k)
        std::vector<MonomialPoly> arg(static_cast<size_t>(T + 1));
        for (int k = 1; k <= T; ++k) arg[static_cast<size_t>(k)] = Rat(1, k) * adams_psi(V, k);
        CHECK(TSeries(std::move(arg)).exponential() == symmetric_t(V, T));
    }
}

TEST_CASE("Newton's identities on e, h, p") {
    for (int i = 0; i < 50; ++i) {
        const VirtualBundle V = random_bundle(4);
        for (int k = 1; k <= 8; ++k) {
            // k e_k = sum_{i=1}^{k} (-1)^{i-1} e_{k-i} p_i
            MonomialPoly rhs;
            for (int j = 1; j <= k; ++j) {
                const MonomialPoly term = elementary(V, k - j) * adams_psi(V, j);
                rhs += (j % 2 == 1) ? term : -term;
            }
            CHECK(Rat(k) * elementary(V, k) == rhs);
        }
    }
}
