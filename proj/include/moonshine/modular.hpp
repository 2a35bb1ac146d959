#ifndef MOONSHINE_MODULAR_HPP
#define MOONSHINE_MODULAR_HPP

#include "moonshine/laurent_series.hpp"

#include <stdexcept>
#include <vector>

namespace moonshine {
namespace modular {

/// sigma_m(n) = sum of d^m over divisors d of n, by direct enumeration.
inline Int divisor_sigma(int m, int n) {
    if (n < 1) throw std::invalid_argument("divisor_sigma requires n >= 1");
    Int acc = 0;
    for (int d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        Int p = boost::multiprecision::pow(Int(d), static_cast<unsigned>(m));
        acc += p;
        const int e = n / d;
        if (e != d) acc += boost::multiprecision::pow(Int(e), static_cast<unsigned>(m));
    }
    return acc;
}

/// Normalized Eisenstein series: E4 = 1 + 240*sum sigma_3(n) q^n,
/// E6 = 1 - 504*sum sigma_5(n) q^n.
inline LaurentSeries eisenstein(int k, int order) {
    if (k != 4 && k != 6) throw std::invalid_argument("eisenstein: only k in {4,6}");
    if (order < 0) throw std::invalid_argument("eisenstein: order must be >= 0");
    const int m = k - 1;
    const Rat scale = (k == 4) ? Rat(240) : Rat(-504);
    std::vector<Rat> c(static_cast<size_t>(order + 1));
    c[0] = 1;
    for (int n = 1; n <= order; ++n) c[static_cast<size_t>(n)] = scale * Rat(divisor_sigma(m, n));
    return LaurentSeries(0, order, std::move(c));
}

/// Delta as the eta product q * prod_{n>=1} (1 - q^n)^24.
inline LaurentSeries delta_eta_product(int order) {
    if (order < 1) throw std::invalid_argument("delta: order must be >= 1");
    LaurentSeries prod = LaurentSeries::constant(1, order - 1);
    for (int n = 1; n <= order - 1; ++n) {
        // (1 - q^n)^24 contributes nothing beyond its first order-1 terms
        std::vector<Rat> f(static_cast<size_t>(order), Rat(0));
        f[0] = 1;
        for (int i = 1; i * n < order; ++i)
            f[static_cast<size_t>(i * n)] = Rat(((i % 2) ? -1 : 1) * binomial(24, static_cast<unsigned long>(i)));
        prod = mul(prod, LaurentSeries(0, order - 1, std::move(f)));
    }
    return prod.shifted(1);
}

/// Delta = (E4^3 - E6^2) / 1728; asserts the division is exact.
inline LaurentSeries delta_eisenstein(int order) {
    if (order < 1) throw std::invalid_argument("delta: order must be >= 1");
    const LaurentSeries e4 = eisenstein(4, order);
    const LaurentSeries e6 = eisenstein(6, order);
    const LaurentSeries num = mul(mul(e4, e4), e4) - mul(e6, e6);
    std::vector<Rat> c;
    c.reserve(static_cast<size_t>(order));
    for (int n = 1; n <= order; ++n) {
        Rat q = num.coefficient(n) / 1728;
        if (!is_integer(q)) throw std::logic_error("delta: division by 1728 left a remainder");
        c.push_back(std::move(q));
    }
    if (num.valuation() < 1) throw std::logic_error("delta: numerator has terms below q^1");
    return LaurentSeries(1, order, std::move(c));
}

inline LaurentSeries delta(int order) { return delta_eisenstein(order); }

/// j = E4^3 / Delta, valuation -1, integer coefficients.
inline LaurentSeries j_invariant(int order) {
    if (order < -1) throw std::invalid_argument("j_invariant: order must be >= -1");
    const int work = order + 2;
    const LaurentSeries e4 = eisenstein(4, work);
    const LaurentSeries e4cubed = mul(mul(e4, e4), e4);
    const LaurentSeries j = mul(e4cubed, inv(delta(work)));
    return j.truncated(order);
}

/// J = j - 744, the Moonshine function; constant term 0.
inline LaurentSeries moonshine_J(int order) {
    return j_invariant(order) - LaurentSeries::constant(744, order);
}

} // namespace modular
} // namespace moonshine

#endif
