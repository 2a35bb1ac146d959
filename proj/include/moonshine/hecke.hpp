#ifndef MOONSHINE_HECKE_HPP
#define MOONSHINE_HECKE_HPP

#include "moonshine/laurent_series.hpp"

#include <numeric>
#include <stdexcept>

namespace moonshine {
namespace hecke {

/// Adams operation psi^a applied to the coefficients of f. On the
/// rational coefficient ring every psi^a is the identity ring map; this
/// exists as a named seam for lambda-ring-valued coefficient rings.
inline LaurentSeries adams_on_series(const LaurentSeries& f, int a) {
    if (a < 1) throw std::invalid_argument("adams_on_series requires a >= 1");
    return f;
}

/// k * T_k f, the denominator-free scaled Hecke transform.
///
/// Coefficient of q^M is sum over a | gcd(k, M), a >= 1 of (k/a) * c_{kM/a^2},
/// with gcd(k, 0) = k. This is the exact evaluation of the weight-zero
/// double-coset sum: averaging over 0 <= b < d kills coefficients whose
/// index d does not divide and multiplies survivors by d.
inline LaurentSeries hecke_scaled(const LaurentSeries& f, int k) {
    if (k < 1) throw std::invalid_argument("hecke requires k >= 1");
    if (f.is_zero()) return LaurentSeries::zero(f.order() >= 0 ? f.order() / k : f.order());
    // Output order: every index kM/a^2 <= kM must be known, so M <= ord(f)/k.
    const int out_order = (f.order() >= 0) ? f.order() / k
                                           : -((-f.order() + k - 1) / k);
    const int out_val = (f.valuation() < 0) ? k * f.valuation() : f.valuation() / k;
    if (out_val > out_order) throw std::invalid_argument("precision too low for T_k");
    std::vector<Rat> c(static_cast<size_t>(out_order - out_val + 1));
    for (int M = out_val; M <= out_order; ++M) {
        const int g = (M == 0) ? k : std::gcd(k, std::abs(M));
        Rat acc = 0;
        for (int a = 1; a <= g; ++a) {
            if (g % a != 0) continue;
            const long long idx = static_cast<long long>(k) * M / (static_cast<long long>(a) * a);
            if (idx > f.order()) throw std::invalid_argument("precision too low for T_k");
            if (idx < f.valuation()) continue;
            acc += Rat(k / a) * f.coefficient(static_cast<int>(idx));
        }
        c[static_cast<size_t>(M - out_val)] = std::move(acc);
    }
    return LaurentSeries(out_val, out_order, std::move(c));
}

/// T_k f itself (may carry denominators dividing k).
inline LaurentSeries hecke_op(const LaurentSeries& f, int k) {
    return Rat(1, k) * hecke_scaled(f, k);
}

/// k * T_k f with the output window guaranteed to reach `out_order`;
/// fails loudly when f is not known far enough.
inline LaurentSeries hecke_scaled_to_order(const LaurentSeries& f, int k, int out_order) {
    if (f.order() < k * out_order) throw std::invalid_argument("precision too low for T_k");
    return hecke_scaled(f, k).truncated(out_order);
}

} // namespace hecke
} // namespace moonshine

#endif
