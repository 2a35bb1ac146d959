#ifndef MOONSHINE_GANTER_HPP
#define MOONSHINE_GANTER_HPP

#include "moonshine/bi_series.hpp"
#include "moonshine/faber.hpp"
#include "moonshine/hecke.hpp"

#include <stdexcept>
#include <vector>

namespace moonshine {
namespace ganter {

/// Input q-precision needed so that every mixed coefficient (t^m, q^n)
/// with m <= t_order, n <= q_order of the Hecke exponential is exact.
/// The t^m coefficient involves products of T_k-images whose inner
/// windows shrink by the principal parts; t_order*(q_order+t_order+1)
/// covers the worst split.
inline int required_precision(int t_order, int q_order) {
    return t_order * (q_order + t_order + 1);
}

/// Hecke-built total symmetric power: S_t(x) = exp(sum_{k>=1} T_k(x) t^k / k)
/// with T_k the scaled (denominator-free) Hecke transform k*T_k^cl, so the
/// t^k term of the exponent is the classical T_k^cl(x). This is the
/// normalization under which T_1 is the identity and the replicability
/// theorem's t-linear coefficient matches.
inline BiSeries ganter_S(const LaurentSeries& x, int t_order, int q_order) {
    if (x.valuation() < -1) throw std::invalid_argument("ganter_S requires valuation >= -1");
    if (!x.is_zero() && x.order() < t_order * q_order)
        throw std::invalid_argument("precision too low for ganter_S");
    std::vector<LaurentSeries> arg;
    arg.reserve(static_cast<size_t>(t_order + 1));
    arg.push_back(LaurentSeries::zero(kExactOrder));
    for (int k = 1; k <= t_order; ++k)
        arg.push_back(hecke::hecke_op(x, k));
    return exp(BiSeries(std::move(arg)));
}

/// Hecke-built total exterior power: Lambda_{-t}(x) = S_t(x)^{-1}.
inline BiSeries ganter_Lambda(const LaurentSeries& x, int t_order, int q_order) {
    return inv(ganter_S(x, t_order, q_order));
}

/// Per-k result of the original replicability condition
/// P_{k,f}(f(q)) = k T_k f, with both sides computed by independent
/// routes (Faber triangular elimination vs. Hecke closed form).
struct ReplicabilityReport {
    int q_order = 0;
    std::vector<int> k_values;
    std::vector<bool> holds;

    bool all_hold() const {
        for (bool b : holds)
            if (!b) return false;
        return true;
    }
};

inline ReplicabilityReport replicability_check_faber_form(const LaurentSeries& f,
                                                          int k_max, int q_order) {
    if (k_max < 1) throw std::invalid_argument("k_max must be >= 1");
    if (f.order() < k_max * q_order)
        throw std::invalid_argument("precision too low for replicability check");
    ReplicabilityReport report;
    report.q_order = q_order;
    for (int k = 1; k <= k_max; ++k) {
        // The Faber route needs f only to order k-1 for the polynomial
        // and to q_order + k for the evaluation window.
        const DensePolynomial P = faber::faber_poly(f.truncated(k + 1), k);
        const LaurentSeries lhs = P.evaluate(f.truncated(q_order + k)).truncated(q_order);
        const LaurentSeries rhs = hecke::hecke_scaled_to_order(f, k, q_order);
        report.k_values.push_back(k);
        report.holds.push_back(lhs == rhs && (lhs - rhs).is_zero());
    }
    return report;
}

struct GridMismatch {
    bool found = false;
    int t_exp = 0;
    int q_exp = 0;
};

/// Theorem-form replicability: t(f(t) - f(q)) = Lambda_{-t}(f(q)),
/// compared coefficientwise on the full grid t^m (m <= t_order),
/// q^n (n <= q_order). Returns the first mismatching cell, if any.
inline GridMismatch replicability_check_theorem_form(const LaurentSeries& f,
                                                     int t_order, int q_order) {
    if (f.valuation() != -1 || f.coefficient(-1) != 1)
        throw std::invalid_argument("series not normalized");
    if (f.order() < required_precision(t_order, q_order))
        throw std::invalid_argument("precision too low for theorem-form check");

    // Left side: t*f(t) contributes 1 at t^0 and f's coefficient a_{m-1}
    // at t^m (pure t-series); -t*f(q) contributes -f(q) at t^1.
    std::vector<LaurentSeries> lhs;
    lhs.reserve(static_cast<size_t>(t_order + 1));
    lhs.push_back(LaurentSeries::constant(1, kExactOrder));
    if (t_order >= 1)
        lhs.push_back(LaurentSeries::constant(f.coefficient(0), kExactOrder) - f);
    for (int m = 2; m <= t_order; ++m)
        lhs.push_back(LaurentSeries::constant(f.coefficient(m - 1), kExactOrder));

    const BiSeries rhs = ganter_Lambda(f, t_order, q_order);

    GridMismatch mismatch;
    for (int m = 0; m <= t_order; ++m) {
        const LaurentSeries& L = lhs[static_cast<size_t>(m)];
        const LaurentSeries& R = rhs.t_coefficient(m);
        const int low = std::min(L.valuation(), R.valuation());
        for (int n = low; n <= q_order; ++n) {
            if (L.coefficient(n) != R.coefficient(n)) {
                mismatch.found = true;
                mismatch.t_exp = m;
                mismatch.q_exp = n;
                return mismatch;
            }
        }
    }
    return mismatch;
}

struct SymmetryReport {
    bool symmetric = true;
    bool pole_free = true;
    bool integral = true;
    GridMismatch first_failure;

    bool holds() const { return symmetric && pole_free && integral; }
};

/// The two-variable identity q Lambda_{-t}(f(q)) = -t Lambda_{-q}(f(t)),
/// verified on the grid t^m, q^n with m <= t_order, n <= q_order, plus
/// pole-freeness and integrality of every mixed coefficient.
///
/// Both sides are the same computation with the variable roles swapped,
/// so with M = Lambda_{-t}(f(q)) the identity reads
/// M(t^m, q^{n-1}) = -M(t^n, q^{m-1}) for all grid cells.
inline SymmetryReport symmetry_check(const LaurentSeries& f, int t_order, int q_order) {
    const int T = std::max(t_order, q_order);
    if (f.order() < required_precision(T, T))
        throw std::invalid_argument("precision too low for symmetry check");
    const BiSeries M = ganter_Lambda(f, T, T);

    SymmetryReport report;
    // Pole-freeness: every t^m coefficient of q*Lambda_{-t}(f(q)) lies in
    // Z[[q]], i.e. M's inner valuations are >= -1 after cancellation.
    for (int m = 0; m <= T && report.pole_free; ++m) {
        const LaurentSeries& c = M.t_coefficient(m);
        for (int n = c.valuation(); n <= -2; ++n) {
            if (c.coefficient(n) != 0) {
                report.pole_free = false;
                report.first_failure = {true, m, n + 1};
                break;
            }
        }
    }
    for (int m = 0; m <= t_order; ++m) {
        for (int n = 0; n <= q_order; ++n) {
            const Rat lhs = M.coefficient(m, n - 1);
            const Rat rhs = -M.coefficient(n, m - 1);
            if (lhs != rhs && report.symmetric) {
                report.symmetric = false;
                report.first_failure = {true, m, n};
            }
            if (!is_integer(lhs) && report.integral) {
                report.integral = false;
                report.first_failure = {true, m, n};
            }
        }
    }
    return report;
}

} // namespace ganter
} // namespace moonshine

#endif
