#ifndef MOONSHINE_BI_SERIES_HPP
#define MOONSHINE_BI_SERIES_HPP

#include "moonshine/laurent_series.hpp"

#include <stdexcept>
#include <vector>

namespace moonshine {

/// Truncation order used for exact literal constants introduced by an
/// algorithm (the unit series is known at every order).
constexpr int kExactOrder = 1 << 20;

/**
 * Truncated power series in an outer variable t whose coefficients are
 * LaurentSeries in an inner variable q. The outer variable is a genuine
 * power series variable (exponents 0..t_order); the inner coefficients
 * carry their own truncation windows, propagated by the LaurentSeries
 * min-order rules.
 */
class BiSeries {
public:
    static BiSeries zero(int t_order, int q_order) {
        return BiSeries(std::vector<LaurentSeries>(
            static_cast<size_t>(t_order + 1), LaurentSeries::zero(q_order)));
    }

    static BiSeries one(int t_order) {
        std::vector<LaurentSeries> c(static_cast<size_t>(t_order + 1),
                                     LaurentSeries::zero(kExactOrder));
        c[0] = LaurentSeries::constant(1, kExactOrder);
        return BiSeries(std::move(c));
    }

    /// A series in the inner variable only (constant in t).
    static BiSeries from_inner(const LaurentSeries& f, int t_order) {
        std::vector<LaurentSeries> c(static_cast<size_t>(t_order + 1),
                                     LaurentSeries::zero(kExactOrder));
        c[0] = f;
        return BiSeries(std::move(c));
    }

    /// The given inner coefficients, one per power t^0..t^T.
    explicit BiSeries(std::vector<LaurentSeries> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("BiSeries needs at least the t^0 coefficient");
    }

    int t_order() const { return static_cast<int>(c_.size()) - 1; }

    const LaurentSeries& t_coefficient(int n) const {
        if (n < 0 || n > t_order()) throw std::out_of_range("coefficient beyond t truncation");
        return c_[static_cast<size_t>(n)];
    }

    /// Exact mixed coefficient of t^m q^n.
    Rat coefficient(int m, int n) const { return t_coefficient(m).coefficient(n); }

    BiSeries truncated(int t_order) const {
        if (t_order >= this->t_order()) return *this;
        return BiSeries(std::vector<LaurentSeries>(c_.begin(), c_.begin() + t_order + 1));
    }

private:
    std::vector<LaurentSeries> c_;
};

inline BiSeries operator-(const BiSeries& f) {
    std::vector<LaurentSeries> c;
    c.reserve(static_cast<size_t>(f.t_order() + 1));
    for (int n = 0; n <= f.t_order(); ++n) c.push_back(-f.t_coefficient(n));
    return BiSeries(std::move(c));
}

inline BiSeries add(const BiSeries& f, const BiSeries& g) {
    const int T = std::min(f.t_order(), g.t_order());
    std::vector<LaurentSeries> c;
    c.reserve(static_cast<size_t>(T + 1));
    for (int n = 0; n <= T; ++n) c.push_back(add(f.t_coefficient(n), g.t_coefficient(n)));
    return BiSeries(std::move(c));
}

inline BiSeries operator+(const BiSeries& f, const BiSeries& g) { return add(f, g); }
inline BiSeries operator-(const BiSeries& f, const BiSeries& g) { return add(f, -g); }

inline BiSeries mul(const BiSeries& f, const BiSeries& g) {
    const int T = std::min(f.t_order(), g.t_order());
    std::vector<LaurentSeries> c;
    c.reserve(static_cast<size_t>(T + 1));
    for (int n = 0; n <= T; ++n) {
        LaurentSeries acc = mul(f.t_coefficient(0), g.t_coefficient(n));
        for (int k = 1; k <= n; ++k)
            acc = add(acc, mul(f.t_coefficient(k), g.t_coefficient(n - k)));
        c.push_back(std::move(acc));
    }
    return BiSeries(std::move(c));
}

inline BiSeries operator*(const BiSeries& f, const BiSeries& g) { return mul(f, g); }

/// Inverse; requires the t^0 coefficient to be an invertible inner series.
inline BiSeries inv(const BiSeries& f) {
    const int T = f.t_order();
    const LaurentSeries lead_inv = inv(f.t_coefficient(0));
    std::vector<LaurentSeries> b;
    b.reserve(static_cast<size_t>(T + 1));
    b.push_back(lead_inv);
    for (int n = 1; n <= T; ++n) {
        LaurentSeries acc = mul(f.t_coefficient(1), b[static_cast<size_t>(n - 1)]);
        for (int j = 2; j <= n; ++j)
            acc = add(acc, mul(f.t_coefficient(j), b[static_cast<size_t>(n - j)]));
        b.push_back(-mul(lead_inv, acc));
    }
    return BiSeries(std::move(b));
}

/// Formal exponential; requires the t^0 coefficient to vanish.
inline BiSeries exp(const BiSeries& f) {
    if (!f.t_coefficient(0).is_zero())
        throw std::invalid_argument("exp of BiSeries with nonzero t^0 coefficient");
    const int T = f.t_order();
    std::vector<LaurentSeries> g;
    g.reserve(static_cast<size_t>(T + 1));
    g.push_back(LaurentSeries::constant(1, kExactOrder));
    for (int n = 1; n <= T; ++n) {
        LaurentSeries acc = Rat(1) * mul(f.t_coefficient(1), g[static_cast<size_t>(n - 1)]);
        for (int k = 2; k <= n; ++k)
            acc = add(acc, Rat(k) * mul(f.t_coefficient(k), g[static_cast<size_t>(n - k)]));
        g.push_back(Rat(1, n) * acc);
    }
    return BiSeries(std::move(g));
}

/// Formal logarithm; requires the t^0 coefficient to be the unit series.
inline BiSeries log(const BiSeries& f) {
    const LaurentSeries& f0 = f.t_coefficient(0);
    if (f0.valuation() != 0 || f0.coefficient(0) != 1 ||
        f0 != LaurentSeries::constant(1, f0.order()))
        throw std::invalid_argument("log of BiSeries with t^0 coefficient != 1");
    const int T = f.t_order();
    std::vector<LaurentSeries> L;
    L.reserve(static_cast<size_t>(T + 1));
    L.push_back(LaurentSeries::zero(kExactOrder));
    for (int n = 1; n <= T; ++n) {
        LaurentSeries acc = Rat(n) * f.t_coefficient(n);
        for (int j = 1; j < n; ++j)
            acc = add(acc, -(Rat(n - j) * mul(f.t_coefficient(j), L[static_cast<size_t>(n - j)])));
        L.push_back(Rat(1, n) * acc);
    }
    return BiSeries(std::move(L));
}

inline bool operator==(const BiSeries& f, const BiSeries& g) {
    const int T = std::min(f.t_order(), g.t_order());
    for (int n = 0; n <= T; ++n)
        if (f.t_coefficient(n) != g.t_coefficient(n)) return false;
    return true;
}
inline bool operator!=(const BiSeries& f, const BiSeries& g) { return !(f == g); }

} // namespace moonshine

#endif
