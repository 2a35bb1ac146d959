#ifndef MOONSHINE_LAURENT_SERIES_HPP
#define MOONSHINE_LAURENT_SERIES_HPP

#include "moonshine/rational.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace moonshine {

/**
 * Truncated Laurent series in q with exact rational coefficients.
 *
 * Coefficients are known for exponents valuation()..order() inclusive;
 * exponents below the valuation are exactly zero, exponents above the
 * truncation order are unknown. Storage covers only the exponents up to
 * the last nonzero coefficient; the rest of the window is an implicit
 * zero tail, so exactly-known sparse values (monomials, constants) stay
 * cheap at any truncation order. The canonical zero series has an empty
 * coefficient vector and valuation() == order() + 1, which keeps the
 * truncation bookkeeping below uniform.
 *
 * Every operation computes the tightest truncation order derivable from
 * its inputs; no coefficient is ever reported that is not exact.
 */
class LaurentSeries {
public:
    /// Zero series known to the given order.
    static LaurentSeries zero(int order) { return LaurentSeries(order + 1, order, {}); }

    /// c * q^exponent, known to the given order (order >= exponent).
    static LaurentSeries monomial(const Rat& c, int exponent, int order) {
        if (order < exponent) throw std::invalid_argument("monomial: order below exponent");
        return LaurentSeries(exponent, order, {c});
    }

    /// Constant series.
    static LaurentSeries constant(const Rat& c, int order) { return monomial(c, 0, order); }

    /// Series from a coefficient list starting at `valuation`. The list
    /// may be shorter than the window; missing entries are zero.
    LaurentSeries(int valuation, int order, std::vector<Rat> coeffs)
        : val_(valuation), order_(order), c_(std::move(coeffs)) {
        if (static_cast<long long>(c_.size()) > static_cast<long long>(order_) - val_ + 1)
            throw std::invalid_argument("coefficient count exceeds window");
        normalize();
    }

    int valuation() const { return val_; }
    int order() const { return order_; }
    bool is_zero() const { return c_.empty(); }

    /// Largest exponent with an explicitly stored (nonzero) coefficient;
    /// valuation() - 1 for the zero series.
    int stored_end() const { return val_ + static_cast<int>(c_.size()) - 1; }

    /// Exact coefficient of q^n. Below the valuation or beyond the
    /// stored tail (within the window) this is zero; beyond the
    /// truncation order it is unknown and throws.
    Rat coefficient(int n) const {
        if (n > order_) throw std::out_of_range("coefficient beyond truncation");
        if (n < val_ || n > stored_end()) return Rat(0);
        return c_[static_cast<size_t>(n - val_)];
    }

    /// Restrict the known window to min(order(), new_order).
    LaurentSeries truncated(int new_order) const {
        if (new_order >= order_) return *this;
        if (new_order < val_) return zero(new_order);
        std::vector<Rat> coeffs(c_.begin(),
                                c_.begin() + std::min(c_.size(), static_cast<size_t>(new_order - val_ + 1)));
        return LaurentSeries(val_, new_order, std::move(coeffs));
    }

    /// Multiply by q^k (exact, shifts the window).
    LaurentSeries shifted(int k) const { return LaurentSeries(val_ + k, order_ + k, c_); }

    bool has_integer_coefficients() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return is_integer(r); });
    }

    std::string str(const char* var = "q") const {
        if (is_zero()) return std::string("O(") + var + "^" + std::to_string(order_ + 1) + ")";
        std::ostringstream out;
        bool first = true;
        for (int e = val_; e <= stored_end(); ++e) {
            const Rat c = coefficient(e);
            if (c == 0) continue;
            if (!first) out << (c > 0 ? " + " : " - ");
            else if (c < 0) out << "-";
            first = false;
            const Rat a = boost::multiprecision::abs(c);
            if (a != 1 || e == 0) out << to_string(a);
            if (e != 0) {
                if (a != 1) out << "*";
                out << var;
                if (e != 1) out << "^" << e;
            }
        }
        out << " + O(" << var << "^" << (order_ + 1) << ")";
        return out.str();
    }

private:
    int val_;
    int order_;
    std::vector<Rat> c_;

    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
        size_t lead = 0;
        while (lead < c_.size() && c_[lead] == 0) ++lead;
        if (lead == c_.size()) {
            c_.clear();
            val_ = order_ + 1;
            return;
        }
        if (lead > 0) {
            c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
            val_ += static_cast<int>(lead);
        }
    }
};

inline LaurentSeries operator-(const LaurentSeries& f) {
    std::vector<Rat> coeffs;
    coeffs.reserve(static_cast<size_t>(f.stored_end() - f.valuation() + 1));
    for (int e = f.valuation(); e <= f.stored_end(); ++e) coeffs.push_back(-f.coefficient(e));
    return LaurentSeries(f.valuation(), f.order(), std::move(coeffs));
}

inline LaurentSeries add(const LaurentSeries& f, const LaurentSeries& g) {
    const int order = std::min(f.order(), g.order());
    const int val = std::min(f.valuation(), g.valuation());
    const int last = std::min(order, std::max(f.stored_end(), g.stored_end()));
    if (val > order || val > last) return LaurentSeries::zero(order);
    std::vector<Rat> coeffs;
    coeffs.reserve(static_cast<size_t>(last - val + 1));
    for (int e = val; e <= last; ++e) coeffs.push_back(f.coefficient(e) + g.coefficient(e));
    return LaurentSeries(val, order, std::move(coeffs));
}

inline LaurentSeries operator+(const LaurentSeries& f, const LaurentSeries& g) { return add(f, g); }
inline LaurentSeries operator-(const LaurentSeries& f, const LaurentSeries& g) { return add(f, -g); }

/// Cauchy product. Output order = min(val(f)+ord(g), val(g)+ord(f)):
/// the largest exponent whose convolution sum involves only known
/// coefficients of both factors.
inline LaurentSeries mul(const LaurentSeries& f, const LaurentSeries& g) {
    const int order = std::min(f.valuation() + g.order(), g.valuation() + f.order());
    if (f.is_zero() || g.is_zero()) return LaurentSeries::zero(order);
    const int val = f.valuation() + g.valuation();
    if (val > order) return LaurentSeries::zero(order);
    const int last = std::min(order, f.stored_end() + g.stored_end());
    if (last < val) return LaurentSeries::zero(order);
    std::vector<Rat> coeffs(static_cast<size_t>(last - val + 1));
    for (int i = f.valuation(); i <= f.stored_end(); ++i) {
        const Rat fi = f.coefficient(i);
        if (fi == 0) continue;
        const int jmax = std::min(g.stored_end(), last - i);
        for (int j = g.valuation(); j <= jmax; ++j) {
            const Rat gj = g.coefficient(j);
            if (gj == 0) continue;
            coeffs[static_cast<size_t>(i + j - val)] += fi * gj;
        }
    }
    return LaurentSeries(val, order, std::move(coeffs));
}

inline LaurentSeries operator*(const LaurentSeries& f, const LaurentSeries& g) { return mul(f, g); }

inline LaurentSeries operator*(const Rat& c, const LaurentSeries& f) {
    std::vector<Rat> coeffs;
    coeffs.reserve(static_cast<size_t>(f.stored_end() - f.valuation() + 1));
    for (int e = f.valuation(); e <= f.stored_end(); ++e) coeffs.push_back(c * f.coefficient(e));
    return LaurentSeries(f.valuation(), f.order(), std::move(coeffs));
}

/// Multiplicative inverse, to the same relative precision as the input.
inline LaurentSeries inv(const LaurentSeries& f) {
    if (f.is_zero()) throw std::invalid_argument("non-invertible series");
    const int v = f.valuation();
    if (f.stored_end() == v)  // monomial: exact inverse at any order
        return LaurentSeries::monomial(Rat(1) / f.coefficient(v), -v, f.order() - 2 * v);
    const int terms = f.order() - v + 1;  // relative precision
    const Rat lead = f.coefficient(v);
    std::vector<Rat> b(static_cast<size_t>(terms));
    b[0] = Rat(1) / lead;
    const int span = f.stored_end() - v;  // nonzero input tail length
    for (int i = 1; i < terms; ++i) {
        Rat acc = 0;
        for (int j = 1; j <= std::min(i, span); ++j)
            acc += f.coefficient(v + j) * b[static_cast<size_t>(i - j)];
        b[static_cast<size_t>(i)] = -acc / lead;
    }
    return LaurentSeries(-v, -v + terms - 1, std::move(b));
}

/// Formal exponential of a series with valuation >= 1.
/// Recurrence from (exp f)' = f' exp f.
inline LaurentSeries exp(const LaurentSeries& f) {
    if (f.is_zero()) return LaurentSeries::constant(1, std::max(f.order(), 0));
    if (f.valuation() < 1)
        throw std::invalid_argument("exp of non-positive-valuation series");
    const int order = f.order();
    std::vector<Rat> g(static_cast<size_t>(order + 1));
    g[0] = 1;
    for (int n = 1; n <= order; ++n) {
        Rat acc = 0;
        const int kmax = std::min(n, f.stored_end());
        for (int k = f.valuation(); k <= kmax; ++k)
            acc += Rat(k) * f.coefficient(k) * g[static_cast<size_t>(n - k)];
        g[static_cast<size_t>(n)] = acc / n;
    }
    return LaurentSeries(0, order, std::move(g));
}

/// Formal logarithm of a series with constant term 1.
inline LaurentSeries log(const LaurentSeries& f) {
    if (f.valuation() != 0 || f.coefficient(0) != 1)
        throw std::invalid_argument("log requires constant term 1");
    if (f.stored_end() == 0) return LaurentSeries::zero(f.order());  // exactly 1
    const int order = f.order();
    std::vector<Rat> L(static_cast<size_t>(order + 1));
    // n*L_n = n*f_n - sum_{j=1}^{n-1} f_j (n-j) L_{n-j}, from f*L' = f'.
    for (int n = 1; n <= order; ++n) {
        Rat acc = Rat(n) * (n <= f.stored_end() ? f.coefficient(n) : Rat(0));
        const int jmax = std::min(n - 1, f.stored_end());
        for (int j = 1; j <= jmax; ++j)
            acc -= f.coefficient(j) * Rat(n - j) * L[static_cast<size_t>(n - j)];
        L[static_cast<size_t>(n)] = acc / n;
    }
    return LaurentSeries(0, order, std::move(L));
}

/// q -> q^m, applied exponent-wise.
inline LaurentSeries substitute_power(const LaurentSeries& f, int m) {
    if (m < 1) throw std::invalid_argument("substitute_power requires m >= 1");
    if (m == 1) return f;
    const int order = m * f.order();
    if (f.is_zero()) return LaurentSeries::zero(order);
    const int val = m * f.valuation();
    std::vector<Rat> coeffs(static_cast<size_t>(m * f.stored_end() - val + 1));
    for (int e = f.valuation(); e <= f.stored_end(); ++e)
        coeffs[static_cast<size_t>(m * e - val)] = f.coefficient(e);
    return LaurentSeries(val, order, std::move(coeffs));
}

/// Equality up to the minimum common truncation order.
inline bool operator==(const LaurentSeries& f, const LaurentSeries& g) {
    const int order = std::min(f.order(), g.order());
    const int val = std::min(f.valuation(), g.valuation());
    const int last = std::min(order, std::max(f.stored_end(), g.stored_end()));
    for (int e = val; e <= last; ++e)
        if (f.coefficient(e) != g.coefficient(e)) return false;
    return true;
}
inline bool operator!=(const LaurentSeries& f, const LaurentSeries& g) { return !(f == g); }

} // namespace moonshine

#endif
