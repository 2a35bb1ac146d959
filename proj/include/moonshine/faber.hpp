#ifndef MOONSHINE_FABER_HPP
#define MOONSHINE_FABER_HPP

#include "moonshine/bi_series.hpp"
#include "moonshine/laurent_series.hpp"

#include <stdexcept>
#include <vector>

namespace moonshine {

/// Dense univariate polynomial with exact rational coefficients,
/// stored low degree first.
class DensePolynomial {
public:
    DensePolynomial() : c_(1, Rat(0)) {}
    explicit DensePolynomial(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) c_.push_back(Rat(0));
        while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }

    Rat coefficient(int i) const {
        if (i < 0 || i > degree()) return Rat(0);
        return c_[static_cast<size_t>(i)];
    }

    const std::vector<Rat>& coefficients() const { return c_; }

    /// Horner evaluation at a Laurent series argument.
    LaurentSeries evaluate(const LaurentSeries& x) const {
        LaurentSeries acc = LaurentSeries::constant(c_.back(), kExactOrder);
        for (int i = degree() - 1; i >= 0; --i)
            acc = mul(acc, x) + LaurentSeries::constant(c_[static_cast<size_t>(i)], kExactOrder);
        return acc;
    }

    Rat evaluate(const Rat& x) const {
        Rat acc = c_.back();
        for (int i = degree() - 1; i >= 0; --i) acc = acc * x + c_[static_cast<size_t>(i)];
        return acc;
    }

    std::string str(const char* var = "X") const {
        std::ostringstream out;
        bool first = true;
        for (int i = degree(); i >= 0; --i) {
            const Rat c = coefficient(i);
            if (c == 0 && !(first && i == 0)) continue;
            if (!first) out << (c >= 0 ? " + " : " - ");
            else if (c < 0) out << "-";
            first = false;
            const Rat a = boost::multiprecision::abs(c);
            if (a != 1 || i == 0) out << to_string(a);
            if (i != 0) {
                if (a != 1) out << "*";
                out << var;
                if (i != 1) out << "^" << i;
            }
        }
        return out.str();
    }

private:
    std::vector<Rat> c_;
};

namespace faber {

/**
 * The Faber polynomial P_{n,f}: the unique monic degree-n polynomial
 * such that q^{-n} - P_{n,f}(f(q)) has no terms of exponent <= 0.
 *
 * Requires f = q^{-1} + c_0 + c_1 q + ... (valuation exactly -1, monic)
 * known at least to order n-1. Constructed by back-substitution on the
 * principal parts of f^0, ..., f^n, which form a triangular system
 * (f^m = q^{-m} + higher terms).
 */
inline DensePolynomial faber_poly(const LaurentSeries& f, int n) {
    if (n < 1) throw std::invalid_argument("faber_poly requires n >= 1");
    if (f.valuation() != -1 || f.coefficient(-1) != 1)
        throw std::invalid_argument("series not normalized");
    if (f.order() < n - 1) throw std::invalid_argument("precision too low for faber_poly");

    // Powers f^0..f^n, each known at least through exponent 0.
    std::vector<LaurentSeries> pw;
    pw.reserve(static_cast<size_t>(n + 1));
    pw.push_back(LaurentSeries::constant(1, kExactOrder));
    for (int m = 1; m <= n; ++m) pw.push_back(mul(pw.back(), f));

    std::vector<Rat> b(static_cast<size_t>(n + 1));
    b[static_cast<size_t>(n)] = 1;
    for (int m = n - 1; m >= 0; --m) {
        Rat acc = 0;
        for (int j = m + 1; j <= n; ++j)
            acc += b[static_cast<size_t>(j)] * pw[static_cast<size_t>(j)].coefficient(-m);
        b[static_cast<size_t>(m)] = -acc;
    }
    return DensePolynomial(std::move(b));
}

struct NewtonLogReport {
    bool minus_sign_holds = false;  // log[q(f(q)-f(p))] == -sum P_n(f(p)) q^n/n
    bool plus_sign_holds = false;   // log[q(f(q)-f(p))] == +sum P_n(f(p)) q^n/n
};

/**
 * Checks the Newton-logarithm identity relating log[q(f(q) - f(p))] to
 * the generating function of Faber polynomial values, as a bivariate
 * identity in q (outer, power series) and p (inner, Laurent). Both
 * signs of the right-hand side are tested and reported.
 */
inline NewtonLogReport newton_log_identity_check(const LaurentSeries& f,
                                                 int order_q, int order_p) {
    if (f.valuation() != -1 || f.coefficient(-1) != 1)
        throw std::invalid_argument("series not normalized");
    if (f.order() < order_q) throw std::invalid_argument("precision too low for newton_log");

    const LaurentSeries f_in_p = f.truncated(order_p);

    // q*(f(q) - f(p)) as an outer-q series with inner-p coefficients.
    std::vector<LaurentSeries> lhs_coeffs;
    lhs_coeffs.reserve(static_cast<size_t>(order_q + 1));
    lhs_coeffs.push_back(LaurentSeries::constant(1, kExactOrder));  // q * q^{-1}
    lhs_coeffs.push_back(LaurentSeries::constant(f.coefficient(0), kExactOrder) - f_in_p);
    for (int k = 1; k + 1 <= order_q; ++k)
        lhs_coeffs.push_back(LaurentSeries::constant(f.coefficient(k), kExactOrder));
    const BiSeries lhs = log(BiSeries(std::move(lhs_coeffs)));

    // sum_{n>=1} P_{n,f}(f(p)) q^n / n
    std::vector<LaurentSeries> rhs_coeffs;
    rhs_coeffs.reserve(static_cast<size_t>(order_q + 1));
    rhs_coeffs.push_back(LaurentSeries::zero(kExactOrder));
    for (int n = 1; n <= order_q; ++n)
        rhs_coeffs.push_back(Rat(1, n) * faber_poly(f, n).evaluate(f_in_p));
    const BiSeries rhs(std::move(rhs_coeffs));

    NewtonLogReport report;
    report.minus_sign_holds = (lhs == -rhs);
    report.plus_sign_holds = (lhs == rhs);
    return report;
}

} // namespace faber
} // namespace moonshine

#endif
