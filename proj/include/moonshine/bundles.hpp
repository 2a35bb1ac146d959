#ifndef MOONSHINE_BUNDLES_HPP
#define MOONSHINE_BUNDLES_HPP

#include "moonshine/rational.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace moonshine {
namespace bundles {

/// Monomial in a small alphabet of indeterminates, as an exponent vector.
using Monomial = std::vector<int>;

/// Sparse polynomial in the indeterminate alphabet with rational coefficients.
class MonomialPoly {
public:
    MonomialPoly() = default;
    explicit MonomialPoly(const Rat& c) {
        if (c != 0) terms_[Monomial{}] = c;
    }
    static MonomialPoly monomial(const Monomial& m, const Rat& c = Rat(1)) {
        MonomialPoly p;
        if (c != 0) p.terms_[normalized(m)] = c;
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    MonomialPoly& operator+=(const MonomialPoly& o) {
        for (const auto& [m, c] : o.terms_) {
            auto it = terms_.find(m);
            if (it == terms_.end()) terms_.emplace(m, c);
            else {
                it->second += c;
                if (it->second == 0) terms_.erase(it);
            }
        }
        return *this;
    }

    friend MonomialPoly operator+(MonomialPoly a, const MonomialPoly& b) { return a += b; }

    MonomialPoly operator-() const {
        MonomialPoly p;
        for (const auto& [m, c] : terms_) p.terms_[m] = -c;
        return p;
    }

    friend MonomialPoly operator-(const MonomialPoly& a, const MonomialPoly& b) { return a + (-b); }

    friend MonomialPoly operator*(const MonomialPoly& a, const MonomialPoly& b) {
        MonomialPoly p;
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(std::max(ma.size(), mb.size()), 0);
                for (size_t i = 0; i < ma.size(); ++i) m[i] += ma[i];
                for (size_t i = 0; i < mb.size(); ++i) m[i] += mb[i];
                p += monomial(m, ca * cb);
            }
        return p;
    }

    friend MonomialPoly operator*(const Rat& c, const MonomialPoly& a) {
        return MonomialPoly(c) * a;
    }

    friend bool operator==(const MonomialPoly& a, const MonomialPoly& b) {
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const MonomialPoly& a, const MonomialPoly& b) { return !(a == b); }

    const std::map<Monomial, Rat>& terms() const { return terms_; }

private:
    std::map<Monomial, Rat> terms_;

    static Monomial normalized(Monomial m) {
        while (!m.empty() && m.back() == 0) m.pop_back();
        return m;
    }
};

/// Truncated power series in t with MonomialPoly coefficients.
class TSeries {
public:
    TSeries(int t_order, MonomialPoly constant) : c_(static_cast<size_t>(t_order + 1)) {
        c_[0] = std::move(constant);
    }
    explicit TSeries(std::vector<MonomialPoly> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("TSeries needs the t^0 coefficient");
    }

    int t_order() const { return static_cast<int>(c_.size()) - 1; }
    const MonomialPoly& operator[](int n) const { return c_[static_cast<size_t>(n)]; }
    MonomialPoly& operator[](int n) { return c_[static_cast<size_t>(n)]; }

    friend TSeries operator*(const TSeries& a, const TSeries& b) {
        const int T = std::min(a.t_order(), b.t_order());
        std::vector<MonomialPoly> c(static_cast<size_t>(T + 1));
        for (int n = 0; n <= T; ++n)
            for (int k = 0; k <= n; ++k) c[static_cast<size_t>(n)] += a[k] * b[n - k];
        return TSeries(std::move(c));
    }

    friend bool operator==(const TSeries& a, const TSeries& b) {
        const int T = std::min(a.t_order(), b.t_order());
        for (int n = 0; n <= T; ++n)
            if (a[n] != b[n]) return false;
        return true;
    }
    friend bool operator!=(const TSeries& a, const TSeries& b) { return !(a == b); }

    /// Inverse; requires t^0 coefficient 1.
    TSeries inverse() const {
        if (c_[0] != MonomialPoly(Rat(1)))
            throw std::invalid_argument("TSeries inverse requires constant term 1");
        std::vector<MonomialPoly> b(c_.size());
        b[0] = MonomialPoly(Rat(1));
        for (int n = 1; n <= t_order(); ++n) {
            MonomialPoly acc;
            for (int j = 1; j <= n; ++j) acc += c_[static_cast<size_t>(j)] * b[static_cast<size_t>(n - j)];
            b[static_cast<size_t>(n)] = -acc;
        }
        return TSeries(std::move(b));
    }

    /// Formal exponential; requires t^0 coefficient 0.
    TSeries exponential() const {
        if (!c_[0].is_zero())
            throw std::invalid_argument("TSeries exp requires zero constant term");
        std::vector<MonomialPoly> g(c_.size());
        g[0] = MonomialPoly(Rat(1));
        for (int n = 1; n <= t_order(); ++n) {
            MonomialPoly acc;
            for (int k = 1; k <= n; ++k)
                acc += Rat(k) * (c_[static_cast<size_t>(k)] * g[static_cast<size_t>(n - k)]);
            g[static_cast<size_t>(n)] = Rat(1, n) * acc;
        }
        return TSeries(std::move(g));
    }

    /// t -> -t.
    TSeries negated_variable() const {
        std::vector<MonomialPoly> c = c_;
        for (int n = 1; n <= t_order(); n += 2) c[static_cast<size_t>(n)] = -c[static_cast<size_t>(n)];
        return TSeries(std::move(c));
    }

private:
    std::vector<MonomialPoly> c_;
};

/// A finite-rank bundle presented by its multiset of eigenvalue monomials.
struct VirtualBundle {
    std::vector<Monomial> eigenvalues;

    int rank() const { return static_cast<int>(eigenvalues.size()); }

    static VirtualBundle trivial(int rank) {
        return VirtualBundle{std::vector<Monomial>(static_cast<size_t>(rank), Monomial{})};
    }

    VirtualBundle direct_sum(const VirtualBundle& o) const {
        VirtualBundle s = *this;
        s.eigenvalues.insert(s.eigenvalues.end(), o.eigenvalues.begin(), o.eigenvalues.end());
        return s;
    }
};

/// Total exterior power Lambda_t(V) = sum e_k(eigenvalues) t^k; terminates at rank.
inline TSeries lambda_t(const VirtualBundle& V, int t_order) {
    TSeries prod(t_order, MonomialPoly(Rat(1)));
    for (const Monomial& x : V.eigenvalues) {
        TSeries factor(t_order, MonomialPoly(Rat(1)));
        if (t_order >= 1) factor[1] = MonomialPoly::monomial(x);
        prod = prod * factor;
    }
    return prod;
}

/// Total symmetric power S_t(V) = sum h_k(eigenvalues) t^k, as the
/// product of geometric factors sum_j x^j t^j (independent of lambda_t,
/// so Lambda_{-t} S_t = 1 is a genuine cross-check).
inline TSeries symmetric_t(const VirtualBundle& V, int t_order) {
    TSeries prod(t_order, MonomialPoly(Rat(1)));
    for (const Monomial& x : V.eigenvalues) {
        std::vector<MonomialPoly> geo(static_cast<size_t>(t_order + 1));
        Monomial power(x.size(), 0);
        for (int j = 0; j <= t_order; ++j) {
            geo[static_cast<size_t>(j)] = MonomialPoly::monomial(power);
            for (size_t i = 0; i < x.size(); ++i) power[i] += x[i];
        }
        prod = prod * TSeries(std::move(geo));
    }
    return prod;
}

/// Adams operation psi^k(V): the k-th power sum of the eigenvalues.
inline MonomialPoly adams_psi(const VirtualBundle& V, int k) {
    if (k < 1) throw std::invalid_argument("adams_psi requires k >= 1");
    MonomialPoly acc;
    for (const Monomial& x : V.eigenvalues) {
        Monomial m = x;
        for (int& e : m) e *= k;
        acc += MonomialPoly::monomial(m);
    }
    return acc;
}

/// Elementary symmetric polynomial e_k of the eigenvalues.
inline MonomialPoly elementary(const VirtualBundle& V, int k) { return lambda_t(V, k)[k]; }

/// Complete homogeneous symmetric polynomial h_k of the eigenvalues.
inline MonomialPoly complete(const VirtualBundle& V, int k) { return symmetric_t(V, k)[k]; }

} // namespace bundles
} // namespace moonshine

#endif
