#ifndef MOONSHINE_PAIRS_HPP
#define MOONSHINE_PAIRS_HPP

#include <algorithm>
#include <complex>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

namespace moonshine {
namespace pairs {

/// Permutation of {0..n-1}, as the image list.
using Perm = std::vector<int>;

inline Perm identity_perm(int degree) {
    Perm p(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) p[static_cast<size_t>(i)] = i;
    return p;
}

/// (a*b)(i) = a(b(i)).
inline Perm compose(const Perm& a, const Perm& b) {
    Perm p(b.size());
    for (size_t i = 0; i < b.size(); ++i) p[i] = a[static_cast<size_t>(b[i])];
    return p;
}

inline Perm inverse(const Perm& a) {
    Perm p(a.size());
    for (size_t i = 0; i < a.size(); ++i) p[static_cast<size_t>(a[i])] = static_cast<int>(i);
    return p;
}

inline Perm power(const Perm& a, long long n) {
    Perm base = n < 0 ? inverse(a) : a;
    if (n < 0) n = -n;
    Perm acc = identity_perm(static_cast<int>(a.size()));
    while (n > 0) {
        if (n & 1) acc = compose(acc, base);
        base = compose(base, base);
        n >>= 1;
    }
    return acc;
}

inline int perm_order(const Perm& a) {
    Perm p = a;
    const Perm e = identity_perm(static_cast<int>(a.size()));
    int n = 1;
    while (p != e) {
        p = compose(p, a);
        ++n;
    }
    return n;
}

/// A finite permutation group with all elements materialized.
class PermGroup {
public:
    PermGroup(int degree, std::vector<Perm> generators, size_t size_bound = 10000)
        : degree_(degree), generators_(std::move(generators)) {
        for (const Perm& g : generators_)
            if (static_cast<int>(g.size()) != degree)
                throw std::invalid_argument("generator degree mismatch");
        std::set<Perm> seen;
        std::vector<Perm> frontier{identity_perm(degree)};
        seen.insert(frontier[0]);
        while (!frontier.empty()) {
            std::vector<Perm> next;
            for (const Perm& x : frontier)
                for (const Perm& g : generators_) {
                    Perm y = compose(g, x);
                    if (seen.insert(y).second) {
                        if (seen.size() > size_bound) throw std::invalid_argument("group too large");
                        next.push_back(std::move(y));
                    }
                }
            frontier = std::move(next);
        }
        elements_.assign(seen.begin(), seen.end());  // sorted: fixed total order
    }

    int degree() const { return degree_; }
    size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    const std::vector<Perm>& generators() const { return generators_; }

    bool contains(const Perm& g) const {
        return std::binary_search(elements_.begin(), elements_.end(), g);
    }

    std::vector<Perm> centralizer(const Perm& g) const {
        std::vector<Perm> c;
        for (const Perm& h : elements_)
            if (compose(h, g) == compose(g, h)) c.push_back(h);
        return c;
    }

    /// Conjugacy classes of the subgroup given by `subgroup` (closed
    /// element list), under conjugation by that subgroup. Each class is
    /// sorted; the first entry is the canonical representative.
    static std::vector<std::vector<Perm>> conjugacy_classes(const std::vector<Perm>& subgroup) {
        std::vector<std::vector<Perm>> classes;
        std::set<Perm> done;
        for (const Perm& x : subgroup) {
            if (done.count(x)) continue;
            std::set<Perm> orbit;
            for (const Perm& s : subgroup) orbit.insert(compose(compose(s, x), inverse(s)));
            classes.emplace_back(orbit.begin(), orbit.end());
            done.insert(orbit.begin(), orbit.end());
        }
        return classes;
    }

    std::vector<std::vector<Perm>> conjugacy_classes() const { return conjugacy_classes(elements_); }

    // Standard families.
    static PermGroup trivial(size_t size_bound = 10000) { return PermGroup(1, {}, size_bound); }
    static PermGroup cyclic(int n, size_t size_bound = 10000) {
        Perm r(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = (i + 1) % n;
        return PermGroup(n, {r}, size_bound);
    }
    static PermGroup symmetric(int n, size_t size_bound = 10000) {
        if (n < 2) return trivial(size_bound);
        Perm r(static_cast<size_t>(n)), s = identity_perm(n);
        for (int i = 0; i < n; ++i) r[static_cast<size_t>(i)] = (i + 1) % n;
        std::swap(s[0], s[1]);
        return PermGroup(n, {r, s}, size_bound);
    }
    static PermGroup alternating(int n, size_t size_bound = 10000) {
        if (n < 3) return trivial(size_bound);
        std::vector<Perm> gens;
        for (int i = 2; i < n; ++i) {
            Perm c = identity_perm(n);  // 3-cycle (0 1 i)
            c[0] = 1;
            c[1] = i;
            c[static_cast<size_t>(i)] = 0;
            gens.push_back(std::move(c));
        }
        return PermGroup(n, std::move(gens), size_bound);
    }
    static PermGroup dihedral(int n, size_t size_bound = 10000) {  // order 2n, acting on n points
        Perm r(static_cast<size_t>(n)), s(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            r[static_cast<size_t>(i)] = (i + 1) % n;
            s[static_cast<size_t>(i)] = (n - i) % n;
        }
        return PermGroup(n, {r, s}, size_bound);
    }
    static PermGroup quaternion8(size_t size_bound = 10000) {
        // Left regular representation on {1,-1,i,-i,j,-j,k,-k}.
        Perm pi = {2, 3, 1, 0, 6, 7, 5, 4};
        Perm pj = {4, 5, 7, 6, 1, 0, 2, 3};
        return PermGroup(8, {pi, pj}, size_bound);
    }

private:
    int degree_;
    std::vector<Perm> generators_;
    std::vector<Perm> elements_;
};

/// A conjugacy class of commuting ordered pairs, with its full orbit
/// under simultaneous conjugation. The representative is the
/// lexicographically least pair in the orbit.
struct PairClass {
    std::pair<Perm, Perm> representative;
    std::vector<std::pair<Perm, Perm>> orbit;  // sorted

    bool operator==(const PairClass& o) const { return representative == o.representative; }
    bool operator<(const PairClass& o) const { return representative < o.representative; }
};

/// The class of a given commuting pair.
inline PairClass pair_class_of(const PermGroup& G, const Perm& h, const Perm& g) {
    if (compose(h, g) != compose(g, h))
        throw std::invalid_argument("pair does not commute");
    std::set<std::pair<Perm, Perm>> orbit;
    for (const Perm& s : G.elements()) {
        const Perm si = inverse(s);
        orbit.emplace(compose(compose(s, h), si), compose(compose(s, g), si));
    }
    PairClass pc;
    pc.orbit.assign(orbit.begin(), orbit.end());
    pc.representative = pc.orbit.front();
    return pc;
}

/// All classes of commuting pairs (Pairs_G).
inline std::vector<PairClass> enumerate_pairs(const PermGroup& G) {
    std::vector<PairClass> classes;
    std::set<std::pair<Perm, Perm>> done;
    for (const Perm& h : G.elements())
        for (const Perm& g : G.elements()) {
            if (compose(h, g) != compose(g, h)) continue;
            if (done.count({h, g})) continue;
            PairClass pc = pair_class_of(G, h, g);
            done.insert(pc.orbit.begin(), pc.orbit.end());
            classes.push_back(std::move(pc));
        }
    std::sort(classes.begin(), classes.end());
    return classes;
}

struct SL2Matrix {
    long long a, b, c, d;

    SL2Matrix(long long a_, long long b_, long long c_, long long d_) : a(a_), b(b_), c(c_), d(d_) {
        if (a * d - b * c != 1) throw std::invalid_argument("matrix determinant must be 1");
    }

    SL2Matrix operator*(const SL2Matrix& o) const {
        return SL2Matrix(a * o.a + b * o.c, a * o.b + b * o.d,
                         c * o.a + d * o.c, c * o.b + d * o.d);
    }
};

/// [h,g] -> [h^a g^b, h^c g^d].
inline PairClass sl2_act(const PermGroup& G, const SL2Matrix& m, const PairClass& p) {
    const Perm& h = p.representative.first;
    const Perm& g = p.representative.second;
    const Perm h2 = compose(power(h, m.a), power(g, m.b));
    const Perm g2 = compose(power(h, m.c), power(g, m.d));
    return pair_class_of(G, h2, g2);
}

/// Adams operation [h,g] -> [h^n, g^n]; n may be any integer.
inline PairClass adams_on_pairs(const PermGroup& G, long long n, const PairClass& p) {
    return pair_class_of(G, power(p.representative.first, n), power(p.representative.second, n));
}

/// The cusp chart at g: one entry per conjugacy class of C_G(g),
/// mapping its representative h to the class of [h, g].
inline std::vector<std::pair<Perm, PairClass>> cusp_chart(const PermGroup& G, const Perm& g) {
    if (!G.contains(g)) throw std::invalid_argument("chart element not in group");
    std::vector<std::pair<Perm, PairClass>> chart;
    for (const auto& cls : PermGroup::conjugacy_classes(G.centralizer(g)))
        chart.emplace_back(cls.front(), pair_class_of(G, cls.front(), g));
    return chart;
}

using Complex = std::complex<double>;
using CMatrix = std::vector<std::vector<Complex>>;

inline CMatrix cmatrix_zero(size_t n) { return CMatrix(n, std::vector<Complex>(n)); }

inline CMatrix cmatrix_mul(const CMatrix& A, const CMatrix& B) {
    const size_t n = A.size();
    CMatrix C = cmatrix_zero(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < n; ++k) {
            if (A[i][k] == Complex(0)) continue;
            for (size_t j = 0; j < n; ++j) C[i][j] += A[i][k] * B[k][j];
        }
    return C;
}

inline double cmatrix_max_norm(const CMatrix& A) {
    double m = 0;
    for (const auto& row : A)
        for (const Complex& x : row) m = std::max(m, std::abs(x));
    return m;
}

/// Devoto's projections P_k = |g|^{-1} sum_{1<=n<=|g|} e^{-2 pi i n k/|g|} g^n,
/// realized on the regular representation of the centralizer C_G(g).
inline std::vector<CMatrix> devoto_projections(const PermGroup& G, const Perm& g) {
    if (!G.contains(g)) throw std::invalid_argument("element not in group");
    const std::vector<Perm> cent = G.centralizer(g);
    const size_t dim = cent.size();
    std::map<Perm, size_t> index;
    for (size_t i = 0; i < dim; ++i) index[cent[i]] = i;

    const int ord = perm_order(g);
    const double two_pi = 6.283185307179586476925286766559;
    std::vector<CMatrix> projections;
    for (int k = 0; k < ord; ++k) {
        CMatrix P = cmatrix_zero(dim);
        Perm gn = identity_perm(G.degree());
        for (int n = 1; n <= ord; ++n) {
            gn = compose(gn, g);  // g^n
            const Complex w = std::polar(1.0 / ord, -two_pi * n * k / ord);
            for (size_t col = 0; col < dim; ++col)
                P[index.at(compose(gn, cent[col]))][col] += w;
        }
        projections.push_back(std::move(P));
    }
    return projections;
}

struct ProjectionReport {
    double idempotency_error = 0;
    double orthogonality_error = 0;
    double completeness_error = 0;
    double eigenvalue_error = 0;

    bool pass(double tol) const {
        return idempotency_error <= tol && orthogonality_error <= tol &&
               completeness_error <= tol && eigenvalue_error <= tol;
    }
};

/// Structural checks on the projections: idempotency, mutual
/// orthogonality, completeness (sum = identity), and the g-eigenvalue
/// exp(2 pi i k/|g|) on the image of P_k.
inline ProjectionReport check_devoto_projections(const PermGroup& G, const Perm& g) {
    const std::vector<CMatrix> P = devoto_projections(G, g);
    const std::vector<Perm> cent = G.centralizer(g);
    const size_t dim = cent.size();
    std::map<Perm, size_t> index;
    for (size_t i = 0; i < dim; ++i) index[cent[i]] = i;
    const int ord = static_cast<int>(P.size());
    const double two_pi = 6.283185307179586476925286766559;

    ProjectionReport report;
    CMatrix total = cmatrix_zero(dim);
    CMatrix g_mat = cmatrix_zero(dim);
    for (size_t col = 0; col < dim; ++col) g_mat[index.at(compose(g, cent[col]))][col] = 1.0;

    for (int k = 0; k < ord; ++k) {
        CMatrix sq = cmatrix_mul(P[static_cast<size_t>(k)], P[static_cast<size_t>(k)]);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) sq[i][j] -= P[static_cast<size_t>(k)][i][j];
        report.idempotency_error = std::max(report.idempotency_error, cmatrix_max_norm(sq));

        for (int l = 0; l < ord; ++l) {
            if (l == k) continue;
            report.orthogonality_error = std::max(
                report.orthogonality_error,
                cmatrix_max_norm(cmatrix_mul(P[static_cast<size_t>(k)], P[static_cast<size_t>(l)])));
        }

        CMatrix gp = cmatrix_mul(g_mat, P[static_cast<size_t>(k)]);
        const Complex eig = std::polar(1.0, two_pi * k / ord);
        for (size_t i = 0; i < dim; ++i)
            for (size_t j = 0; j < dim; ++j) {
                gp[i][j] -= eig * P[static_cast<size_t>(k)][i][j];
                total[i][j] += P[static_cast<size_t>(k)][i][j];
            }
        report.eigenvalue_error = std::max(report.eigenvalue_error, cmatrix_max_norm(gp));
    }
    for (size_t i = 0; i < dim; ++i) total[i][i] -= 1.0;
    report.completeness_error = cmatrix_max_norm(total);
    return report;
}

} // namespace pairs
} // namespace moonshine

#endif
