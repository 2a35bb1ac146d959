#ifndef MOONSHINE_SUPERSINGULAR_HPP
#define MOONSHINE_SUPERSINGULAR_HPP

#include <cstdint>
#include <set>
#include <tuple>
#include <stdexcept>
#include <utility>
#include <vector>

namespace moonshine {
namespace supersingular {

inline bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline long long mod_pow(long long base, long long e, long long p) {
    long long acc = 1;
    base %= p;
    while (e > 0) {
        if (e & 1) acc = acc * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return acc;
}

inline long long mod_inverse(long long a, long long p) { return mod_pow(a, p - 2, p); }

/// Smallest positive quadratic non-residue mod p (Euler's criterion).
inline long long smallest_non_residue(long long p) {
    for (long long d = 2; d < p; ++d)
        if (mod_pow(d, (p - 1) / 2, p) == p - 1) return d;
    throw std::logic_error("no quadratic non-residue found");
}

/**
 * The quadratic extension F_p^2 = F_p(sqrt(delta)) for a fixed verified
 * non-residue delta; elements are pairs (a, b) meaning a + b*sqrt(delta).
 */
class QuadraticField {
public:
    struct Element {
        long long a = 0, b = 0;
        bool operator<(const Element& o) const { return std::tie(a, b) < std::tie(o.a, o.b); }
        bool operator==(const Element& o) const { return a == o.a && b == o.b; }
        bool in_prime_field() const { return b == 0; }
        bool is_zero() const { return a == 0 && b == 0; }
    };

    explicit QuadraticField(long long p) : p_(p), delta_(0) {
        if (!is_prime(p) || p < 3) throw std::invalid_argument("p must be an odd prime");
        delta_ = smallest_non_residue(p);
        if (mod_pow(delta_, (p - 1) / 2, p) != p - 1)
            throw std::logic_error("delta is not a non-residue");
    }

    long long characteristic() const { return p_; }
    long long delta() const { return delta_; }

    Element from_int(long long a) const { return {((a % p_) + p_) % p_, 0}; }

    Element add(Element x, Element y) const { return {(x.a + y.a) % p_, (x.b + y.b) % p_}; }
    Element sub(Element x, Element y) const {
        return {(x.a - y.a + p_) % p_, (x.b - y.b + p_) % p_};
    }
    Element mul(Element x, Element y) const {
        return {(x.a * y.a + x.b * y.b % p_ * delta_) % p_, (x.a * y.b + x.b * y.a) % p_};
    }
    Element inverse(Element x) const {
        // norm = a^2 - delta b^2 is a nonzero prime-field scalar
        const long long norm = ((x.a * x.a - x.b * x.b % p_ * delta_) % p_ + p_) % p_;
        if (norm == 0) throw std::invalid_argument("inverse of zero");
        const long long ninv = mod_inverse(norm, p_);
        return {x.a * ninv % p_, (p_ - x.b) * ninv % p_};
    }
    Element frobenius(Element x) const {  // a + b sqrt(delta) -> a - b sqrt(delta)
        return {x.a, (p_ - x.b) % p_};
    }

private:
    long long p_;
    long long delta_;
};

/// Hasse polynomial H_p(lambda) = sum_{i=0}^{m} C(m,i)^2 lambda^i mod p,
/// m = (p-1)/2. A Legendre parameter lambda is supersingular iff
/// H_p(lambda) = 0.
inline std::vector<long long> hasse_polynomial(long long p) {
    if (p < 5 || !is_prime(p)) throw std::invalid_argument("hasse_polynomial requires prime p >= 5");
    const long long m = (p - 1) / 2;
    std::vector<long long> c(static_cast<size_t>(m + 1));
    long long binom = 1;  // C(m, i) mod p, built multiplicatively (i < p, so invertible)
    for (long long i = 0; i <= m; ++i) {
        c[static_cast<size_t>(i)] = binom * binom % p;
        if (i < m) binom = binom % p * ((m - i) % p) % p * mod_inverse(i + 1, p) % p;
    }
    return c;
}

struct SupersingularReport {
    long long p = 0;
    long long delta = 0;  // non-residue defining F_p^2 (0 for p = 2, 3)
    std::vector<QuadraticField::Element> j_set;
    bool all_in_prime_field = false;
};

/// All supersingular j-invariants in characteristic p, by exhaustive
/// root search of the Hasse polynomial over F_p^2 on the Legendre family.
inline SupersingularReport supersingular_j_set(long long p, long long bound = 1000) {
    if (!is_prime(p)) throw std::invalid_argument("p must be prime");
    if (p > bound) throw std::invalid_argument("prime exceeds configured bound");
    SupersingularReport report;
    report.p = p;
    if (p == 2 || p == 3) {
        // The Legendre model degenerates; the unique supersingular
        // j-invariant in characteristics 2 and 3 is 0.
        report.j_set.push_back({0, 0});
        report.all_in_prime_field = true;
        return report;
    }

    const QuadraticField F(p);
    report.delta = F.delta();
    const std::vector<long long> H = hasse_polynomial(p);

    const auto eval = [&](QuadraticField::Element x) {
        QuadraticField::Element acc = F.from_int(H.back());
        for (size_t i = H.size() - 1; i-- > 0;)
            acc = F.add(F.mul(acc, x), F.from_int(H[i]));
        return acc;
    };

    // lambda in {0,1} would make the j-map singular; verified impossible.
    if (eval(F.from_int(0)).is_zero() || eval(F.from_int(1)).is_zero())
        throw std::logic_error("Hasse polynomial vanishes at a degenerate lambda");

    std::set<QuadraticField::Element> js;
    for (long long a = 0; a < p; ++a)
        for (long long b = 0; b < p; ++b) {
            const QuadraticField::Element lam{a, b};
            if (!eval(lam).is_zero()) continue;
            // j = 2^8 (lambda^2 - lambda + 1)^3 / (lambda^2 (lambda - 1)^2)
            const QuadraticField::Element lam2 = F.mul(lam, lam);
            const QuadraticField::Element num1 =
                F.add(F.sub(lam2, lam), F.from_int(1));
            const QuadraticField::Element num = F.mul(F.mul(num1, num1), num1);
            const QuadraticField::Element lm1 = F.sub(lam, F.from_int(1));
            const QuadraticField::Element den = F.mul(lam2, F.mul(lm1, lm1));
            js.insert(F.mul(F.mul(F.from_int(256), num), F.inverse(den)));
        }
    if (js.empty()) throw std::logic_error("no supersingular j-invariant found");
    report.j_set.assign(js.begin(), js.end());
    report.all_in_prime_field = true;
    for (const auto& j : report.j_set)
        if (!j.in_prime_field()) report.all_in_prime_field = false;
    return report;
}

struct OggScanResult {
    std::vector<long long> passing;   // primes with every j-invariant in F_p
    std::vector<long long> failing;
    std::vector<SupersingularReport> reports;
};

/// Ogg's criterion over every prime p <= bound.
inline OggScanResult ogg_scan(long long bound, long long max_bound = 1000) {
    if (bound > max_bound) throw std::invalid_argument("bound exceeds configured maximum");
    OggScanResult result;
    for (long long p = 2; p <= bound; ++p) {
        if (!is_prime(p)) continue;
        SupersingularReport report = supersingular_j_set(p, max_bound);
        (report.all_in_prime_field ? result.passing : result.failing).push_back(p);
        result.reports.push_back(std::move(report));
    }
    return result;
}

/// Prime factorization of the order of the Monster sporadic simple
/// group (a published constant, kept as a fixture for the Ogg
/// cross-check): 2^46 3^20 5^9 7^6 11^2 13^3 17 19 23 29 31 41 47 59 71.
inline const std::vector<std::pair<long long, int>>& monster_order_factorization() {
    static const std::vector<std::pair<long long, int>> f = {
        {2, 46}, {3, 20}, {5, 9}, {7, 6}, {11, 2}, {13, 3}, {17, 1}, {19, 1},
        {23, 1}, {29, 1}, {31, 1}, {41, 1}, {47, 1}, {59, 1}, {71, 1}};
    return f;
}

inline std::vector<long long> monster_prime_divisors() {
    std::vector<long long> primes;
    for (const auto& [p, e] : monster_order_factorization()) primes.push_back(p);
    return primes;
}

} // namespace supersingular
} // namespace moonshine

#endif
