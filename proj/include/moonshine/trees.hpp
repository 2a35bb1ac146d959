#ifndef MOONSHINE_TREES_HPP
#define MOONSHINE_TREES_HPP

#include "moonshine/laurent_series.hpp"

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace moonshine {
namespace trees {

/// Counts of rooted unlabelled trees t_1..t_N, with t_n the coefficient
/// of z^n in the solution of T(z) = z * exp(sum_{k>=1} T(z^k)/k).
struct TreeSeries {
    int order = 0;
    std::vector<Int> counts;  // counts[n-1] = t_n

    Int count(int n) const {
        if (n < 1 || n > order) throw std::out_of_range("tree count beyond order");
        return counts[static_cast<size_t>(n - 1)];
    }
};

/**
 * Solves the Polya functional equation by fixed-point iteration from
 * T = z. The z^n coefficient of the right side depends only on
 * t_1..t_{n-1}, so N passes stabilize the first N coefficients; one
 * more pass must then change nothing (checked by the tests). The
 * intermediate arithmetic is rational; integrality of the stabilized
 * coefficients is asserted.
 */
inline TreeSeries solve_tree_equation(int order) {
    if (order < 1) throw std::invalid_argument("order must be >= 1");
    LaurentSeries T = LaurentSeries::monomial(1, 1, order);
    for (int pass = 0; pass < order; ++pass) {
        LaurentSeries acc = LaurentSeries::zero(order);
        for (int k = 1; k <= order; ++k)
            acc = add(acc, Rat(1, k) * substitute_power(T, k).truncated(order));
        T = exp(acc).shifted(1).truncated(order);
    }
    TreeSeries result;
    result.order = order;
    for (int n = 1; n <= order; ++n) {
        const Rat c = T.coefficient(n);
        if (!is_integer(c) || c < 0)
            throw std::logic_error("tree equation integrality violated");
        result.counts.push_back(numerator(c));
    }
    return result;
}

/// One further substitution pass applied to a solved series; used to
/// check idempotence of the fixed point.
inline TreeSeries resubstitute(const TreeSeries& t) {
    const int order = t.order;
    std::vector<Rat> c(static_cast<size_t>(order));
    for (int n = 1; n <= order; ++n) c[static_cast<size_t>(n - 1)] = Rat(t.counts[static_cast<size_t>(n - 1)]);
    LaurentSeries T(1, order, std::move(c));
    LaurentSeries acc = LaurentSeries::zero(order);
    for (int k = 1; k <= order; ++k)
        acc = add(acc, Rat(1, k) * substitute_power(T, k).truncated(order));
    T = exp(acc).shifted(1).truncated(order);
    TreeSeries result;
    result.order = order;
    for (int n = 1; n <= order; ++n) {
        const Rat v = T.coefficient(n);
        if (!is_integer(v)) throw std::logic_error("tree equation integrality violated");
        result.counts.push_back(numerator(v));
    }
    return result;
}

/**
 * Brute-force oracle: generates every rooted unlabelled tree on up to
 * n_max nodes by canonical form (sorted multiset of child encodings as
 * nested parenthesis strings) and counts them.
 */
inline std::vector<Int> brute_force_rooted_trees(int n_max) {
    if (n_max < 1 || n_max > 10) throw std::invalid_argument("brute force limited to n <= 10");
    // catalog[n] = sorted canonical encodings of rooted trees with n nodes
    std::vector<std::vector<std::string>> catalog(static_cast<size_t>(n_max + 1));
    catalog[1] = {"()"};
    for (int n = 2; n <= n_max; ++n) {
        std::set<std::string> found;
        // Children form a multiset of smaller trees with sizes summing
        // to n-1. Enumerate non-decreasing sequences of (size, index).
        struct Frame {
            int remaining;
            int min_size;
            size_t min_index;
            std::vector<std::string> children;
        };
        std::vector<Frame> stack{{n - 1, 1, 0, {}}};
        while (!stack.empty()) {
            Frame f = std::move(stack.back());
            stack.pop_back();
            if (f.remaining == 0) {
                std::string enc = "(";
                for (const std::string& c : f.children) enc += c;
                enc += ")";
                found.insert(std::move(enc));
                continue;
            }
            for (int s = f.min_size; s <= f.remaining; ++s) {
                const auto& opts = catalog[static_cast<size_t>(s)];
                const size_t start = (s == f.min_size) ? f.min_index : 0;
                for (size_t i = start; i < opts.size(); ++i) {
                    Frame next = f;
                    next.remaining -= s;
                    next.min_size = s;
                    next.min_index = i;
                    next.children.push_back(opts[i]);
                    stack.push_back(std::move(next));
                }
            }
        }
        catalog[static_cast<size_t>(n)].assign(found.begin(), found.end());
    }
    std::vector<Int> counts;
    for (int n = 1; n <= n_max; ++n)
        counts.push_back(Int(catalog[static_cast<size_t>(n)].size()));
    return counts;
}

} // namespace trees
} // namespace moonshine

#endif
