#ifndef MOONSHINE_REPORTS_HPP
#define MOONSHINE_REPORTS_HPP

#include "moonshine/bundles.hpp"
#include "moonshine/faber.hpp"
#include "moonshine/ganter.hpp"
#include "moonshine/hecke.hpp"
#include "moonshine/json_io.hpp"
#include "moonshine/modular.hpp"
#include "moonshine/pairs.hpp"
#include "moonshine/supersingular.hpp"
#include "moonshine/trees.hpp"

#include <json.hpp>

#include <map>
#include <random>
#include <string>

namespace moonshine {
namespace reports {

using nlohmann::json;

/// Safety limits, overridable via MOONSHINE_GROUP_BOUND and
/// MOONSHINE_PRIME_BOUND.
struct Limits {
    size_t group_bound = 10000;
    long long prime_bound = 1000;

    static Limits from_environment() {
        Limits limits;
        if (const char* g = std::getenv("MOONSHINE_GROUP_BOUND"))
            limits.group_bound = static_cast<size_t>(std::stoll(g));
        if (const char* p = std::getenv("MOONSHINE_PRIME_BOUND"))
            limits.prime_bound = std::stoll(p);
        return limits;
    }
};

inline json jseries_report(int order) {
    return {{"command", "jseries"},
            {"pass", true},
            {"order", order},
            {"series", series_to_json(modular::moonshine_J(order))}};
}

inline json hecke_report(int k, int order) {
    const LaurentSeries J = modular::moonshine_J(k * order);
    return {{"command", "hecke"},
            {"pass", true},
            {"k", k},
            {"order", order},
            {"series", series_to_json(hecke::hecke_scaled_to_order(J, k, order))}};
}

inline json faber_report(int n, int order) {
    const LaurentSeries J = modular::moonshine_J(std::max(n, order));
    const DensePolynomial P = faber::faber_poly(J, n);
    json coeffs = json::array();
    for (const Rat& c : P.coefficients()) coeffs.push_back(to_string(c));
    return {{"command", "faber"},
            {"pass", true},
            {"n", n},
            {"polynomial", P.str()},
            {"coeffs_low_first", coeffs}};
}

inline json newton_report(int order_q, int order_p) {
    const LaurentSeries J = modular::moonshine_J(std::max(order_q, order_p));
    const auto r = faber::newton_log_identity_check(J, order_q, order_p);
    return {{"command", "faber"},
            {"pass", r.minus_sign_holds},
            {"minus_sign_holds", r.minus_sign_holds},
            {"plus_sign_holds", r.plus_sign_holds},
            {"matched_sign", r.minus_sign_holds ? "minus" : (r.plus_sign_holds ? "plus" : "none")}};
}

inline json replicate_report(int k_max, int q_order) {
    const LaurentSeries J = modular::moonshine_J(k_max * q_order);
    const auto r = ganter::replicability_check_faber_form(J, k_max, q_order);
    json per_k = json::array();
    int first_failure = 0;
    for (size_t i = 0; i < r.holds.size(); ++i) {
        per_k.push_back({{"k", r.k_values[i]}, {"holds", static_cast<bool>(r.holds[i])}});
        if (!r.holds[i] && first_failure == 0) first_failure = r.k_values[i];
    }
    json rep = {{"command", "replicate"},
                {"pass", r.all_hold()},
                {"k_max", k_max},
                {"order", q_order},
                {"per_k", per_k}};
    if (first_failure != 0) rep["first_failure_k"] = first_failure;
    return rep;
}

inline json grid_mismatch_json(const ganter::GridMismatch& m) {
    return {{"t_exp", m.t_exp}, {"q_exp", m.q_exp}};
}

inline json theorem_report(int t_order, int q_order) {
    const LaurentSeries J = modular::moonshine_J(ganter::required_precision(t_order, q_order));
    const auto m = ganter::replicability_check_theorem_form(J, t_order, q_order);
    json rep = {{"command", "theorem33"},
                {"pass", !m.found},
                {"t_order", t_order},
                {"q_order", q_order}};
    if (m.found) rep["first_failure"] = grid_mismatch_json(m);
    return rep;
}

inline json symmetry_report(int t_order, int q_order) {
    const int T = std::max(t_order, q_order);
    const LaurentSeries J = modular::moonshine_J(ganter::required_precision(T, T));
    const auto r = ganter::symmetry_check(J, t_order, q_order);
    json rep = {{"command", "symmetry"},
                {"pass", r.holds()},
                {"t_order", t_order},
                {"q_order", q_order},
                {"symmetric", r.symmetric},
                {"pole_free", r.pole_free},
                {"integral", r.integral}};
    if (!r.holds()) rep["first_failure"] = grid_mismatch_json(r.first_failure);
    return rep;
}

/// Group spec: sym:N, dihedral:N, cyclic:N, quaternion8, alt:N, or
/// perm:<generators> with generators in cycle notation separated by ';',
/// e.g. "perm:(0,1,2)(3,4);(0,3)".
inline pairs::PermGroup parse_group(const std::string& spec, size_t group_bound) {
    const auto arg = [&](const std::string& prefix) -> int {
        return std::stoi(spec.substr(prefix.size()));
    };
    if (spec.rfind("sym:", 0) == 0) return pairs::PermGroup::symmetric(arg("sym:"), group_bound);
    if (spec.rfind("dihedral:", 0) == 0)
        return pairs::PermGroup::dihedral(arg("dihedral:"), group_bound);
    if (spec.rfind("cyclic:", 0) == 0) return pairs::PermGroup::cyclic(arg("cyclic:"), group_bound);
    if (spec.rfind("alt:", 0) == 0) return pairs::PermGroup::alternating(arg("alt:"), group_bound);
    if (spec == "quaternion8") return pairs::PermGroup::quaternion8(group_bound);
    if (spec.rfind("perm:", 0) != 0) throw std::invalid_argument("unknown group spec: " + spec);

    // Cycle-notation parser for perm:<generators>.
    const std::string body = spec.substr(5);
    std::vector<std::vector<std::vector<int>>> gens_cycles;
    std::vector<std::vector<int>> cycles;
    std::vector<int> cycle;
    int degree = 0;
    std::string token;
    const auto flush_token = [&] {
        if (token.empty()) throw std::invalid_argument("malformed cycle in group spec");
        const int p = std::stoi(token);
        degree = std::max(degree, p + 1);
        cycle.push_back(p);
        token.clear();
    };
    for (size_t i = 0; i <= body.size(); ++i) {
        const char c = i < body.size() ? body[i] : ';';
        if (c >= '0' && c <= '9') token += c;
        else if (c == ',') flush_token();
        else if (c == '(') {
            if (!cycle.empty()) throw std::invalid_argument("malformed cycle in group spec");
        } else if (c == ')') {
            flush_token();
            cycles.push_back(std::move(cycle));
            cycle.clear();
        } else if (c == ';') {
            if (!token.empty() || !cycle.empty())
                throw std::invalid_argument("malformed cycle in group spec");
            if (cycles.empty()) throw std::invalid_argument("empty generator in group spec");
            gens_cycles.push_back(std::move(cycles));
            cycles.clear();
        } else throw std::invalid_argument("unexpected character in group spec");
    }
    std::vector<pairs::Perm> gens;
    for (const auto& gc : gens_cycles) {
        pairs::Perm g = pairs::identity_perm(degree);
        for (const auto& cyc : gc)
            for (size_t i = 0; i < cyc.size(); ++i)
                g[static_cast<size_t>(cyc[i])] = cyc[(i + 1) % cyc.size()];
        gens.push_back(std::move(g));
    }
    return pairs::PermGroup(degree, std::move(gens), group_bound);
}

inline json perm_json(const pairs::Perm& p) {
    json a = json::array();
    for (int i : p) a.push_back(i);
    return a;
}

inline json pairs_report(const std::string& group_spec, size_t group_bound,
                         double tolerance = 1e-10) {
    const pairs::PermGroup G = parse_group(group_spec, group_bound);
    const std::vector<pairs::PairClass> classes = pairs::enumerate_pairs(G);
    std::map<pairs::PairClass, size_t> index;
    for (size_t i = 0; i < classes.size(); ++i) index[classes[i]] = i;

    json class_table = json::array();
    for (const auto& pc : classes)
        class_table.push_back({{"h", perm_json(pc.representative.first)},
                               {"g", perm_json(pc.representative.second)},
                               {"orbit_size", pc.orbit.size()}});

    // Orbits of the SL2(Z) action, generated by S and T.
    const pairs::SL2Matrix S{0, -1, 1, 0}, T{1, 1, 0, 1};
    std::vector<int> orbit_id(classes.size(), -1);
    json sl2_orbits = json::array();
    for (size_t i = 0; i < classes.size(); ++i) {
        if (orbit_id[i] != -1) continue;
        const int id = static_cast<int>(sl2_orbits.size());
        std::vector<size_t> frontier{i};
        std::vector<size_t> members;
        orbit_id[i] = id;
        while (!frontier.empty()) {
            const size_t x = frontier.back();
            frontier.pop_back();
            members.push_back(x);
            for (const pairs::SL2Matrix* m : {&S, &T}) {
                const size_t y = index.at(pairs::sl2_act(G, *m, classes[x]));
                if (orbit_id[y] == -1) {
                    orbit_id[y] = id;
                    frontier.push_back(y);
                }
            }
        }
        std::sort(members.begin(), members.end());
        sl2_orbits.push_back(members);
    }

    // Chart atlas: one chart per conjugacy class representative g.
    std::set<pairs::PairClass> covered;
    json atlas = json::array();
    bool projections_pass = true;
    json projections = json::array();
    for (const auto& cls : G.conjugacy_classes()) {
        const pairs::Perm& g = cls.front();
        json chart_classes = json::array();
        for (const auto& [h, pc] : pairs::cusp_chart(G, g)) {
            covered.insert(pc);
            chart_classes.push_back(index.at(pc));
        }
        atlas.push_back({{"g", perm_json(g)}, {"classes", chart_classes}});
        const auto pr = pairs::check_devoto_projections(G, g);
        projections_pass = projections_pass && pr.pass(tolerance);
        projections.push_back({{"g", perm_json(g)},
                               {"idempotency_error", pr.idempotency_error},
                               {"orthogonality_error", pr.orthogonality_error},
                               {"completeness_error", pr.completeness_error},
                               {"eigenvalue_error", pr.eigenvalue_error},
                               {"pass", pr.pass(tolerance)}});
    }
    const bool atlas_surjective = covered.size() == classes.size();

    return {{"command", "pairs"},
            {"pass", atlas_surjective && projections_pass},
            {"group", group_spec},
            {"group_order", G.order()},
            {"degree", G.degree()},
            {"class_count", classes.size()},
            {"classes", class_table},
            {"sl2_orbits", sl2_orbits},
            {"atlas", atlas},
            {"atlas_surjective", atlas_surjective},
            {"projections", projections}};
}

inline json ogg_report(long long bound, long long prime_bound) {
    const auto r = supersingular::ogg_scan(bound, prime_bound);
    json primes = json::array();
    for (const auto& rep : r.reports) {
        json j_set = json::array();
        for (const auto& j : rep.j_set) j_set.push_back({j.a, j.b});
        primes.push_back({{"p", rep.p},
                          {"delta", rep.delta},
                          {"all_in_prime_field", rep.all_in_prime_field},
                          {"j_set", j_set}});
    }
    return {{"command", "ogg"},
            {"pass", true},
            {"bound", bound},
            {"passing", r.passing},
            {"failing", r.failing},
            {"primes", primes}};
}

inline json trees_report(int order, bool oracle) {
    const trees::TreeSeries t = trees::solve_tree_equation(order);
    json counts = json::array();
    for (int n = 1; n <= order; ++n) counts.push_back(t.count(n).str());
    bool pass = true;
    json rep = {{"command", "trees"}, {"order", order}, {"counts", counts}};
    rep["oracle_checked"] = oracle;
    if (oracle) {
        const int n_max = std::min(order, 8);
        const auto brute = trees::brute_force_rooted_trees(n_max);
        bool match = true;
        for (int n = 1; n <= n_max; ++n)
            match = match && t.count(n) == brute[static_cast<size_t>(n - 1)];
        rep["oracle_match"] = match;
        pass = match;
    }
    rep["pass"] = pass;
    return rep;
}

namespace detail {

class Rng {
public:
    explicit Rng(unsigned seed) : gen_(seed) {}

    Rat rational() {
        std::uniform_int_distribution<int> num(-9, 9), den(1, 6);
        return Rat(num(gen_), den(gen_));
    }

    LaurentSeries series(int min_val, int max_order) {
        std::uniform_int_distribution<int> val_dist(min_val, min_val + 3);
        const int val = val_dist(gen_);
        std::vector<Rat> c;
        for (int e = val; e <= max_order; ++e) c.push_back(rational());
        return LaurentSeries(val, max_order, std::move(c));
    }

    bundles::VirtualBundle bundle() {
        std::uniform_int_distribution<int> rank(0, 4), ex(0, 2);
        bundles::VirtualBundle V;
        const int r = rank(gen_);
        for (int i = 0; i < r; ++i)
            V.eigenvalues.push_back({ex(gen_), ex(gen_), ex(gen_)});
        return V;
    }

private:
    std::mt19937 gen_;
};

} // namespace detail

/// Randomized lambda-ring property suite on honest bundles.
inline json lambda_suite_report(int cases, unsigned seed = 20240611u) {
    detail::Rng rng(seed);
    const int T = 8;
    const bundles::TSeries one(T, bundles::MonomialPoly(Rat(1)));
    std::string detail;
    for (int i = 0; i < cases && detail.empty(); ++i) {
        const auto V = rng.bundle();
        const auto W = rng.bundle();
        if (bundles::lambda_t(V.direct_sum(W), T) !=
            bundles::lambda_t(V, T) * bundles::lambda_t(W, T))
            detail = "Lambda_t multiplicativity";
        if (bundles::lambda_t(V, T).negated_variable() * bundles::symmetric_t(V, T) != one)
            detail = "Lambda_{-t} S_t != 1";
        std::vector<bundles::MonomialPoly> arg(static_cast<size_t>(T + 1));
        for (int k = 1; k <= T; ++k)
            arg[static_cast<size_t>(k)] = Rat(1, k) * bundles::adams_psi(V, k);
        if (bundles::TSeries(std::move(arg)).exponential() != bundles::symmetric_t(V, T))
            detail = "Adams exp identity";
        for (int k = 1; k <= 8 && detail.empty(); ++k) {
            bundles::MonomialPoly rhs;
            for (int j = 1; j <= k; ++j) {
                const auto term = bundles::elementary(V, k - j) * bundles::adams_psi(V, j);
                rhs += (j % 2 == 1) ? term : -term;
            }
            if (Rat(k) * bundles::elementary(V, k) != rhs)
                detail = "Newton identity k=" + std::to_string(k);
        }
    }
    json rep = {{"command", "lambda-suite"}, {"pass", detail.empty()}, {"cases", cases}};
    if (!detail.empty()) rep["first_failure"] = detail;
    return rep;
}

/// Randomized series-kernel property suite.
inline json kernel_suite_report(int cases, unsigned seed = 20240611u) {
    detail::Rng rng(seed);
    std::string detail;
    for (int i = 0; i < cases && detail.empty(); ++i) {
        const LaurentSeries a = rng.series(-3, 30);
        const LaurentSeries b = rng.series(-3, 30);
        const LaurentSeries c = rng.series(-3, 30);
        if (a + b != b + a || mul(a, b) != mul(b, a)) detail = "commutativity";
        else if (mul(mul(a, b), c) != mul(a, mul(b, c))) detail = "associativity";
        else if (mul(a, b + c) != mul(a, b) + mul(a, c)) detail = "distributivity";
        else if (!a.is_zero() && mul(a, inv(a)) != LaurentSeries::constant(1, 100))
            detail = "inverse";
        else {
            const LaurentSeries f = rng.series(1, 20);
            const LaurentSeries g = rng.series(1, 20);
            if (log(exp(f)) != f) detail = "log(exp)";
            else if (exp(f + g) != mul(exp(f), exp(g))) detail = "exp homomorphism";
        }
    }
    json rep = {{"command", "kernel-suite"}, {"pass", detail.empty()}, {"cases", cases}};
    if (!detail.empty()) rep["first_failure"] = detail;
    return rep;
}

inline json modular_kernel_report(int order) {
    const bool delta_ok = modular::delta_eisenstein(order) == modular::delta_eta_product(order);
    const LaurentSeries j = modular::j_invariant(order);
    const bool j_ok = j.has_integer_coefficients() && j.valuation() == -1;
    const LaurentSeries J = modular::moonshine_J(order);
    const bool J_ok = J.coefficient(0) == 0 && J.has_integer_coefficients();
    return {{"command", "modular-kernel"},
            {"pass", delta_ok && j_ok && J_ok},
            {"order", order},
            {"delta_routes_agree", delta_ok},
            {"j_integral", j_ok},
            {"J_constant_zero", J_ok}};
}

/// The full verification suite with the documented default orders.
inline json verify_all_report(const Limits& limits) {
    json criteria = json::array();
    bool pass = true;
    const auto add = [&](const std::string& name, json sub) {
        pass = pass && sub.at("pass").get<bool>();
        criteria.push_back({{"name", name}, {"pass", sub.at("pass")}, {"report", std::move(sub)}});
    };
    add("replicability (Faber form), k=2..10, order 50", replicate_report(10, 50));
    add("theorem form, grid 12x12", theorem_report(12, 12));
    add("two-variable symmetry, grid 10x10", symmetry_report(10, 10));
    add("modular kernel, order 100", modular_kernel_report(100));
    add("Newton-log identity, orders (12,12)", newton_report(12, 12));
    add("lambda-ring suite, 500 cases", lambda_suite_report(500));
    {
        json groups = json::array();
        bool ok = true;
        for (const char* spec : {"sym:3", "dihedral:4", "quaternion8", "alt:4"}) {
            json sub = pairs_report(spec, limits.group_bound);
            ok = ok && sub.at("pass").get<bool>();
            groups.push_back(std::move(sub));
        }
        ok = ok && pairs_report("sym:3", limits.group_bound).at("class_count") == 8 &&
             pairs_report("cyclic:2", limits.group_bound).at("class_count") == 4;
        add("pairs orbifold (S3, D4, Q8, A4)",
            json{{"command", "pairs"}, {"pass", ok}, {"groups", groups}});
    }
    {
        json sub = ogg_report(100, limits.prime_bound);
        const std::vector<long long> monster = supersingular::monster_prime_divisors();
        const bool ok = sub.at("passing").get<std::vector<long long>>() == monster;
        sub["pass"] = ok;
        add("Ogg scan to 100 vs Monster primes", std::move(sub));
    }
    add("trees, order 20, with enumeration oracle", trees_report(20, true));
    add("series kernel suite, 1000 cases", kernel_suite_report(1000));
    return {{"command", "verify-all"}, {"pass", pass}, {"criteria", criteria}};
}

} // namespace reports
} // namespace moonshine

#endif
