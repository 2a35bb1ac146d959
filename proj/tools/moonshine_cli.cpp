// Command-line front end: exact verification of the Moonshine identity
// suite with deterministic text or JSON output.
//
// Exit codes: 0 all checked identities hold, 1 an identity failed,
// 2 usage error.
#include "moonshine/reports.hpp"

#include <CLI11.hpp>

#include <iostream>

using moonshine::reports::json;

namespace {

void print_series(const json& s) {
    const int val = s.at("valuation").get<int>();
    const auto& coeffs = s.at("coeffs");
    bool first = true;
    for (size_t i = 0; i < coeffs.size(); ++i) {
        const std::string num = coeffs[i][0].get<std::string>();
        const std::string den = coeffs[i][1].get<std::string>();
        if (num == "0") continue;
        const int e = val + static_cast<int>(i);
        std::string c = den == "1" ? num : num + "/" + den;
        if (!first) {
            std::cout << (c[0] == '-' ? " - " : " + ");
            if (c[0] == '-') c.erase(0, 1);
        }
        first = false;
        if (e == 0) std::cout << c;
        else {
            if (c != "1") std::cout << c << "*";
            std::cout << "q";
            if (e != 1) std::cout << "^" << e;
        }
    }
    if (first) std::cout << "0";
    std::cout << " + O(q^" << s.at("order").get<int>() + 1 << ")\n";
}

void print_list(const json& a) {
    std::cout << "{";
    for (size_t i = 0; i < a.size(); ++i) std::cout << (i ? ", " : "") << a[i];
    std::cout << "}";
}

void print_text(const json& rep) {
    const std::string cmd = rep.at("command").get<std::string>();
    const bool pass = rep.at("pass").get<bool>();
    if (cmd == "jseries" || cmd == "hecke") {
        print_series(rep.at("series"));
    } else if (cmd == "faber" && rep.contains("polynomial")) {
        std::cout << rep.at("polynomial").get<std::string>() << "\n";
    } else if (cmd == "faber") {  // --check-newton
        std::cout << "matched sign: " << rep.at("matched_sign").get<std::string>() << "\n";
    } else if (cmd == "replicate") {
        for (const auto& e : rep.at("per_k"))
            std::cout << "k=" << e.at("k").get<int>() << ": "
                      << (e.at("holds").get<bool>() ? "holds" : "FAILS") << "\n";
    } else if (cmd == "theorem33" || cmd == "symmetry") {
        if (pass) std::cout << "identity holds on the full grid\n";
        else {
            const auto& f = rep.at("first_failure");
            std::cout << "FAIL at (t^" << f.at("t_exp").get<int>() << ", q^"
                      << f.at("q_exp").get<int>() << ")\n";
        }
    } else if (cmd == "pairs") {
        std::cout << "group " << rep.at("group").get<std::string>() << " of order "
                  << rep.at("group_order").get<size_t>() << "\n"
                  << "pair classes: " << rep.at("class_count").get<size_t>() << "\n";
        std::cout << "orbit sizes:";
        for (const auto& c : rep.at("classes"))
            std::cout << " " << c.at("orbit_size").get<size_t>();
        std::cout << "\nSL2 orbits of classes:";
        for (const auto& o : rep.at("sl2_orbits")) {
            std::cout << " ";
            print_list(o);
        }
        std::cout << "\nchart atlas (classes per centralizer chart):";
        for (const auto& a : rep.at("atlas"))
            std::cout << " " << a.at("classes").size();
        std::cout << "\natlas surjective: " << (rep.at("atlas_surjective").get<bool>() ? "yes" : "NO")
                  << "\nprojection checks: " << (pass ? "pass" : "FAIL") << "\n";
    } else if (cmd == "ogg") {
        std::cout << "passing primes: ";
        print_list(rep.at("passing"));
        std::cout << "\nfailing primes: ";
        print_list(rep.at("failing"));
        std::cout << "\n";
    } else if (cmd == "trees") {
        const auto& counts = rep.at("counts");
        for (size_t i = 0; i < counts.size(); ++i)
            std::cout << "t_" << i + 1 << " = " << counts[i].get<std::string>() << "\n";
        if (rep.at("oracle_checked").get<bool>())
            std::cout << "enumeration oracle: "
                      << (rep.at("oracle_match").get<bool>() ? "match" : "MISMATCH") << "\n";
    } else if (cmd == "verify-all") {
        for (const auto& c : rep.at("criteria"))
            std::cout << (c.at("pass").get<bool>() ? "PASS " : "FAIL ")
                      << c.at("name").get<std::string>() << "\n";
        std::cout << (pass ? "all checks passed" : "CHECKS FAILED") << "\n";
    }
}

int emit(const json& rep, bool as_json) {
    if (as_json) std::cout << rep.dump(2) << "\n";
    else print_text(rep);
    return rep.at("pass").get<bool>() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification suite for the classical Moonshine identities"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit the report as JSON");
    const auto limits = moonshine::reports::Limits::from_environment();

    int order = 0, k = 2, n = 1, k_max = 10, t_order = 12, q_order = 12;
    long long bound = 100;
    bool check_newton = false, oracle = false;
    std::string group_spec;

    auto* c_jseries = app.add_subcommand("jseries", "print the q-expansion of J = j - 744");
    c_jseries->add_option("--order", order, "truncation order")->required();

    auto* c_hecke = app.add_subcommand("hecke", "print the scaled Hecke transform k*T_k J");
    c_hecke->add_option("--k", k, "Hecke index")->required()->check(CLI::PositiveNumber);
    c_hecke->add_option("--order", order, "output truncation order")->required()
        ->check(CLI::PositiveNumber);

    auto* c_faber = app.add_subcommand("faber", "Faber polynomials of J / Newton-log identity");
    c_faber->add_option("--n", n, "polynomial degree")->check(CLI::PositiveNumber);
    c_faber->add_option("--order", order, "working series order");
    c_faber->add_flag("--check-newton", check_newton,
                      "check the Newton-log identity and print the matched sign");

    auto* c_rep = app.add_subcommand("replicate", "P_{k,J}(J(q)) = k*T_k J for k <= k-max");
    c_rep->add_option("--k-max", k_max, "largest Hecke index")->required()
        ->check(CLI::PositiveNumber);
    c_rep->add_option("--order", order, "q-order of the comparison")->required()
        ->check(CLI::PositiveNumber);

    auto* c_thm = app.add_subcommand("theorem33", "t(J(t) - J(q)) = Lambda_{-t}(J(q)) on a grid");
    c_thm->add_option("--t-order", t_order, "t-grid size")->required()->check(CLI::PositiveNumber);
    c_thm->add_option("--q-order", q_order, "q-grid size")->required()->check(CLI::PositiveNumber);

    auto* c_sym = app.add_subcommand("symmetry", "q Lambda_{-t}(J(q)) = -t Lambda_{-q}(J(t))");
    c_sym->add_option("--t-order", t_order, "t-grid size")->required()->check(CLI::PositiveNumber);
    c_sym->add_option("--q-order", q_order, "q-grid size")->required()->check(CLI::PositiveNumber);

    auto* c_pairs = app.add_subcommand(
        "pairs", "commuting-pair classes, SL2 action, charts, projections");
    c_pairs->add_option("--group", group_spec,
                        "sym:N | dihedral:N | cyclic:N | quaternion8 | alt:N | "
                        "perm:<cycles>[;<cycles>...]")->required();

    auto* c_ogg = app.add_subcommand("ogg", "supersingular j-invariant scan (Ogg's criterion)");
    c_ogg->add_option("--bound", bound, "scan primes up to this bound")->required()
        ->check(CLI::PositiveNumber);

    auto* c_trees = app.add_subcommand("trees", "rooted-tree generating function");
    c_trees->add_option("--order", order, "truncation order")->required()
        ->check(CLI::PositiveNumber);
    c_trees->add_flag("--oracle", oracle, "also compare with brute-force enumeration (n <= 8)");

    auto* c_all = app.add_subcommand("verify-all", "run the full verification suite");

    for (CLI::App* sub : app.get_subcommands({}))
        sub->add_flag("--json", as_json, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        using namespace moonshine::reports;
        if (c_jseries->parsed()) return emit(jseries_report(order), as_json);
        if (c_hecke->parsed()) return emit(hecke_report(k, order), as_json);
        if (c_faber->parsed()) {
            if (check_newton) {
                const int o = order > 0 ? order : 12;
                return emit(newton_report(o, o), as_json);
            }
            if (c_faber->count("--n") == 0) {
                std::cerr << "faber requires --n or --check-newton\n";
                return 2;
            }
            return emit(faber_report(n, order > 0 ? order : n), as_json);
        }
        if (c_rep->parsed()) return emit(replicate_report(k_max, order), as_json);
        if (c_thm->parsed()) return emit(theorem_report(t_order, q_order), as_json);
        if (c_sym->parsed()) return emit(symmetry_report(t_order, q_order), as_json);
        if (c_pairs->parsed()) return emit(pairs_report(group_spec, limits.group_bound), as_json);
        if (c_ogg->parsed()) return emit(ogg_report(bound, limits.prime_bound), as_json);
        if (c_trees->parsed()) return emit(trees_report(order, oracle), as_json);
        if (c_all->parsed()) return emit(verify_all_report(limits), as_json);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
