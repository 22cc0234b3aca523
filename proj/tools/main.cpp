// Command-line front end: exact tables, the expression evaluator, basis
// conversions, series and asymptotic evaluations, the verification suites,
// and the enumeration oracles.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/parse error,
// 3 resource cap exceeded.

#include <CLI11.hpp>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "tandem/analysis.hpp"
#include "tandem/exact.hpp"
#include "tandem/expr.hpp"
#include "tandem/numbers.hpp"
#include "tandem/oracles.hpp"
#include "tandem/stirling_poly.hpp"
#include "tandem/verify.hpp"

namespace {

using namespace tandem;

std::vector<Rat> parse_coeff_list(const std::string& text) {
    std::vector<Rat> out;
    std::string token;
    auto flush = [&] {
        if (!token.empty()) {
            out.push_back(parse_rat(token));
            token.clear();
        }
    };
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') {
            flush();
        } else {
            token += c;
        }
    }
    flush();
    if (out.empty()) throw domain_error("empty coefficient list");
    return out;
}

std::string join_coeffs(const std::vector<Rat>& coeffs) {
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) out += ", ";
        out += str(coeffs[i]);
    }
    return out.empty() ? "0" : out;
}

int run_table(const std::string& kind, std::int64_t nmin, std::int64_t nmax, std::int64_t kmin,
              std::int64_t kmax, const std::string& format) {
    numbers::TableKind tk;
    if (kind == "cycle") {
        tk = numbers::TableKind::cycle;
    } else if (kind == "subset") {
        tk = numbers::TableKind::subset;
    } else if (kind == "binomial") {
        tk = numbers::TableKind::binomial;
    } else {
        throw domain_error("unknown table kind '" + kind + "'");
    }
    const auto window = numbers::table_window(tk, nmin, nmax, kmin, kmax);
    if (format == "tsv") {
        std::fputs(numbers::to_tsv(window).c_str(), stdout);
    } else if (format == "json") {
        std::fputs((numbers::to_json(window) + "\n").c_str(), stdout);
    } else {
        throw domain_error("unknown format '" + format + "'");
    }
    return 0;
}

int run_eval(const std::string& text, const std::vector<std::string>& binds) {
    expr::Assignment asg;
    for (const std::string& b : binds) {
        const auto eq = b.find('=');
        if (eq == std::string::npos || eq == 0)
            throw domain_error("--bind expects name=value, got '" + b + "'");
        asg[b.substr(0, eq)] = parse_rat(b.substr(eq + 1));
    }
    const Rat value = expr::eval(expr::parse(text), asg);
    std::printf("%s\n", str(value).c_str());
    return 0;
}

Poly to_power_basis(const std::vector<Rat>& coeffs, const std::string& from) {
    if (from == "power") return Poly(std::vector<Rat>(coeffs));
    if (from == "falling") return analysis::falling_to_power(coeffs);
    if (from == "rising") return analysis::rising_to_power(coeffs);
    throw domain_error("unknown basis '" + from + "'");
}

int run_convert(const std::string& polytext, const std::string& from, const std::string& to) {
    const Poly p = to_power_basis(parse_coeff_list(polytext), from);
    std::string out;
    if (to == "power") {
        out = p.coeff_list();
    } else if (to == "falling") {
        out = join_coeffs(analysis::power_to_falling(p));
    } else if (to == "rising") {
        out = join_coeffs(analysis::power_to_rising(p));
    } else {
        throw domain_error("unknown basis '" + to + "'");
    }
    std::printf("%s\n", out.c_str());
    return 0;
}

int run_asym(double alpha, double z, int terms, const std::string& kind, bool compare) {
    analysis::Kind k;
    if (kind == "rising") {
        k = analysis::Kind::rising;
    } else if (kind == "falling") {
        k = analysis::Kind::falling;
    } else {
        throw domain_error("kind must be rising|falling");
    }
    const auto r = analysis::asym_factorial_power(z, alpha, terms, k);
    std::printf("value %s\n", str(r.value).c_str());
    std::printf("error_bound %s (first omitted term; heuristic, not a proven bound)\n",
                str(r.error_bound).c_str());
    if (compare) {
        const double reference = analysis::factorial_power_real(z, alpha, k);
        std::printf("gamma_reference %s\n", str(reference).c_str());
        std::printf("abs_error %s\n", str(std::fabs(r.value - reference)).c_str());
        std::printf("rel_error %s\n",
                    str(std::fabs(r.value - reference) / std::fabs(reference)).c_str());
    }
    return 0;
}

int run_series(const std::string& id, const std::string& z_text, double zr, double alpha, int n,
               int terms, int order) {
    if (id == "2.14") {
        const Rat z = parse_rat(z_text);
        const auto [partial, rem] = analysis::reciprocal_series(z, n);
        std::printf("partial_sum %s\n", str(partial).c_str());
        std::printf("remainder %s\n", str(rem).c_str());
        std::printf("total %s\n", str(partial + rem).c_str());
        const bool ok = partial + rem == 1 / z;
        std::printf("identity_holds %s\n", ok ? "true" : "false");
        return ok ? 0 : 1;
    }
    if (id == "2.27") {
        const auto r = analysis::generalized_power_series(zr, alpha, terms);
        const double direct = std::pow(zr, alpha);
        std::printf("value %s\n", str(r.value).c_str());
        std::printf("direct_power %s\n", str(direct).c_str());
        std::printf("rel_residual %s\n",
                    str(std::fabs(r.value - direct) / std::fabs(direct)).c_str());
        std::printf("terms_used %d\n", r.terms_used);
        std::printf("stopping_rule %s (three consecutive terms below 1e-15 of the partial sum, "
                    "budget %d)\n",
                    r.converged ? "fired" : "budget-exhausted", terms);
        return 0;
    }
    if (id == "2.29") {
        const auto series = analysis::log_power_series(order);
        bool ok = true;
        for (int k = 0; k <= order; ++k) {
            std::printf("h_%d: %s\n", k, series[k].coeff_list().c_str());
            if (k <= 8) {
                Poly prod = Poly::constant(Rat(1));
                for (int j = 1; j <= k; ++j) prod = prod * Poly{Rat(j), Rat(-1)};
                ok = ok && series[k] * prod == stirling_poly::subset_upper_poly(k);
            }
        }
        std::printf("identity_holds %s\n", ok ? "true" : "false");
        return ok ? 0 : 1;
    }
    if (id == "2.21") {
        const bool ok = analysis::kramp_expansion_check(n, terms);
        std::printf("holds %s\n", ok ? "true" : "false");
        return ok ? 0 : 1;
    }
    throw domain_error("unknown series id '" + id + "' (expected 2.14|2.27|2.29|2.21)");
}

int run_verify(const std::string& suite, std::uint64_t seed, int max_n, int instances) {
    verify::Options opt;
    opt.seed = seed;
    opt.max_n = max_n;
    opt.instances = instances;
    const auto results = verify::run_suites(suite, opt);
    int failed = 0;
    for (const auto& r : results) {
        std::printf("%s %s — %s\n", r.pass ? "ok  " : "FAIL", r.name.c_str(), r.detail.c_str());
        if (!r.pass) ++failed;
    }
    std::printf("%zu checks, %d failed (suite %s, seed %llu)\n", results.size(), failed,
                suite.c_str(), static_cast<unsigned long long>(seed));
    return failed == 0 ? 0 : 1;
}

int run_oracle(const std::string& what, int n, int k, const std::string& poset_path, int fence,
               bool strict) {
    if (what == "perms") {
        std::printf("%s\n", oracles::count_perms_by_cycles(n, k).str().c_str());
        return 0;
    }
    if (what == "partitions") {
        std::printf("%s\n", oracles::count_set_partitions(n, k).str().c_str());
        return 0;
    }
    if (what == "esym") {
        std::printf("%s\n", oracles::elem_sym(n, k).str().c_str());
        return 0;
    }
    if (what == "hsym") {
        std::printf("%s\n", oracles::complete_hom(n, k).str().c_str());
        return 0;
    }
    if (what == "omega") {
        oracles::Poset p;
        if (fence > 0) {
            p = oracles::fence_poset(fence);
        } else if (!poset_path.empty()) {
            std::ifstream in(poset_path);
            if (!in) throw domain_error("cannot open poset file '" + poset_path + "'");
            p = oracles::parse_poset(in);
        } else {
            throw domain_error("omega needs --poset FILE or --fence K");
        }
        const Int count = strict ? oracles::omega_bar(p, n) : oracles::omega(p, n);
        std::printf("%s\n", count.str().c_str());
        return 0;
    }
    throw domain_error("unknown oracle '" + what + "' (expected perms|partitions|esym|hsym|omega)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Iverson-bracket and Stirling-number workbench"};
    app.require_subcommand(1);

    auto* table = app.add_subcommand("table", "print a window of a number table");
    std::string table_kind = "cycle", table_format = "tsv";
    std::int64_t nmin = 0, nmax = 0, kmin = 0, kmax = 0;
    table->add_option("--kind", table_kind, "cycle|subset|binomial")->required();
    table->add_option("--nmin", nmin)->required();
    table->add_option("--nmax", nmax)->required();
    table->add_option("--kmin", kmin)->required();
    table->add_option("--kmax", kmax)->required();
    table->add_option("--format", table_format, "tsv|json");

    auto* eval_cmd = app.add_subcommand("eval", "evaluate an expression exactly");
    std::string eval_text;
    std::vector<std::string> eval_binds;
    eval_cmd->add_option("expr", eval_text, "expression, e.g. \"cycle(4,2)\"")->required();
    eval_cmd->add_option("--bind", eval_binds, "variable binding name=value (repeatable)");

    auto* convert = app.add_subcommand("convert", "convert a polynomial between bases");
    std::string conv_poly, conv_from, conv_to;
    convert->add_option("--poly", conv_poly, "coefficient list, ascending, e.g. \"0,1,3,1\"")
        ->required();
    convert->add_option("--from", conv_from, "power|falling|rising")->required();
    convert->add_option("--to", conv_to, "power|falling|rising")->required();

    auto* asym = app.add_subcommand("asym", "asymptotic expansion of a real factorial power");
    double asym_alpha = 0.5, asym_z = 10.0;
    int asym_terms = 5;
    std::string asym_kind = "rising";
    bool asym_compare = false;
    asym->add_option("--alpha", asym_alpha)->required();
    asym->add_option("--z", asym_z)->required();
    asym->add_option("--terms", asym_terms)->required();
    asym->add_option("--kind", asym_kind, "rising|falling");
    asym->add_flag("--compare-gamma", asym_compare, "also print the log-gamma reference");

    auto* series = app.add_subcommand("series", "evaluate a catalogued series identity");
    std::string series_id, series_z = "1";
    double series_zr = 10.0, series_alpha = 0.5;
    int series_n = 1, series_terms = 200, series_order = 8;
    series->add_option("--id", series_id, "2.14|2.27|2.29|2.21")->required();
    series->add_option("--z", series_z, "rational z (id 2.14)");
    series->add_option("--zr", series_zr, "real z (id 2.27)");
    series->add_option("--alpha", series_alpha, "real exponent (id 2.27)");
    series->add_option("--n", series_n, "index parameter (ids 2.14, 2.21)");
    series->add_option("--terms", series_terms, "term budget (ids 2.27, 2.21)");
    series->add_option("--order", series_order, "truncation order (id 2.29)");

    auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
    std::string verify_suite = "all";
    std::uint64_t verify_seed = 42;
    int verify_max_n = 12, verify_instances = 200;
    verify_cmd->add_option("--suite", verify_suite, "iverson|stirling|analysis|oracles|all");
    verify_cmd->add_option("--seed", verify_seed, "seed for randomized instances");
    verify_cmd->add_option("--max-n", verify_max_n, "grid radius for recurrence checks");
    verify_cmd->add_option("--instances", verify_instances, "instances per catalogued identity");

    auto* oracle = app.add_subcommand("oracle", "run a brute-force enumeration");
    std::string oracle_what, oracle_poset;
    int oracle_n = 0, oracle_k = 0, oracle_fence = 0;
    bool oracle_strict = false;
    oracle->add_option("--what", oracle_what, "perms|partitions|esym|hsym|omega")->required();
    oracle->add_option("--n", oracle_n);
    oracle->add_option("--k", oracle_k);
    oracle->add_option("--poset", oracle_poset, "poset file: count, then 'a < b' lines");
    oracle->add_option("--fence", oracle_fence, "use the fence poset on 2k points");
    oracle->add_flag("--strict", oracle_strict, "count strictly order-preserving maps");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*table) return run_table(table_kind, nmin, nmax, kmin, kmax, table_format);
        if (*eval_cmd) return run_eval(eval_text, eval_binds);
        if (*convert) return run_convert(conv_poly, conv_from, conv_to);
        if (*asym) return run_asym(asym_alpha, asym_z, asym_terms, asym_kind, asym_compare);
        if (*series)
            return run_series(series_id, series_z, series_zr, series_alpha, series_n, series_terms,
                              series_order);
        if (*verify_cmd) return run_verify(verify_suite, verify_seed, verify_max_n, verify_instances);
        if (*oracle)
            return run_oracle(oracle_what, oracle_n, oracle_k, oracle_poset, oracle_fence,
                              oracle_strict);
    } catch (const cap_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const expr::parse_error& e) {
        std::fprintf(stderr, "%s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
