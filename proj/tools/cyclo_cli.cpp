// cyclo: command-line front end for the cyclotomic polynomial toolkit.
//
// Exit codes follow one convention across subcommands so they compose in
// shell pipelines: 0 success or affirmative verdict, 1 negative verdict or
// failed verification, 2 usage or parse error.

#include <cstdint>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/polynomial.hpp"
#include "cyclo/primesearch.hpp"
#include "cyclo/serialize.hpp"
#include "cyclo/structure.hpp"
#include "cyclo/verify.hpp"

namespace {

int run_phi(std::uint64_t n, bool json) {
    const cyclo::Polynomial p = cyclo::phi(n);
    if (json)
        std::cout << cyclo::to_json(p).dump() << "\n";
    else
        std::cout << cyclo::to_string(p) << "\n";
    return 0;
}

int run_factor(std::uint64_t k, std::uint64_t n, bool expand, bool json) {
    const cyclo::CycloProduct factors = cyclo::factor_composition(k, n);
    if (!expand) {
        if (json)
            std::cout << cyclo::to_json(factors).dump() << "\n";
        else
            std::cout << factors.to_text() << "\n";
        return 0;
    }

    const cyclo::Polynomial product = cyclo::expand_product(factors);
    const cyclo::Polynomial expected = cyclo::compose_power(cyclo::phi(k), n);
    if (product != expected) {
        std::cerr << "error: expanded product does not match Phi_" << k << "(x^" << n
                  << "); arithmetic is inconsistent\n";
        return 1;
    }
    if (json) {
        cyclo::Json j;
        j["factors"] = cyclo::to_json(factors);
        cyclo::Json expansions = cyclo::Json::array();
        for (const auto& [idx, mult] : factors.entries) {
            cyclo::Json e;
            e["index"] = idx;
            e["multiplicity"] = mult;
            e["coefficients"] = cyclo::to_json(cyclo::phi(idx));
            expansions.push_back(std::move(e));
        }
        j["expansions"] = std::move(expansions);
        j["product"] = cyclo::to_json(product);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << factors.to_text() << "\n";
        for (const auto& [idx, mult] : factors.entries)
            std::cout << "Phi_" << idx << " = " << cyclo::to_string(cyclo::phi(idx)) << "\n";
        std::cout << "product = " << cyclo::to_string(product) << "\n";
    }
    return 0;
}

int run_irred(std::uint64_t k, std::uint64_t n) {
    if (cyclo::is_irreducible_composition(k, n)) {
        std::cout << "irreducible\n";
        return 0;
    }
    const cyclo::CompositionSpec spec(k, n);
    std::cout << "reducible: " << cyclo::tau(cyclo::factorize(spec.N)) << " factors\n";
    return 1;
}

int run_identify(const std::string& text) {
    cyclo::Polynomial p;
    try {
        p = cyclo::parse_polynomial(text);
    } catch (const cyclo::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (auto n = cyclo::identify_cyclotomic(p)) {
        std::cout << "Phi_" << *n << "\n";
        return 0;
    }
    std::cout << "not cyclotomic\n";
    return 1;
}

int run_eval(std::uint64_t k, std::uint64_t a, std::uint64_t n, bool prime_check) {
    const cyclo::Int value = cyclo::eval_composition(k, a, n);
    std::cout << value.str() << "\n";
    if (!prime_check)
        return 0;
    const bool prime = cyclo::is_probable_prime(value);
    if (!prime) {
        std::cout << "composite\n";
        return 1;
    }
    std::cout << (value > cyclo::Int(UINT64_MAX) ? "probable prime" : "prime") << "\n";
    return 0;
}

int run_search(std::uint64_t k, std::uint64_t n, std::uint64_t a_max, unsigned jobs, bool json) {
    const cyclo::PrimeSearchReport report = cyclo::search_a(k, n, a_max, jobs);
    if (json) {
        std::cout << cyclo::to_json(report).dump() << "\n";
        return 0;
    }
    std::cout << "k: " << report.k << "\n";
    std::cout << "n: " << report.n << "\n";
    std::cout << "a_max: " << report.a_max << "\n";
    std::cout << "reducible: " << (report.irreducible ? "no" : "yes") << "\n";
    std::cout << "primality_mode: " << report.primality_mode << "\n";
    std::cout << "hits:";
    for (std::uint64_t a : report.hits)
        std::cout << " " << a;
    std::cout << "\n";
    std::cout << "count: " << report.hits.size() << "\n";
    return 0;
}

int run_verify(std::uint64_t max_n, std::uint64_t max_kn) {
    cyclo::VerifyOptions opt;
    opt.max_n = max_n;
    opt.max_kn = max_kn;
    return cyclo::print_verify_report(cyclo::run_verify_suites(opt), std::cout) ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cyclotomic polynomial toolkit: exact computation, factorization,\n"
                 "irreducibility of Phi_k(x^n), and prime-value searches"};
    app.require_subcommand(1);

    const auto positive = CLI::Range(std::uint64_t{1}, UINT64_MAX);

    // phi <n> [--json]
    auto* phi_cmd = app.add_subcommand("phi", "print the cyclotomic polynomial Phi_n");
    std::uint64_t phi_n = 1;
    bool phi_json = false;
    phi_cmd->add_option("n", phi_n, "index n >= 1")->required()->check(positive);
    phi_cmd->add_flag("--json", phi_json, "emit coefficients as a JSON array");

    // factor <k> <n> [--expand] [--json]
    auto* factor_cmd = app.add_subcommand("factor", "cyclotomic factorization of Phi_k(x^n)");
    std::uint64_t factor_k = 1, factor_n = 1;
    bool factor_expand = false, factor_json = false;
    factor_cmd->add_option("k", factor_k, "index k >= 1")->required()->check(positive);
    factor_cmd->add_option("n", factor_n, "exponent n >= 1")->required()->check(positive);
    factor_cmd->add_flag("--expand", factor_expand, "also print each factor and the product");
    factor_cmd->add_flag("--json", factor_json, "emit JSON");

    // irred <k> <n>
    auto* irred_cmd = app.add_subcommand("irred", "decide whether Phi_k(x^n) is irreducible");
    std::uint64_t irred_k = 1, irred_n = 1;
    irred_cmd->add_option("k", irred_k, "index k >= 1")->required()->check(positive);
    irred_cmd->add_option("n", irred_n, "exponent n >= 1")->required()->check(positive);

    // identify "<polynomial>"
    auto* identify_cmd = app.add_subcommand("identify", "name a polynomial as Phi_n if it is one");
    std::string identify_text;
    identify_cmd->add_option("polynomial", identify_text, "polynomial text, e.g. \"x^2 - x + 1\"")
        ->required();

    // eval <k> <a> <n> [--prime-check]
    auto* eval_cmd = app.add_subcommand("eval", "evaluate Phi_k(a^n) exactly");
    std::uint64_t eval_k = 1, eval_a = 1, eval_n = 1;
    bool eval_prime = false;
    eval_cmd->add_option("k", eval_k, "index k >= 1")->required()->check(positive);
    eval_cmd->add_option("a", eval_a, "base a >= 1")->required()->check(positive);
    eval_cmd->add_option("n", eval_n, "exponent n >= 1")->required()->check(positive);
    eval_cmd->add_flag("--prime-check", eval_prime, "also test the value for primality");

    // search --k K --n N --a-max M [--jobs J] [--json]
    auto* search_cmd = app.add_subcommand("search", "find a <= a-max with Phi_k(a^n) probable prime");
    std::uint64_t search_k = 1, search_n = 1, search_amax = 1;
    unsigned search_jobs = 1;
    bool search_json = false;
    search_cmd->add_option("--k", search_k, "index k >= 1")->required()->check(positive);
    search_cmd->add_option("--n", search_n, "exponent n >= 1")->required()->check(positive);
    search_cmd->add_option("--a-max", search_amax, "largest base to test")->required()->check(positive);
    search_cmd->add_option("--jobs", search_jobs, "worker threads (output is independent of this)")
        ->check(CLI::Range(1u, 1024u));
    search_cmd->add_flag("--json", search_json, "emit the report as JSON");

    // verify [--max-n B1] [--max-kn B2]
    auto* verify_cmd = app.add_subcommand("verify", "run the identity and consistency suites");
    std::uint64_t verify_max_n = 200, verify_max_kn = 60;
    verify_cmd->add_option("--max-n", verify_max_n, "bound for single-index suites")->check(positive);
    verify_cmd->add_option("--max-kn", verify_max_kn, "bound for (k, n) grid suites")->check(positive);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(phi_cmd))
            return run_phi(phi_n, phi_json);
        if (app.got_subcommand(factor_cmd))
            return run_factor(factor_k, factor_n, factor_expand, factor_json);
        if (app.got_subcommand(irred_cmd))
            return run_irred(irred_k, irred_n);
        if (app.got_subcommand(identify_cmd))
            return run_identify(identify_text);
        if (app.got_subcommand(eval_cmd))
            return run_eval(eval_k, eval_a, eval_n, eval_prime);
        if (app.got_subcommand(search_cmd))
            return run_search(search_k, search_n, search_amax, search_jobs, search_json);
        if (app.got_subcommand(verify_cmd))
            return run_verify(verify_max_n, verify_max_kn);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
