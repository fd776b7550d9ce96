#include <catch2/catch_amalgamated.hpp>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/serialize.hpp"

#ifndef CYCLO_CLI_PATH
#error "CYCLO_CLI_PATH must point at the built cyclo binary"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;

    friend bool operator==(const RunResult&, const RunResult&) = default;
    friend std::ostream& operator<<(std::ostream& os, const RunResult& r) {
        return os << "exit " << r.exit_code << ", output " << Catch::Detail::stringify(r.output);
    }
};

// Runs the cyclo binary with the given arguments; stdout only unless
// merge_stderr is set.
RunResult run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd =
        std::string(CYCLO_CLI_PATH) + " " + args + (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        r.output.append(buf.data(), got);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

} // namespace

TEST_CASE("phi subcommand") {
    CHECK(run_cli("phi 12") == RunResult{0, "x^4 - x^2 + 1\n"});
    CHECK(run_cli("phi 1") == RunResult{0, "x - 1\n"});
    CHECK(run_cli("phi 12 --json") == RunResult{0, "[\"1\",\"0\",\"-1\",\"0\",\"1\"]\n"});
    CHECK(run_cli("phi 0").exit_code == 2);
    CHECK(run_cli("phi").exit_code == 2);
    CHECK(run_cli("phi twelve").exit_code == 2);
    CHECK(run_cli("phi 99999999999999999999").exit_code == 2); // > 64 bits
}

TEST_CASE("factor subcommand") {
    CHECK(run_cli("factor 3 12") == RunResult{0, "Phi_9 * Phi_18 * Phi_36\n"});
    CHECK(run_cli("factor 6 7") == RunResult{0, "Phi_6 * Phi_42\n"});
    CHECK(run_cli("factor 2 1") == RunResult{0, "Phi_2\n"});
    CHECK(run_cli("factor 3 0").exit_code == 2);

    const RunResult expanded = run_cli("factor 3 2 --expand");
    CHECK(expanded.exit_code == 0);
    CHECK(expanded.output == "Phi_3 * Phi_6\n"
                             "Phi_3 = x^2 + x + 1\n"
                             "Phi_6 = x^2 - x + 1\n"
                             "product = x^4 + x^2 + 1\n");

    const RunResult json = run_cli("factor 3 12 --json");
    CHECK(json.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json.output);
    REQUIRE(parsed.is_array());
    REQUIRE(parsed.size() == 3);
    CHECK(parsed[0]["index"] == 9);
    CHECK(parsed[2]["index"] == 36);

    const RunResult json_expand = run_cli("factor 3 2 --expand --json");
    CHECK(json_expand.exit_code == 0);
    const auto je = nlohmann::json::parse(json_expand.output);
    CHECK(je["factors"].size() == 2);
    CHECK(je["expansions"].size() == 2);
    CHECK(je["product"] == nlohmann::json({"1", "0", "1", "0", "1"}));
}

TEST_CASE("irred subcommand") {
    CHECK(run_cli("irred 3 9") == RunResult{0, "irreducible\n"});
    CHECK(run_cli("irred 3 5") == RunResult{1, "reducible: 2 factors\n"});
    CHECK(run_cli("irred 1 1") == RunResult{0, "irreducible\n"});
    CHECK(run_cli("irred 1 12") == RunResult{1, "reducible: 6 factors\n"});
    CHECK(run_cli("irred 3 12") == RunResult{1, "reducible: 3 factors\n"});
    CHECK(run_cli("irred x 1").exit_code == 2);
}

TEST_CASE("identify subcommand") {
    CHECK(run_cli("identify \"x^2 - x + 1\"") == RunResult{0, "Phi_6\n"});
    CHECK(run_cli("identify \"x^2 + 2\"") == RunResult{1, "not cyclotomic\n"});
    CHECK(run_cli("identify \"x - 1\"") == RunResult{0, "Phi_1\n"});

    const RunResult bad = run_cli("identify \"x^^2\"", true);
    CHECK(bad.exit_code == 2);
    CHECK(bad.output.find("position 2") != std::string::npos);
}

TEST_CASE("eval subcommand") {
    CHECK(run_cli("eval 3 2 9") == RunResult{0, "262657\n"});
    CHECK(run_cli("eval 3 2 9 --prime-check") == RunResult{0, "262657\nprime\n"});
    CHECK(run_cli("eval 4 2 4 --prime-check") == RunResult{0, "257\nprime\n"});
    CHECK(run_cli("eval 1 2 5 --prime-check") == RunResult{0, "31\nprime\n"});

    const RunResult composite = run_cli("eval 3 4 1 --prime-check"); // 21 = 3 * 7
    CHECK(composite == RunResult{1, "21\ncomposite\n"});

    const RunResult wide = run_cli("eval 3 2 64 --prime-check"); // 2^128 + 2^64 + 1 = Phi_192(2)
    CHECK(wide.exit_code == 1);
    CHECK(wide.output == "340282366920938463481821351505477763073\ncomposite\n");

    const RunResult wide_prime = run_cli("eval 2 2 89 --prime-check"); // 2^89 + 1 is composite
    CHECK(wide_prime.exit_code == 1);
}

TEST_CASE("search subcommand") {
    const RunResult r = run_cli("search --k 3 --n 3 --a-max 100");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "k: 3\n"
                      "n: 3\n"
                      "a_max: 100\n"
                      "reducible: no\n"
                      "primality_mode: deterministic<2^64\n"
                      "hits: 1 2 3 8 11 20 21 26 30 50 51 56 60 78 98\n"
                      "count: 15\n");

    const RunResult reducible = run_cli("search --k 3 --n 2 --a-max 10");
    CHECK(reducible.output.find("reducible: yes\n") != std::string::npos);

    const RunResult json = run_cli("search --k 3 --n 3 --a-max 100 --json");
    CHECK(json.exit_code == 0);
    const auto parsed = nlohmann::json::parse(json.output);
    CHECK(parsed["k"] == 3);
    CHECK(parsed["count"] == 15);
    CHECK(parsed["hits"].size() == 15);
    CHECK(parsed["primality_mode"] == "deterministic<2^64");

    CHECK(run_cli("search --k 3 --a-max 10").exit_code == 2); // --n missing
    CHECK(run_cli("search --k 3 --n 1 --a-max 10 --bogus 1").exit_code == 2);
}

TEST_CASE("search output is byte-identical across job counts") {
    const RunResult serial = run_cli("search --k 3 --n 3 --a-max 200 --jobs 1");
    for (const char* jobs : {"2", "5", "8"}) {
        const RunResult parallel =
            run_cli(std::string("search --k 3 --n 3 --a-max 200 --jobs ") + jobs);
        REQUIRE(parallel.exit_code == 0);
        REQUIRE(parallel.output == serial.output);
    }
}

TEST_CASE("verify subcommand") {
    const RunResult ok = run_cli("verify --max-n 40 --max-kn 12");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("cross-algorithm: 40 instances ok\n") != std::string::npos);
    CHECK(ok.output.find("all suites passed\n") != std::string::npos);

    CHECK(run_cli("verify --max-n 1").exit_code == 0);
    CHECK(run_cli("verify --max-n 0").exit_code == 2);
}

TEST_CASE("usage errors") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate 3").exit_code == 2);
    CHECK(run_cli("phi 3 --frobnicate").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("JSON output round-trips through the documented schemas") {
    const RunResult phi_out = run_cli("phi 105 --json");
    REQUIRE(phi_out.exit_code == 0);
    CHECK(cyclo::polynomial_from_json(cyclo::Json::parse(phi_out.output)) == cyclo::phi(105));

    const RunResult factor_out = run_cli("factor 6 20 --json");
    REQUIRE(factor_out.exit_code == 0);
    CHECK(cyclo::cyclo_product_from_json(cyclo::Json::parse(factor_out.output)) ==
          cyclo::factor_composition(6, 20));

    const RunResult search_out = run_cli("search --k 3 --n 1 --a-max 50 --json");
    REQUIRE(search_out.exit_code == 0);
    const cyclo::PrimeSearchReport report =
        cyclo::report_from_json(cyclo::Json::parse(search_out.output));
    CHECK(report == cyclo::search_a(3, 1, 50));

    // and the identified name agrees with what was printed
    const RunResult name = run_cli("identify \"" + cyclo::to_string(cyclo::phi(105)) + "\"");
    CHECK(name == RunResult{0, "Phi_105\n"});
}
