#include <catch2/catch_amalgamated.hpp>

#include <sstream>

#include "cyclo/verify.hpp"

using namespace cyclo;

TEST_CASE("all suites pass at the default bounds") {
    VerifyOptions opt;
    opt.max_n = 60;
    opt.max_kn = 25;
    const auto results = run_verify_suites(opt);
    REQUIRE(results.size() == 11);
    for (const auto& r : results) {
        CAPTURE(r.name);
        CHECK(r.passed());
        CHECK(r.checked > 0);
    }
    std::ostringstream os;
    CHECK(print_verify_report(results, os));
    CHECK(os.str().find("all suites passed") != std::string::npos);
    CHECK(os.str().find("FAILED") == std::string::npos);
}

TEST_CASE("trivial bounds pass") {
    VerifyOptions opt;
    opt.max_n = 1;
    opt.max_kn = 1;
    for (const auto& r : run_verify_suites(opt))
        CHECK(r.passed());
}

TEST_CASE("a corrupted polynomial is caught and named") {
    VerifyOptions opt;
    opt.max_n = 30;
    opt.max_kn = 5;
    opt.tamper = [](std::uint64_t n, Polynomial& p) {
        if (n == 12)
            p = p + Polynomial{1}; // corrupt exactly one table entry
    };
    const auto results = run_verify_suites(opt);
    const auto& cross = results.front();
    REQUIRE(cross.name == "cross-algorithm");
    REQUIRE_FALSE(cross.passed());
    CHECK(cross.failure->find("n=12") != std::string::npos);
    CHECK(cross.checked == 11); // stopped at the corrupted instance

    std::ostringstream os;
    CHECK_FALSE(print_verify_report(results, os));
    CHECK(os.str().find("cross-algorithm: FAILED at n=12") != std::string::npos);
}
