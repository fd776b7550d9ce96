#include <catch2/catch_amalgamated.hpp>

#include <string>
#include <vector>

#include "cyclo/cyclotomic.hpp"

using namespace cyclo;

namespace {

// The first twenty cyclotomic polynomials in canonical text form.
const std::vector<std::string> kFirstTwenty = {
    "x - 1",
    "x + 1",
    "x^2 + x + 1",
    "x^2 + 1",
    "x^4 + x^3 + x^2 + x + 1",
    "x^2 - x + 1",
    "x^6 + x^5 + x^4 + x^3 + x^2 + x + 1",
    "x^4 + 1",
    "x^6 + x^3 + 1",
    "x^4 - x^3 + x^2 - x + 1",
    "x^10 + x^9 + x^8 + x^7 + x^6 + x^5 + x^4 + x^3 + x^2 + x + 1",
    "x^4 - x^2 + 1",
    "x^12 + x^11 + x^10 + x^9 + x^8 + x^7 + x^6 + x^5 + x^4 + x^3 + x^2 + x + 1",
    "x^6 - x^5 + x^4 - x^3 + x^2 - x + 1",
    "x^8 - x^7 + x^5 - x^4 + x^3 - x + 1",
    "x^8 + 1",
    "x^16 + x^15 + x^14 + x^13 + x^12 + x^11 + x^10 + x^9 + x^8 + x^7 + x^6 + x^5 + x^4 + x^3"
    " + x^2 + x + 1",
    "x^6 - x^3 + 1",
    "x^18 + x^17 + x^16 + x^15 + x^14 + x^13 + x^12 + x^11 + x^10 + x^9 + x^8 + x^7 + x^6 + x^5"
    " + x^4 + x^3 + x^2 + x + 1",
    "x^8 - x^6 + x^4 - x^2 + 1",
};

} // namespace

TEST_CASE("the first twenty cyclotomic polynomials") {
    for (std::uint64_t n = 1; n <= 20; ++n) {
        CAPTURE(n);
        CHECK(to_string(phi(n)) == kFirstTwenty[n - 1]);
        CHECK(to_string(phi_recursive(n)) == kFirstTwenty[n - 1]);
        CHECK(to_string(phi_mobius(n)) == kFirstTwenty[n - 1]);
    }
}

TEST_CASE("phi_recursive basics") {
    CHECK(phi_recursive(1) == Polynomial{-1, 1});
    CHECK(phi_recursive(12) == Polynomial{1, 0, -1, 0, 1});
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 31}) {
        std::vector<Int> all_ones(p, 1);
        CHECK(phi_recursive(p) == Polynomial(std::move(all_ones)));
    }
    CHECK_THROWS_AS(phi_recursive(0), std::invalid_argument);
}

TEST_CASE("phi_mobius basics") {
    CHECK(phi_mobius(6) == Polynomial{1, -1, 1});
    CHECK(phi_mobius(15) == Polynomial{1, -1, 0, 1, -1, 1, 0, -1, 1});
    // first index whose coefficients leave {-1, 0, 1}
    const Polynomial p105 = phi_mobius(105);
    CHECK(p105.coeff(7) == -2);
    CHECK(p105 == phi_recursive(105));
    CHECK_THROWS_AS(phi_mobius(0), std::invalid_argument);
}

TEST_CASE("phi radical-reduction entry point") {
    CHECK(phi(9) == Polynomial{1, 0, 0, 1, 0, 0, 1});
    CHECK(phi(16) == Polynomial{1, 0, 0, 0, 0, 0, 0, 0, 1});
    CHECK(phi(20) == Polynomial{1, 0, -1, 0, 1, 0, -1, 0, 1});
    CHECK_THROWS_AS(phi(0), std::invalid_argument);
}

TEST_CASE("three algorithms agree up to 300, with degree totient(n)") {
    for (std::uint64_t n = 1; n <= 300; ++n) {
        CAPTURE(n);
        const Polynomial a = phi_recursive(n);
        REQUIRE(a == phi_mobius(n));
        REQUIRE(a == phi(n));
        REQUIRE(static_cast<std::uint64_t>(a.degree()) == totient(factorize(n)));
        REQUIRE(a.is_monic());
        REQUIRE(a.content() == 1);
    }
}

TEST_CASE("divisor product rebuilds x^n - 1 up to 100") {
    for (std::uint64_t n = 1; n <= 100; ++n) {
        Polynomial prod = Polynomial::one();
        for (std::uint64_t d : divisors(factorize(n)))
            prod = prod * phi(d);
        REQUIRE(prod == Polynomial::x_power_minus_one(n));
    }
}

TEST_CASE("identify_cyclotomic") {
    CHECK(identify_cyclotomic(Polynomial{1, -1, 1}) == 6);
    CHECK_FALSE(identify_cyclotomic(Polynomial{2, 0, 1}).has_value());
    CHECK(identify_cyclotomic(Polynomial{-1, 1}) == 1);
    CHECK(identify_cyclotomic(Polynomial{1, 1}) == 2);
    CHECK_FALSE(identify_cyclotomic(Polynomial{}).has_value());
    CHECK_FALSE(identify_cyclotomic(Polynomial{5}).has_value());
    CHECK_FALSE(identify_cyclotomic(Polynomial{1, 2}).has_value());   // not monic
    CHECK_FALSE(identify_cyclotomic(Polynomial{1, 1, 3, 1}).has_value());
}

TEST_CASE("identify_cyclotomic inverts phi up to 150") {
    for (std::uint64_t n = 1; n <= 150; ++n) {
        CAPTURE(n);
        REQUIRE(identify_cyclotomic(phi(n)) == n);
    }
}

TEST_CASE("values at 1: p on prime powers, 1 elsewhere") {
    CHECK(phi(1)(Int(1)) == 0);
    for (std::uint64_t n = 2; n <= 500; ++n) {
        CAPTURE(n);
        const FactoredInt f = factorize(n);
        const Int expected = f.factors.size() == 1 ? Int(f.factors.begin()->first) : Int(1);
        REQUIRE(phi(n)(Int(1)) == expected);
    }
}

TEST_CASE("coefficients are palindromic for n > 1") {
    for (std::uint64_t n = 2; n <= 500; ++n) {
        CAPTURE(n);
        const Polynomial p = phi(n);
        const auto deg = static_cast<std::size_t>(p.degree());
        for (std::size_t i = 0; i <= deg / 2; ++i)
            REQUIRE(p.coeff(i) == p.coeff(deg - i));
    }
}
