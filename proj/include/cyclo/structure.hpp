#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/polynomial.hpp"

namespace cyclo {

// The composition Phi_k(x^n) together with its derived decomposition data:
// m collects the part of n supported on the primes of k, N = n/m is the part
// coprime to k, and lambda = k*n is the index Phi_k(x^n) collapses to when it
// is irreducible.
struct CompositionSpec {
    std::uint64_t k = 1;
    std::uint64_t n = 1;
    std::uint64_t m = 1;
    std::uint64_t N = 1;
    std::uint64_t lambda = 1;

    CompositionSpec(std::uint64_t k_, std::uint64_t n_) : k(k_), n(n_) {
        if (k == 0 || n == 0)
            throw std::invalid_argument("CompositionSpec: k and n must be positive");
        for (const auto& [p, e] : factorize(k).factors) {
            std::uint64_t pe = 1;
            for (std::uint64_t i = 0, o = ord_p(n, p); i < o; ++i)
                pe *= p;
            m = checked_mul_u64(m, pe);
        }
        N = n / m;
        lambda = checked_mul_u64(k, n);
    }
};

// A product of cyclotomic polynomials, held symbolically as index ->
// multiplicity. Indices are ascending, multiplicities positive.
struct CycloProduct {
    std::map<std::uint64_t, std::uint64_t> entries;

    // Number of factors counted with multiplicity.
    std::uint64_t factor_count() const {
        std::uint64_t c = 0;
        for (const auto& [idx, mult] : entries)
            c += mult;
        return c;
    }

    // Degree of the expanded product: sum of multiplicity * totient(index).
    std::uint64_t total_degree() const {
        std::uint64_t d = 0;
        for (const auto& [idx, mult] : entries)
            d += checked_mul_u64(mult, totient(factorize(idx)));
        return d;
    }

    // e.g. "Phi_9 * Phi_18 * Phi_36"; powers render as "Phi_3^2"; the empty
    // product is "1".
    std::string to_text() const {
        if (entries.empty())
            return "1";
        std::string out;
        for (const auto& [idx, mult] : entries) {
            if (!out.empty())
                out += " * ";
            out += "Phi_" + std::to_string(idx);
            if (mult > 1)
                out += "^" + std::to_string(mult);
        }
        return out;
    }

    friend bool operator==(const CycloProduct&, const CycloProduct&) = default;

    friend CycloProduct operator*(const CycloProduct& a, const CycloProduct& b) {
        CycloProduct r = a;
        for (const auto& [idx, mult] : b.entries)
            r.entries[idx] += mult;
        return r;
    }

    // Multiset quotient; throws if any multiplicity would go negative.
    friend CycloProduct operator/(const CycloProduct& a, const CycloProduct& b) {
        CycloProduct r = a;
        for (const auto& [idx, mult] : b.entries) {
            auto it = r.entries.find(idx);
            if (it == r.entries.end() || it->second < mult)
                throw std::domain_error("CycloProduct: quotient would have negative multiplicity");
            it->second -= mult;
            if (it->second == 0)
                r.entries.erase(it);
        }
        return r;
    }
};

// {d : 1 for every divisor d of v} — the factorization of x^v - 1.
inline CycloProduct divisor_product(std::uint64_t v) {
    CycloProduct r;
    for (std::uint64_t d : divisors(factorize(v)))
        r.entries[d] = 1;
    return r;
}

// Whether Phi_k(x^n) is irreducible: true exactly when every prime of n
// already divides k. k = 1 is the stated exception (x^n - 1 is reducible for
// every n > 1).
inline bool is_irreducible_composition(std::uint64_t k, std::uint64_t n) {
    if (k == 0 || n == 0)
        throw std::invalid_argument("is_irreducible_composition: k and n must be positive");
    if (k == 1)
        return n == 1;
    for (const auto& [p, e] : factorize(n).factors)
        if (k % p != 0)
            return false;
    return true;
}

// The degree criterion: Phi_kn always divides Phi_k(x^n), so the composition
// is irreducible exactly when the two have equal degree, i.e.
// totient(k*n) == n * totient(k). Evaluated exactly and independently of the
// prime-divisor predicate so the two genuinely cross-check each other.
inline bool golomb_condition(std::uint64_t k, std::uint64_t n) {
    if (k < 2 || n == 0)
        throw std::invalid_argument("golomb_condition: requires k >= 2 and n >= 1");
    const std::uint64_t lhs = totient(factorize(checked_mul_u64(k, n)));
    const unsigned __int128 rhs = static_cast<unsigned __int128>(n) * totient(factorize(k));
    return static_cast<unsigned __int128>(lhs) == rhs;
}

// Complete cyclotomic factorization of Phi_k(x^n): the indices k*m*d for the
// divisors d of N, each with multiplicity 1. Its size is tau(N).
inline CycloProduct factor_composition(std::uint64_t k, std::uint64_t n) {
    const CompositionSpec spec(k, n);
    CycloProduct r;
    const std::uint64_t km = checked_mul_u64(spec.k, spec.m);
    for (std::uint64_t d : divisors(factorize(spec.N)))
        r.entries[checked_mul_u64(km, d)] = 1;
    return r;
}

// The same factorization for prime k = p, derived instead as the divisor-set
// difference coming from x^(p*n) - 1 = (x^n - 1) * Phi_p(x^n).
inline CycloProduct factor_prime_quotient(std::uint64_t p, std::uint64_t n) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("factor_prime_quotient: p must be prime");
    if (n == 0)
        throw std::invalid_argument("factor_prime_quotient: n must be positive");
    return divisor_product(checked_mul_u64(p, n)) / divisor_product(n);
}

// Expanded integer polynomial of the symbolic product.
inline Polynomial expand_product(const CycloProduct& f) {
    Polynomial r = Polynomial::one();
    for (const auto& [idx, mult] : f.entries) {
        const Polynomial factor = phi(idx);
        for (std::uint64_t i = 0; i < mult; ++i)
            r = r * factor;
    }
    return r;
}

struct LemmaCheck {
    bool predicted = false; // gcd(n, k) == 1
    bool verified = false;  // Phi_k(x) actually divides Phi_k(x^n)

    friend bool operator==(const LemmaCheck&, const LemmaCheck&) = default;
};

// Divisibility criterion Phi_k | Phi_k(x^n) iff gcd(n, k) = 1, checked both
// by the gcd and by carrying out the division. The two answers must agree;
// returning both keeps the contract testable.
inline LemmaCheck divides_lemma_check(std::uint64_t k, std::uint64_t n) {
    if (k == 0 || n == 0)
        throw std::invalid_argument("divides_lemma_check: k and n must be positive");
    const Polynomial pk = phi(k);
    LemmaCheck r;
    r.predicted = std::gcd(n, k) == 1;
    r.verified = try_exact_div(compose_power(pk, n), pk).has_value();
    return r;
}

// Indices j of the monic irreducible solutions p = Phi_j of
// p(t) | p(t^exponent): exactly those with totient(j) == degree and
// gcd(j, exponent) == 1.
inline std::vector<std::uint64_t> millennial_solutions(std::uint64_t degree, std::uint64_t exponent) {
    if (degree == 0 || exponent < 2)
        throw std::invalid_argument("millennial_solutions: requires degree >= 1 and exponent >= 2");
    return inverse_totient(degree, exponent);
}

} // namespace cyclo
