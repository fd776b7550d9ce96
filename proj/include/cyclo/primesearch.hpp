#pragma once

#include <cstdint>
#include <string>
#include <thread>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/integer.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/structure.hpp"

namespace cyclo {

// Exact value Phi_k(a^n).
inline Int eval_composition(std::uint64_t k, std::uint64_t a, std::uint64_t n) {
    if (k == 0 || a == 0 || n == 0)
        throw std::invalid_argument("eval_composition: k, a, n must be positive");
    return phi(k)(pow_u64(Int(a), n));
}

namespace detail {

// Base 2 plus the next forty primes. Below 2^64 the twelve-prime battery in
// is_prime_u64 is proven deterministic; above it this fixed set gives a
// reproducible strong-probable-prime verdict (no randomized bases, so runs
// are bit-identical).
constexpr std::uint64_t kWideBases[] = {
    2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,  43,
    47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101, 103, 107,
    109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167, 173, 179};

inline bool strong_probable_prime(const Int& n, std::uint64_t base) {
    // n odd, n >= 3
    Int d = n - 1;
    unsigned long s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    Int x = boost::multiprecision::powm(Int(base) % n, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (unsigned long r = 1; r < s; ++r) {
        x = x * x % n;
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace detail

// Probable-prime test behind every primality claim in this library:
// deterministic for N < 2^64, a fixed 41-base strong test beyond.
inline bool is_probable_prime(const Int& N) {
    if (N < 2)
        return false;
    static const Int kU64Max = Int(UINT64_MAX);
    if (N <= kU64Max)
        return is_prime_u64(N.convert_to<std::uint64_t>());
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                            29ull, 31ull, 37ull, 41ull, 43ull, 47ull, 53ull, 59ull, 61ull,
                            67ull, 71ull, 73ull, 79ull, 83ull, 89ull, 97ull})
        if (N % p == 0)
            return false; // N > 2^64 here, so equality with p is impossible
    for (std::uint64_t base : detail::kWideBases)
        if (!detail::strong_probable_prime(N, base))
            return false;
    return true;
}

// One search experiment: every a <= a_max with Phi_k(a^n) probable-prime.
struct PrimeSearchReport {
    std::uint64_t k = 0;
    std::uint64_t n = 0;
    std::uint64_t a_max = 0;
    std::vector<std::uint64_t> hits; // ascending
    bool irreducible = true;         // whether Phi_k(x^n) is irreducible
    std::string primality_mode;      // "deterministic<2^64" or "probable"

    friend bool operator==(const PrimeSearchReport&, const PrimeSearchReport&) = default;
};

// Tests a = 1..a_max in ascending order. With jobs > 1 the candidates are
// sharded across threads; every thread writes only its own slots, and the
// report is assembled by a single ascending sweep, so the result is identical
// for any job count.
inline PrimeSearchReport search_a(std::uint64_t k, std::uint64_t n, std::uint64_t a_max,
                                  unsigned jobs = 1) {
    if (k == 0 || n == 0)
        throw std::invalid_argument("search_a: k and n must be positive");
    PrimeSearchReport report;
    report.k = k;
    report.n = n;
    report.a_max = a_max;
    report.irreducible = is_irreducible_composition(k, n);

    const Polynomial pk = phi(k);
    static const Int kU64Max = Int(UINT64_MAX);
    std::vector<std::uint8_t> hit(a_max + 1, 0);
    std::vector<std::uint8_t> wide(a_max + 1, 0);
    auto probe = [&](std::uint64_t a) {
        const Int value = pk(pow_u64(Int(a), n));
        if (value > kU64Max)
            wide[a] = 1;
        if (is_probable_prime(value))
            hit[a] = 1;
    };

    if (jobs <= 1 || a_max <= 1) {
        for (std::uint64_t a = 1; a <= a_max; ++a)
            probe(a);
    } else {
        const unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(jobs, a_max));
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned t = 0; t < workers; ++t)
            pool.emplace_back([&, t] {
                for (std::uint64_t a = 1 + t; a <= a_max; a += workers)
                    probe(a);
            });
        for (auto& th : pool)
            th.join();
    }

    bool any_wide = false;
    for (std::uint64_t a = 1; a <= a_max; ++a) {
        if (hit[a])
            report.hits.push_back(a);
        any_wide = any_wide || wide[a];
    }
    report.primality_mode = any_wide ? "probable" : "deterministic<2^64";
    return report;
}

// One row of the fixed-base experiment: n = radical(k)^j.
struct ExponentSearchEntry {
    std::uint64_t j = 0;
    std::uint64_t n = 1;
    bool probable_prime = false;

    friend bool operator==(const ExponentSearchEntry&, const ExponentSearchEntry&) = default;
};

// Fixes the base a and walks the exponents n = radical(k)^j for j = 0..j_max,
// the only exponents for which Phi_k(x^n) stays irreducible.
inline std::vector<ExponentSearchEntry> search_n(std::uint64_t k, std::uint64_t a,
                                                 std::uint64_t j_max) {
    if (k < 2 || a < 2)
        throw std::invalid_argument("search_n: requires k >= 2 and a >= 2");
    const std::uint64_t r = radical(factorize(k));
    const Polynomial pk = phi(k);
    std::vector<ExponentSearchEntry> out;
    std::uint64_t n = 1;
    for (std::uint64_t j = 0;; ++j) {
        const Int value = pk(pow_u64(Int(a), n));
        out.push_back({j, n, is_probable_prime(value)});
        if (j == j_max)
            break;
        n = checked_mul_u64(n, r);
    }
    return out;
}

struct MersenneCheck {
    Int value;            // 2^p - 1
    bool reducible = true; // whether x^p - 1 is reducible (it is, for p > 1)
};

// The exceptional case where a reducible polynomial still yields primes:
// x^p - 1 always splits as Phi_1 * Phi_p, yet 2^p - 1 can be prime.
inline MersenneCheck mersenne_remark_check(std::uint64_t p) {
    if (!is_prime_u64(p))
        throw std::invalid_argument("mersenne_remark_check: p must be prime");
    MersenneCheck r;
    r.value = pow_u64(Int(2), p) - 1;
    r.reducible = factor_composition(1, p).factor_count() > 1;
    return r;
}

} // namespace cyclo
