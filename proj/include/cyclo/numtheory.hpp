#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "cyclo/integer.hpp"

namespace cyclo {

// ---------------------------------------------------------------------------
// 64-bit modular arithmetic and primality
// ---------------------------------------------------------------------------

inline std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e != 0) {
        if (e & 1)
            r = mul_mod_u64(r, a, m);
        a = mul_mod_u64(a, a, m);
        e >>= 1;
    }
    return r;
}

namespace detail {

inline bool strong_probable_prime_u64(std::uint64_t n, std::uint64_t base) {
    // n odd, n >= 3
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    std::uint64_t x = pow_mod_u64(base % n, d, n);
    if (x == 1 || x == n - 1)
        return true;
    for (int r = 1; r < s; ++r) {
        x = mul_mod_u64(x, x, n);
        if (x == n - 1)
            return true;
    }
    return false;
}

} // namespace detail

// Deterministic Miller-Rabin over the full 64-bit range: the first twelve
// primes as bases are known to have no composite survivor below 3.3e24.
inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == p)
            return true;
        if (n % p == 0)
            return false;
    }
    for (std::uint64_t base : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (!detail::strong_probable_prime_u64(n, base))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// FactoredInt
// ---------------------------------------------------------------------------

// A positive integer carried together with its prime factorization.
// Invariants: the keys are primes in increasing order, every exponent is
// >= 1, and the product of p^e equals value (so value == 1 iff the map is
// empty).
struct FactoredInt {
    std::uint64_t value = 1;
    std::map<std::uint64_t, std::uint64_t> factors;

    friend bool operator==(const FactoredInt&, const FactoredInt&) = default;
};

namespace detail {

constexpr std::uint64_t kTrialDivisionBound = 1'000'000;

// Offsets of the residues coprime to 30; stepping through them visits every
// candidate divisor not already covered by 2, 3 and 5.
constexpr int kWheel30[8] = {4, 2, 4, 2, 4, 6, 2, 6};

inline std::uint64_t pollard_rho(std::uint64_t n) {
    // Floyd cycle-finding with a deterministic schedule of polynomial offsets,
    // so factorizations are reproducible run to run.
    for (std::uint64_t c = 1;; ++c) {
        auto step = [&](std::uint64_t x) { return (mul_mod_u64(x, x, n) + c) % n; };
        std::uint64_t x = 2, y = 2, d = 1;
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = std::gcd(x > y ? x - y : y - x, n);
        }
        if (d != n)
            return d;
    }
}

inline void factor_into(std::uint64_t n, std::map<std::uint64_t, std::uint64_t>& out) {
    // n has no prime divisor <= kTrialDivisionBound here
    if (n == 1)
        return;
    if (n < kTrialDivisionBound * kTrialDivisionBound || is_prime_u64(n)) {
        ++out[n];
        return;
    }
    std::uint64_t d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

} // namespace detail

// Canonical factorization of v. Trial division with a 2-3-5 wheel up to 1e6
// covers everything below 1e12 outright; larger cofactors are split with
// Pollard rho after a deterministic Miller-Rabin check.
inline FactoredInt factorize(std::uint64_t v) {
    if (v == 0)
        throw std::invalid_argument("factorize: argument must be a positive integer");
    FactoredInt out;
    out.value = v;
    std::uint64_t n = v;
    for (std::uint64_t p : {2ull, 3ull, 5ull}) {
        while (n % p == 0) {
            ++out.factors[p];
            n /= p;
        }
    }
    std::uint64_t d = 7;
    int w = 0;
    while (d <= detail::kTrialDivisionBound && d * d <= n) {
        while (n % d == 0) {
            ++out.factors[d];
            n /= d;
        }
        d += detail::kWheel30[w];
        w = (w + 1) & 7;
    }
    if (n > 1) {
        if (d * d > n)
            ++out.factors[n];
        else
            detail::factor_into(n, out.factors);
    }
    return out;
}

// All positive divisors of v, ascending; begins with 1 and ends with v.
inline std::vector<std::uint64_t> divisors(const FactoredInt& v) {
    std::vector<std::uint64_t> ds{1};
    for (const auto& [p, e] : v.factors) {
        std::size_t block = ds.size();
        std::uint64_t pe = 1;
        for (std::uint64_t i = 1; i <= e; ++i) {
            pe *= p;
            for (std::size_t j = 0; j < block; ++j)
                ds.push_back(ds[j] * pe);
        }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
}

// Number of positive divisors: prod (e_i + 1).
inline std::uint64_t tau(const FactoredInt& v) {
    std::uint64_t t = 1;
    for (const auto& [p, e] : v.factors)
        t *= e + 1;
    return t;
}

// Euler's totient, computed exactly over the factor map.
inline std::uint64_t totient(const FactoredInt& v) {
    std::uint64_t t = v.value;
    for (const auto& [p, e] : v.factors)
        t = t / p * (p - 1);
    return t;
}

// Moebius function: 0 on any squared factor, else parity of the prime count.
inline int mobius(const FactoredInt& v) {
    for (const auto& [p, e] : v.factors)
        if (e >= 2)
            return 0;
    return v.factors.size() % 2 == 0 ? 1 : -1;
}

// Product of the distinct prime divisors; radical(1) == 1.
inline std::uint64_t radical(const FactoredInt& v) {
    std::uint64_t r = 1;
    for (const auto& [p, e] : v.factors)
        r *= p;
    return r;
}

// Largest e with p^e | v. Rejects non-prime p.
inline std::uint64_t ord_p(std::uint64_t v, std::uint64_t p) {
    if (v == 0)
        throw std::invalid_argument("ord_p: argument must be a positive integer");
    if (!is_prime_u64(p))
        throw std::invalid_argument("ord_p: modulus must be prime");
    std::uint64_t e = 0;
    while (v % p == 0) {
        v /= p;
        ++e;
    }
    return e;
}

// All j with totient(j) == d and gcd(j, coprime_to) == 1, ascending.
//
// Enumeration runs over the prime-power structure of the totient: j factors
// as p1^e1 * ... * pr^er with phi(j) = prod (pi - 1) * pi^(ei - 1), so every
// prime that can appear in a solution satisfies (p - 1) | d. The candidate
// primes are p = f + 1 for divisors f of d, and a depth-first search assigns
// at most one prime power per prime while the totient parts divide out d
// exactly. The search is complete by construction; as an independent sanity
// bound, phi(j) >= sqrt(j/2) caps every solution at j <= 2*d^2.
inline std::vector<std::uint64_t> inverse_totient(std::uint64_t d, std::uint64_t coprime_to) {
    if (d == 0 || coprime_to == 0)
        throw std::invalid_argument("inverse_totient: arguments must be positive");
    std::vector<std::uint64_t> primes;
    for (std::uint64_t f : divisors(factorize(d)))
        if (f + 1 > f && is_prime_u64(f + 1))
            primes.push_back(f + 1);

    std::vector<std::uint64_t> out;
    std::function<void(std::size_t, std::uint64_t, std::uint64_t)> dfs =
        [&](std::size_t from, std::uint64_t remaining, std::uint64_t j) {
            if (remaining == 1)
                out.push_back(j);
            for (std::size_t i = from; i < primes.size(); ++i) {
                std::uint64_t p = primes[i];
                if (remaining % (p - 1) != 0)
                    continue;
                std::uint64_t part = p - 1; // totient of p^e, e = 1, 2, ...
                std::uint64_t power = p;
                while (remaining % part == 0) {
                    dfs(i + 1, remaining / part, checked_mul_u64(j, power));
                    if (part > remaining / p)
                        break;
                    part *= p;
                    power = checked_mul_u64(power, p);
                }
            }
        };
    dfs(0, d, 1);

    std::erase_if(out, [&](std::uint64_t j) { return std::gcd(j, coprime_to) != 1; });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace cyclo
