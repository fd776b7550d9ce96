#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include "cyclo/numtheory.hpp"
#include "cyclo/polynomial.hpp"

namespace cyclo {

// Three routes to Phi_n(x), kept deliberately independent so they can vouch
// for one another:
//
//   phi_recursive  divides x^n - 1 by Phi_d for every proper divisor d,
//   phi_mobius     expands the Moebius-inversion product of (x^d - 1) terms,
//   phi            reduces to the radical first and is the production entry
//                  point.
//
// All three are pure; phi_recursive memoizes only within its own call tree.

inline Polynomial phi_recursive(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("phi_recursive: index must be >= 1");
    std::map<std::uint64_t, Polynomial> memo;
    auto rec = [&memo](auto&& self, std::uint64_t m) -> const Polynomial& {
        if (auto it = memo.find(m); it != memo.end())
            return it->second;
        Polynomial cur = Polynomial::x_power_minus_one(m);
        for (std::uint64_t d : divisors(factorize(m)))
            if (d != m)
                cur = exact_div(cur, self(self, d));
        return memo.emplace(m, std::move(cur)).first->second;
    };
    return rec(rec, n);
}

inline Polynomial phi_mobius(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("phi_mobius: index must be >= 1");
    const FactoredInt f = factorize(n);
    std::vector<std::uint64_t> ds = divisors(f);

    // Multiply every (x^d - 1) with mu(n/d) = +1, then divide out the
    // mu(n/d) = -1 terms. Multiplication by x^d - 1 is a shift-and-subtract;
    // the divisions are exact at every step.
    Polynomial acc = Polynomial::one();
    for (std::uint64_t d : ds)
        if (mobius(factorize(n / d)) == 1)
            acc = shifted(acc, d) - acc;
    for (std::uint64_t d : ds) {
        if (mobius(factorize(n / d)) == -1) {
            auto q = try_exact_div(acc, Polynomial::x_power_minus_one(d));
            if (!q)
                throw std::logic_error("phi_mobius: inexact division; polynomial arithmetic is inconsistent");
            acc = std::move(*q);
        }
    }
    return acc;
}

inline Polynomial phi(std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("phi: index must be >= 1");
    const FactoredInt f = factorize(n);
    const std::uint64_t m = radical(f);
    Polynomial base = phi_mobius(m);
    return m == n ? base : compose_power(base, n / m);
}

// The unique n with Phi_n == p, if any. Candidates are read off the degree:
// deg Phi_n = totient(n), so only the finitely many n with totient(n) equal
// to deg p can match.
inline std::optional<std::uint64_t> identify_cyclotomic(const Polynomial& p) {
    if (p.degree() < 1 || !p.is_monic())
        return std::nullopt;
    for (std::uint64_t j : inverse_totient(static_cast<std::uint64_t>(p.degree()), 1))
        if (phi(j) == p)
            return j;
    return std::nullopt;
}

} // namespace cyclo
