#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/polynomial.hpp"
#include "cyclo/structure.hpp"

namespace cyclo {

// Self-check suites. Each one sweeps an identity over a bounded range and
// stops at the first violation, reporting the exact instance; a clean sweep
// reports how many instances were checked. The CLI drives these through the
// `verify` subcommand, and the test suite reuses them at larger bounds.

struct VerifySuiteResult {
    std::string name;
    std::uint64_t checked = 0;
    std::optional<std::string> failure; // first failing instance, human readable

    bool passed() const { return !failure.has_value(); }
};

namespace detail {

// Thread-confined memo for repeated Phi lookups within one suite run.
class PhiCache {
public:
    const Polynomial& get(std::uint64_t n) {
        auto it = table_.find(n);
        if (it == table_.end())
            it = table_.emplace(n, phi(n)).first;
        return it->second;
    }

private:
    std::map<std::uint64_t, Polynomial> table_;
};

} // namespace detail

// Optional fault-injection hook: lets a test harness corrupt the polynomial
// produced for one index and prove the sweep catches and names it.
using PhiTamper = std::function<void(std::uint64_t, Polynomial&)>;

// phi_recursive == phi_mobius == phi, and deg == totient(n), for n <= max_n.
inline VerifySuiteResult check_cross_algorithm(std::uint64_t max_n, const PhiTamper& tamper = {}) {
    VerifySuiteResult r;
    r.name = "cross-algorithm";
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        Polynomial a = phi_recursive(n);
        if (tamper)
            tamper(n, a);
        const Polynomial b = phi_mobius(n);
        if (a != b) {
            r.failure = "n=" + std::to_string(n) + ": recursive and moebius routes disagree";
            return r;
        }
        if (a != phi(n)) {
            r.failure = "n=" + std::to_string(n) + ": radical-reduction route disagrees";
            return r;
        }
        if (a.degree() < 0 ||
            static_cast<std::uint64_t>(a.degree()) != totient(factorize(n))) {
            r.failure = "n=" + std::to_string(n) + ": degree != totient(n)";
            return r;
        }
        ++r.checked;
    }
    return r;
}

// prod_{d|n} Phi_d(x) == x^n - 1 for n <= max_n.
inline VerifySuiteResult check_divisor_product(std::uint64_t max_n) {
    VerifySuiteResult r;
    r.name = "divisor-product";
    detail::PhiCache cache;
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        Polynomial prod = Polynomial::one();
        for (std::uint64_t d : divisors(factorize(n)))
            prod = prod * cache.get(d);
        if (prod != Polynomial::x_power_minus_one(n)) {
            r.failure = "n=" + std::to_string(n) + ": product over divisors != x^n - 1";
            return r;
        }
        ++r.checked;
    }
    return r;
}

// For primes p <= 13 and m <= max_m:
//   p | m:  Phi_{pm}(x) == Phi_m(x^p)
//   p ∤ m:  Phi_{pm}(x) * Phi_m(x) == Phi_m(x^p)
inline VerifySuiteResult check_prime_shift(std::uint64_t max_m) {
    VerifySuiteResult r;
    r.name = "prime-shift";
    detail::PhiCache cache;
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        for (std::uint64_t m = 1; m <= max_m; ++m) {
            const Polynomial& pm = cache.get(p * m);
            const Polynomial& base = cache.get(m);
            const Polynomial composed = compose_power(base, p);
            const bool ok = (m % p == 0) ? pm == composed : pm * base == composed;
            if (!ok) {
                r.failure = "p=" + std::to_string(p) + " m=" + std::to_string(m) +
                            ": prime-shift identity violated";
                return r;
            }
            ++r.checked;
        }
    }
    return r;
}

// Phi_{p^e}(x) == Phi_p(x^{p^{e-1}}) for p in {2,3,5,7} and p^e <= max_index.
inline VerifySuiteResult check_prime_power(std::uint64_t max_index) {
    VerifySuiteResult r;
    r.name = "prime-power";
    for (std::uint64_t p : {2, 3, 5, 7}) {
        const Polynomial base = phi(p);
        for (std::uint64_t pe = p, lower = 1; pe <= max_index;) {
            if (phi(pe) != compose_power(base, lower)) {
                r.failure = "index=" + std::to_string(pe) + ": prime-power identity violated";
                return r;
            }
            ++r.checked;
            if (pe > max_index / p)
                break;
            lower = pe;
            pe *= p;
        }
    }
    return r;
}

// Phi_{2n}(x) == Phi_n(-x) for odd n, 1 < n <= max_n.
inline VerifySuiteResult check_negation(std::uint64_t max_n) {
    VerifySuiteResult r;
    r.name = "negation";
    for (std::uint64_t n = 3; n <= max_n; n += 2) {
        if (phi(2 * n) != substitute_neg(phi(n))) {
            r.failure = "n=" + std::to_string(n) + ": Phi_2n != Phi_n(-x)";
            return r;
        }
        ++r.checked;
    }
    return r;
}

// Phi_n(x) == Phi_rad(n)(x^{n/rad(n)}) for n <= max_n, with both sides built
// by the Moebius product so the reduction is checked on its own.
inline VerifySuiteResult check_radical_reduction(std::uint64_t max_n) {
    VerifySuiteResult r;
    r.name = "radical-reduction";
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const std::uint64_t m = radical(factorize(n));
        if (phi_mobius(n) != compose_power(phi_mobius(m), n / m)) {
            r.failure = "n=" + std::to_string(n) + ": radical reduction violated";
            return r;
        }
        ++r.checked;
    }
    return r;
}

// Phi_n monic with content 1 for n <= max_n.
inline VerifySuiteResult check_monic_content(std::uint64_t max_n) {
    VerifySuiteResult r;
    r.name = "monic-content";
    for (std::uint64_t n = 1; n <= max_n; ++n) {
        const Polynomial p = phi(n);
        if (!p.is_monic() || p.content() != 1) {
            r.failure = "n=" + std::to_string(n) + ": not monic with content 1";
            return r;
        }
        ++r.checked;
    }
    return r;
}

// expand_product(factor_composition(k, n)) == Phi_k(x^n) for k, n <= max_kn.
inline VerifySuiteResult check_factorization(std::uint64_t max_kn) {
    VerifySuiteResult r;
    r.name = "factorization";
    detail::PhiCache cache;
    for (std::uint64_t k = 1; k <= max_kn; ++k) {
        const Polynomial composed_base = cache.get(k);
        for (std::uint64_t n = 1; n <= max_kn; ++n) {
            const CycloProduct factors = factor_composition(k, n);
            Polynomial prod = Polynomial::one();
            for (const auto& [idx, mult] : factors.entries)
                for (std::uint64_t i = 0; i < mult; ++i)
                    prod = prod * cache.get(idx);
            if (prod != compose_power(composed_base, n)) {
                r.failure = "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                            ": expanded factorization != Phi_k(x^n)";
                return r;
            }
            ++r.checked;
        }
    }
    return r;
}

// is_irreducible_composition == golomb_condition == (single factor), and the
// factor count equals tau(N), for 2 <= k <= max_kn, 1 <= n <= max_kn.
inline VerifySuiteResult check_equivalence(std::uint64_t max_kn) {
    VerifySuiteResult r;
    r.name = "irreducibility-equivalence";
    for (std::uint64_t k = 2; k <= max_kn; ++k) {
        for (std::uint64_t n = 1; n <= max_kn; ++n) {
            const bool divisor_rule = is_irreducible_composition(k, n);
            const bool degree_rule = golomb_condition(k, n);
            const CycloProduct factors = factor_composition(k, n);
            const CompositionSpec spec(k, n);
            if (divisor_rule != degree_rule || divisor_rule != (factors.factor_count() == 1) ||
                factors.factor_count() != tau(factorize(spec.N))) {
                r.failure = "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                            ": irreducibility criteria disagree";
                return r;
            }
            ++r.checked;
        }
    }
    return r;
}

// factor_prime_quotient(p, n) == factor_composition(p, n) for primes p <= 13
// and n <= max_n.
inline VerifySuiteResult check_quotient_agreement(std::uint64_t max_n) {
    VerifySuiteResult r;
    r.name = "quotient-agreement";
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
        for (std::uint64_t n = 1; n <= max_n; ++n) {
            if (factor_prime_quotient(p, n) != factor_composition(p, n)) {
                r.failure = "p=" + std::to_string(p) + " n=" + std::to_string(n) +
                            ": quotient and composition factorizations differ";
                return r;
            }
            ++r.checked;
        }
    }
    return r;
}

// divides_lemma_check returns predicted == verified for k, n <= max_kn.
inline VerifySuiteResult check_divisibility_lemma(std::uint64_t max_kn) {
    VerifySuiteResult r;
    r.name = "divisibility-lemma";
    for (std::uint64_t k = 1; k <= max_kn; ++k) {
        for (std::uint64_t n = 1; n <= max_kn; ++n) {
            const LemmaCheck c = divides_lemma_check(k, n);
            if (c.predicted != c.verified) {
                r.failure = "k=" + std::to_string(k) + " n=" + std::to_string(n) +
                            ": gcd prediction and actual division disagree";
                return r;
            }
            ++r.checked;
        }
    }
    return r;
}

struct VerifyOptions {
    std::uint64_t max_n = 200;  // bound for the single-index suites
    std::uint64_t max_kn = 60;  // bound for the (k, n) grid suites
    PhiTamper tamper;           // test hook; unset in production
};

inline std::vector<VerifySuiteResult> run_verify_suites(const VerifyOptions& opt) {
    return {
        check_cross_algorithm(opt.max_n, opt.tamper),
        check_divisor_product(opt.max_n),
        check_prime_shift(opt.max_n),
        check_prime_power(opt.max_n),
        check_negation(opt.max_n),
        check_radical_reduction(opt.max_n),
        check_monic_content(opt.max_n),
        check_factorization(opt.max_kn),
        check_equivalence(opt.max_kn),
        check_quotient_agreement(opt.max_kn),
        check_divisibility_lemma(opt.max_kn),
    };
}

// One line per suite; returns true when everything passed.
inline bool print_verify_report(const std::vector<VerifySuiteResult>& results, std::ostream& os) {
    bool ok = true;
    for (const auto& r : results) {
        if (r.passed()) {
            os << r.name << ": " << r.checked << " instances ok\n";
        } else {
            os << r.name << ": FAILED at " << *r.failure << "\n";
            ok = false;
        }
    }
    os << (ok ? "all suites passed\n" : "verification FAILED\n");
    return ok;
}

} // namespace cyclo
