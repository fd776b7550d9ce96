#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cyclo/integer.hpp"

namespace cyclo {

// Thrown by exact_div when division leaves a remainder. Carries the degree of
// that remainder; callers that probe divisibility treat this as an answer,
// not a failure.
class NotDivisibleError : public std::runtime_error {
public:
    explicit NotDivisibleError(long remainder_degree)
        : std::runtime_error("polynomial division left a remainder of degree " +
                             std::to_string(remainder_degree)),
          remainder_degree_(remainder_degree) {}

    long remainder_degree() const noexcept { return remainder_degree_; }

private:
    long remainder_degree_;
};

// Malformed polynomial text; position is the byte offset of the offending
// character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error("syntax error at position " + std::to_string(position) + ": " + message),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// Dense univariate polynomial over arbitrary-precision integers.
//
// Coefficients are stored in ascending degree order and kept canonical: the
// highest entry is nonzero, and the zero polynomial is the empty vector.
// Values are immutable once built; all arithmetic returns fresh polynomials.
class Polynomial {
public:
    Polynomial() = default;

    explicit Polynomial(std::vector<Int> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
        trim();
    }

    Polynomial(std::initializer_list<Int> ascending_coeffs) : coeffs_(ascending_coeffs) { trim(); }

    static Polynomial zero() { return {}; }
    static Polynomial one() { return Polynomial{Int(1)}; }

    static Polynomial constant(Int c) {
        Polynomial p;
        if (!c.is_zero())
            p.coeffs_.push_back(std::move(c));
        return p;
    }

    // x^d - 1: the building block of every divisor-product identity here.
    static Polynomial x_power_minus_one(std::uint64_t d) {
        if (d == 0)
            throw std::invalid_argument("x_power_minus_one: exponent must be >= 1");
        std::vector<Int> c(d + 1);
        c.front() = -1;
        c.back() = 1;
        return Polynomial(std::move(c));
    }

    bool is_zero() const { return coeffs_.empty(); }

    // Degree, with -1 standing in for the "minus infinity" degree of the zero
    // polynomial.
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

    const Int& coeff(std::size_t i) const {
        static const Int kZero{};
        return i < coeffs_.size() ? coeffs_[i] : kZero;
    }

    const Int& leading() const {
        if (is_zero())
            throw std::invalid_argument("leading: zero polynomial has no leading coefficient");
        return coeffs_.back();
    }

    bool is_monic() const { return !is_zero() && coeffs_.back() == 1; }

    const std::vector<Int>& coefficients() const { return coeffs_; }

    // gcd of all coefficients; 0 for the zero polynomial.
    Int content() const {
        Int g = 0;
        for (const Int& c : coeffs_) {
            g = boost::multiprecision::gcd(g, c);
            if (g == 1)
                break;
        }
        return boost::multiprecision::abs(g);
    }

    // Exact Horner evaluation.
    Int operator()(const Int& x) const {
        Int acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (Int& c : r.coeffs_)
            c = -c;
        return r;
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.coeffs_.size())
                c[i] += a.coeffs_[i];
            if (i < b.coeffs_.size())
                c[i] += b.coeffs_[i];
        }
        return Polynomial(std::move(c));
    }

    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) {
        std::vector<Int> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i < a.coeffs_.size())
                c[i] += a.coeffs_[i];
            if (i < b.coeffs_.size())
                c[i] -= b.coeffs_[i];
        }
        return Polynomial(std::move(c));
    }

    // Schoolbook product. Zero coefficients of the sparser operand are
    // skipped, which matters a lot for the x^n-substituted polynomials this
    // library pushes around.
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
        if (a.is_zero() || b.is_zero())
            return {};
        const Polynomial& outer = a.coeffs_.size() <= b.coeffs_.size() ? a : b;
        const Polynomial& inner = a.coeffs_.size() <= b.coeffs_.size() ? b : a;
        std::vector<Int> c(a.coeffs_.size() + b.coeffs_.size() - 1);
        for (std::size_t i = 0; i < outer.coeffs_.size(); ++i) {
            const Int& oi = outer.coeffs_[i];
            if (oi.is_zero())
                continue;
            for (std::size_t j = 0; j < inner.coeffs_.size(); ++j) {
                const Int& ij = inner.coeffs_[j];
                if (!ij.is_zero())
                    c[i + j] += oi * ij;
            }
        }
        return Polynomial(std::move(c));
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

private:
    void trim() {
        while (!coeffs_.empty() && coeffs_.back().is_zero())
            coeffs_.pop_back();
    }

    std::vector<Int> coeffs_;
};

// Multiplication by x^d.
inline Polynomial shifted(const Polynomial& p, std::uint64_t d) {
    if (p.is_zero() || d == 0)
        return p;
    std::vector<Int> c(p.coefficients().size() + d);
    std::copy(p.coefficients().begin(), p.coefficients().end(), c.begin() + static_cast<long>(d));
    return Polynomial(std::move(c));
}

namespace detail {

// Synthetic division, top down. Requires a divisor with leading coefficient
// +-1 so the quotient stays in Z[x]. Returns the quotient when the remainder
// vanishes; otherwise reports the remainder's degree through rdeg.
inline std::optional<Polynomial> divide_exactly(const Polynomial& num, const Polynomial& den,
                                                long& rdeg) {
    if (den.is_zero())
        throw std::invalid_argument("exact_div: division by the zero polynomial");
    if (den.leading() != 1 && den.leading() != -1)
        throw std::invalid_argument("exact_div: divisor leading coefficient must be +1 or -1");
    if (num.is_zero())
        return Polynomial{};

    const long g = den.degree();
    if (num.degree() < g) {
        rdeg = num.degree();
        return std::nullopt;
    }

    // positions of the divisor's nonzero coefficients below the leading one
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j + 1 < den.coefficients().size(); ++j)
        if (!den.coeff(j).is_zero())
            support.push_back(j);

    const bool negate = den.leading() == -1;
    std::vector<Int> rem = num.coefficients();
    std::vector<Int> q(static_cast<std::size_t>(num.degree() - g) + 1);
    for (std::size_t i = q.size(); i-- > 0;) {
        Int& top = rem[i + static_cast<std::size_t>(g)];
        if (top.is_zero())
            continue;
        Int qi = negate ? Int(-top) : top;
        top = 0;
        for (std::size_t j : support)
            rem[i + j] -= qi * den.coeff(j);
        q[i] = std::move(qi);
    }
    for (std::size_t i = static_cast<std::size_t>(g); i-- > 0;) {
        if (!rem[i].is_zero()) {
            rdeg = static_cast<long>(i);
            return std::nullopt;
        }
    }
    return Polynomial(std::move(q));
}

} // namespace detail

// Quotient num/den when den divides num in Z[x]; empty otherwise.
inline std::optional<Polynomial> try_exact_div(const Polynomial& num, const Polynomial& den) {
    long rdeg = 0;
    return detail::divide_exactly(num, den, rdeg);
}

// Quotient num/den; throws NotDivisibleError (carrying the remainder degree)
// when the division is not exact.
inline Polynomial exact_div(const Polynomial& num, const Polynomial& den) {
    long rdeg = 0;
    auto q = detail::divide_exactly(num, den, rdeg);
    if (!q)
        throw NotDivisibleError(rdeg);
    return std::move(*q);
}

// p(x^n): coefficient i moves to index i*n.
inline Polynomial compose_power(const Polynomial& p, std::uint64_t n) {
    if (n == 0)
        throw std::invalid_argument("compose_power: exponent must be >= 1");
    if (n == 1 || p.is_zero())
        return p;
    std::uint64_t top = checked_mul_u64(static_cast<std::uint64_t>(p.degree()), n);
    if (top > 100'000'000)
        throw std::length_error("compose_power: result degree is unreasonably large");
    std::vector<Int> c(top + 1);
    for (std::size_t i = 0; i < p.coefficients().size(); ++i)
        c[i * n] = p.coeff(i);
    return Polynomial(std::move(c));
}

// p(-x): odd-degree coefficients change sign.
inline Polynomial substitute_neg(const Polynomial& p) {
    std::vector<Int> c = p.coefficients();
    for (std::size_t i = 1; i < c.size(); i += 2)
        c[i] = -c[i];
    return Polynomial(std::move(c));
}

// Canonical text form: terms in strictly descending degree joined by " + " or
// " - ", coefficient 1 suppressed except in the constant term, "x^K" only for
// K >= 2. The zero polynomial prints as "0".
inline std::string to_string(const Polynomial& p) {
    if (p.is_zero())
        return "0";
    std::string out;
    for (long i = p.degree(); i >= 0; --i) {
        const Int& c = p.coeff(static_cast<std::size_t>(i));
        if (c.is_zero())
            continue;
        const bool negative = c < 0;
        if (out.empty()) {
            if (negative)
                out += '-';
        } else {
            out += negative ? " - " : " + ";
        }
        const Int mag = boost::multiprecision::abs(c);
        if (i == 0) {
            out += mag.str();
        } else {
            if (mag != 1)
                out += mag.str();
            out += 'x';
            if (i >= 2) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const Polynomial& p) {
    return os << to_string(p);
}

// Parses the text form back. Accepts arbitrary whitespace, terms in any
// order, an optional '*' between coefficient and variable, and repeated
// degrees (which accumulate). Signals ParseError with the byte offset of the
// first offending character.
inline Polynomial parse_polynomial(std::string_view text) {
    std::size_t pos = 0;
    auto more = [&] { return pos < text.size(); };
    auto peek = [&] { return text[pos]; };
    auto skip_ws = [&] {
        while (more() && std::isspace(static_cast<unsigned char>(peek())))
            ++pos;
    };
    auto read_digits = [&]() -> std::string {
        std::size_t start = pos;
        while (more() && std::isdigit(static_cast<unsigned char>(peek())))
            ++pos;
        return std::string(text.substr(start, pos - start));
    };

    std::vector<Int> acc;
    auto add_term = [&](Int c, std::uint64_t k) {
        if (k > 10'000'000)
            throw ParseError("exponent too large", pos);
        if (acc.size() <= k)
            acc.resize(k + 1);
        acc[k] += c;
    };

    skip_ws();
    if (!more())
        throw ParseError("empty input", pos);

    bool first = true;
    while (true) {
        skip_ws();
        if (!more()) {
            if (first)
                throw ParseError("expected a term", pos);
            break;
        }
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = peek() == '-' ? -1 : 1;
            ++pos;
            skip_ws();
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", pos);
        }

        Int coeff = 1;
        bool saw_coeff = false;
        if (more() && std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = Int(read_digits());
            saw_coeff = true;
            skip_ws();
            if (more() && peek() == '*') {
                ++pos;
                skip_ws();
                if (!more() || peek() != 'x')
                    throw ParseError("expected 'x' after '*'", pos);
            }
        }

        std::uint64_t deg = 0;
        if (more() && peek() == 'x') {
            ++pos;
            deg = 1;
            const std::size_t before_ws = pos;
            skip_ws();
            if (!more() || peek() != '^')
                pos = before_ws; // the whitespace separates terms, not 'x' from '^'
            if (more() && peek() == '^') {
                ++pos;
                skip_ws();
                if (!more() || !std::isdigit(static_cast<unsigned char>(peek())))
                    throw ParseError("expected an exponent after '^'", pos);
                std::string digits = read_digits();
                if (digits.size() > 8)
                    throw ParseError("exponent too large", pos);
                deg = std::stoull(digits);
            }
        } else if (!saw_coeff) {
            throw ParseError("expected a coefficient or 'x'", pos);
        }

        add_term(sign < 0 ? Int(-coeff) : coeff, deg);
        first = false;
    }
    return Polynomial(std::move(acc));
}

} // namespace cyclo
