#pragma once

#include <cstdint>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace cyclo {

// Arbitrary-precision signed integer. Used for polynomial coefficients and
// for evaluated values like Phi_3(999^9), which overflow any fixed width.
using Int = boost::multiprecision::cpp_int;

// base^e by binary powering; e may exceed the range of unsigned int.
inline Int pow_u64(Int base, std::uint64_t e) {
    Int r = 1;
    while (e != 0) {
        if (e & 1)
            r *= base;
        e >>= 1;
        if (e != 0)
            base *= base;
    }
    return r;
}

// 64-bit product that refuses to wrap.
inline std::uint64_t checked_mul_u64(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 wide = static_cast<unsigned __int128>(a) * b;
    if (wide > UINT64_MAX)
        throw std::overflow_error("integer product exceeds 64 bits");
    return static_cast<std::uint64_t>(wide);
}

} // namespace cyclo
