#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace blockinv {

// Arbitrary-precision signed integer. All determinant products and their
// sums are carried exactly; there is no floating-point mode anywhere.
using ExactInt = mpz_class;

using int128 = __int128;

inline ExactInt exact_from_int128(int128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(v)
                              : static_cast<unsigned __int128>(v);
    ExactInt hi(static_cast<unsigned long>(u >> 64));
    ExactInt out = (hi << 64) + static_cast<unsigned long>(u & ~0ULL);
    return neg ? ExactInt(-out) : out;
}

// Absolute-value gcd; gcd of an all-zero set is 0.
inline ExactInt exact_gcd(const std::vector<ExactInt>& values) {
    ExactInt g = 0;
    for (const auto& v : values) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
    return g;
}

inline std::string to_string(const ExactInt& v) { return v.get_str(); }

inline ExactInt exact_from_string(const std::string& s) { return ExactInt(s); }

}  // namespace blockinv
