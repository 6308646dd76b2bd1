#ifndef GF2PERIOD_NAT_HPP
#define GF2PERIOD_NAT_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace gf2p {

/// Arbitrary-precision natural number. All period/order values flow through
/// this type; nothing in the library silently truncates to machine words.
using Nat = mpz_class;

inline Nat nat_pow2(unsigned k) {
    Nat n = 1;
    n <<= k;
    return n;
}

/// 2^d - 1, the Mersenne number bounding the order of a degree-d irreducible.
inline Nat mersenne(unsigned d) { return nat_pow2(d) - 1; }

inline std::string to_decimal(const Nat& n) { return n.get_str(10); }

inline Nat nat_from_decimal(const std::string& text) {
    Nat n;
    if (text.empty() || mpz_set_str(n.get_mpz_t(), text.c_str(), 10) != 0 || n < 0)
        throw std::invalid_argument("not a decimal natural: \"" + text + "\"");
    return n;
}

inline bool fits_u64(const Nat& n) {
    return n >= 0 && mpz_sizeinbase(n.get_mpz_t(), 2) <= 64;
}

inline std::uint64_t to_u64(const Nat& n) {
    if (!fits_u64(n)) throw std::overflow_error("value does not fit in 64 bits");
    std::uint64_t lo = mpz_get_ui(n.get_mpz_t());
    if (mpz_sizeinbase(n.get_mpz_t(), 2) > 63) {
        // mpz_get_ui is only guaranteed to return the low bits that fit in
        // unsigned long; reassemble explicitly to stay portable.
        Nat hi = n >> 32;
        lo = (static_cast<std::uint64_t>(mpz_get_ui(hi.get_mpz_t())) << 32) |
             (mpz_get_ui(n.get_mpz_t()) & 0xffffffffULL);
    }
    return lo;
}

inline bool is_power_of_two(const Nat& n) {
    if (n <= 0) return false;
    return mpz_popcount(n.get_mpz_t()) == 1;
}

}  // namespace gf2p

#endif  // GF2PERIOD_NAT_HPP
