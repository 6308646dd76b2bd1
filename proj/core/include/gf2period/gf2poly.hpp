#ifndef GF2PERIOD_GF2POLY_HPP
#define GF2PERIOD_GF2POLY_HPP

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gf2period/errors.hpp"
#include "gf2period/nat.hpp"

namespace gf2p {

/// Dense bit-packed polynomial over GF(2).
///
/// Bit i (word i/64, bit i%64) is the coefficient of x^i. The word vector
/// carries no trailing zero words, so two polynomials are equal iff their
/// word vectors are equal. Values are immutable once constructed; every
/// operation below is a pure function returning a fresh value, safe to share
/// across threads.
class Gf2Poly {
  public:
    /// degree() of the zero polynomial. Kept as a named sentinel; callers
    /// that do degree arithmetic must check is_zero() first.
    static constexpr int kZeroDegree = -1;

    /// Resource guard applied when parsing untrusted text.
    static constexpr int kDefaultDegreeCap = 4096;

    Gf2Poly() = default;  // the zero polynomial

    static Gf2Poly zero() { return Gf2Poly(); }
    static Gf2Poly one() { return monomial(0); }
    static Gf2Poly x() { return monomial(1); }
    static Gf2Poly monomial(unsigned exponent);

    /// Polynomial with bit i set iff i appears in `exps` (set semantics:
    /// duplicates are idempotent, an empty list gives the zero polynomial).
    static Gf2Poly from_exponents(std::span<const unsigned> exps);
    static Gf2Poly from_exponents(std::initializer_list<unsigned> exps);

    /// Takes ownership of a little-endian word vector; trailing zero words
    /// are stripped.
    static Gf2Poly from_words(std::vector<std::uint64_t> words);

    /// Parses one of three formats, sniffed in this order:
    ///   - leading "0x"            -> hex bitmask        ("0x23")
    ///   - only '0'/'1' characters -> binary, MSB first  ("100011")
    ///   - otherwise               -> symbolic           ("x^5+x+1")
    /// Symbolic terms may appear in any order and repeated terms cancel
    /// mod 2 ("x+x" parses to 0). Throws ParseError naming the offending
    /// position; degrees above `degree_cap` are rejected.
    static Gf2Poly parse(std::string_view text, int degree_cap = kDefaultDegreeCap);

    bool is_zero() const noexcept { return words_.empty(); }
    bool is_one() const noexcept { return words_.size() == 1 && words_[0] == 1; }

    /// Index of the highest set bit; kZeroDegree for the zero polynomial.
    int degree() const noexcept;

    bool bit(unsigned i) const noexcept;
    bool constant_term() const noexcept { return bit(0); }

    /// Number of nonzero coefficients.
    unsigned weight() const noexcept;

    std::span<const std::uint64_t> words() const noexcept { return words_; }

    /// Canonical symbolic form, descending powers: "x^5+x+1"; "0" for zero.
    std::string to_symbolic() const;

    /// "0x" + hex digits of the coefficient bitmask, most significant first.
    /// With pad_to_bytes, the digit count is padded to a whole number of bytes.
    std::string to_hex(bool pad_to_bytes = false) const;

    /// MSB-first binary string; "0" for zero.
    std::string to_binary() const;

    friend bool operator==(const Gf2Poly&, const Gf2Poly&) = default;

    /// Orders by degree first, then by coefficient bitmask as an integer.
    std::strong_ordering operator<=>(const Gf2Poly& other) const noexcept;

  private:
    explicit Gf2Poly(std::vector<std::uint64_t> words) : words_(std::move(words)) {
        trim();
    }
    void trim();

    std::vector<std::uint64_t> words_;
};

/// Addition = subtraction = coefficient-wise XOR.
Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b);

/// Carry-less schoolbook product (shift and XOR).
Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b);

/// a * x^k.
Gf2Poly shift_left(const Gf2Poly& a, unsigned k);

struct DivRem {
    Gf2Poly quotient;
    Gf2Poly remainder;
};

/// Long division: a = quotient * m + remainder, degree(remainder) < degree(m).
/// Throws std::domain_error if m is zero.
DivRem divrem(const Gf2Poly& a, const Gf2Poly& m);

/// Remainder projection of divrem.
Gf2Poly mod_reduce(const Gf2Poly& a, const Gf2Poly& m);
inline Gf2Poly operator%(const Gf2Poly& a, const Gf2Poly& m) { return mod_reduce(a, m); }

/// x^e mod m by square-and-multiply over the bits of e. The exponent is an
/// arbitrary-precision natural: periods of degree-h polynomials reach
/// 2^h - 1. Requires degree(m) >= 1 and e >= 0.
Gf2Poly modexp_x(const Nat& e, const Gf2Poly& m);

/// a^e mod m for general base.
Gf2Poly modexp(const Gf2Poly& a, const Nat& e, const Gf2Poly& m);

/// Monic (automatic over GF(2)) greatest common divisor; gcd(a, 0) = a.
/// Throws std::domain_error if both inputs are zero.
Gf2Poly gcd(Gf2Poly a, Gf2Poly b);

/// Derivative in characteristic 2: x^k survives only for odd k.
Gf2Poly formal_derivative(const Gf2Poly& a);

/// M*(x) = x^degree(M) * M(1/x), the coefficient reversal. Requires a set
/// constant term (otherwise the reversal drops degree) and degree >= 1.
/// Involutive on its domain: reciprocal(reciprocal(m)) == m.
Gf2Poly reciprocal(const Gf2Poly& m);

std::ostream& operator<<(std::ostream& os, const Gf2Poly& p);

}  // namespace gf2p

#endif  // GF2PERIOD_GF2POLY_HPP
