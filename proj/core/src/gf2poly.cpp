#include "gf2period/gf2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <ostream>
#include <stdexcept>

namespace gf2p {

namespace {

constexpr unsigned kWordBits = 64;

inline std::size_t word_index(unsigned bit) { return bit / kWordBits; }
inline unsigned bit_index(unsigned bit) { return bit % kWordBits; }

// dst ^= src << k, dst must already be large enough.
void xor_shifted(std::vector<std::uint64_t>& dst, std::span<const std::uint64_t> src,
                 unsigned k) {
    const std::size_t ws = k / kWordBits;
    const unsigned bs = k % kWordBits;
    if (bs == 0) {
        for (std::size_t i = 0; i < src.size(); ++i) dst[i + ws] ^= src[i];
        return;
    }
    std::uint64_t carry = 0;
    for (std::size_t i = 0; i < src.size(); ++i) {
        dst[i + ws] ^= (src[i] << bs) | carry;
        carry = src[i] >> (kWordBits - bs);
    }
    if (carry != 0) dst[src.size() + ws] ^= carry;
}

// Highest set bit position at or below `hint`, -1 if none.
int degree_below(const std::vector<std::uint64_t>& words, int hint) {
    int wi = std::min<int>(hint / static_cast<int>(kWordBits),
                           static_cast<int>(words.size()) - 1);
    for (; wi >= 0; --wi) {
        if (words[wi] != 0)
            return wi * static_cast<int>(kWordBits) + 63 - std::countl_zero(words[wi]);
    }
    return Gf2Poly::kZeroDegree;
}

}  // namespace

void Gf2Poly::trim() {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Gf2Poly Gf2Poly::monomial(unsigned exponent) {
    std::vector<std::uint64_t> w(word_index(exponent) + 1, 0);
    w[word_index(exponent)] = std::uint64_t{1} << bit_index(exponent);
    return Gf2Poly(std::move(w));
}

Gf2Poly Gf2Poly::from_exponents(std::span<const unsigned> exps) {
    std::vector<std::uint64_t> w;
    for (unsigned e : exps) {
        if (word_index(e) >= w.size()) w.resize(word_index(e) + 1, 0);
        w[word_index(e)] |= std::uint64_t{1} << bit_index(e);
    }
    return Gf2Poly(std::move(w));
}

Gf2Poly Gf2Poly::from_exponents(std::initializer_list<unsigned> exps) {
    return from_exponents(std::span<const unsigned>(exps.begin(), exps.size()));
}

Gf2Poly Gf2Poly::from_words(std::vector<std::uint64_t> words) {
    return Gf2Poly(std::move(words));
}

int Gf2Poly::degree() const noexcept {
    if (words_.empty()) return kZeroDegree;
    return static_cast<int>((words_.size() - 1) * kWordBits) + 63 -
           std::countl_zero(words_.back());
}

bool Gf2Poly::bit(unsigned i) const noexcept {
    if (word_index(i) >= words_.size()) return false;
    return (words_[word_index(i)] >> bit_index(i)) & 1u;
}

unsigned Gf2Poly::weight() const noexcept {
    unsigned n = 0;
    for (std::uint64_t w : words_) n += static_cast<unsigned>(std::popcount(w));
    return n;
}

std::strong_ordering Gf2Poly::operator<=>(const Gf2Poly& other) const noexcept {
    if (auto c = degree() <=> other.degree(); c != 0) return c;
    // Same degree implies same word count; compare bitmasks high to low.
    for (std::size_t i = words_.size(); i-- > 0;) {
        if (auto c = words_[i] <=> other.words_[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Formatting
// ---------------------------------------------------------------------------

std::string Gf2Poly::to_symbolic() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) {
        if (!bit(static_cast<unsigned>(i))) continue;
        if (!out.empty()) out += '+';
        if (i == 0)
            out += '1';
        else if (i == 1)
            out += 'x';
        else
            out += "x^" + std::to_string(i);
    }
    return out;
}

std::string Gf2Poly::to_hex(bool pad_to_bytes) const {
    static const char* digits = "0123456789abcdef";
    std::string out;
    if (is_zero()) {
        out = "0";
    } else {
        int top_nibble = degree() / 4;
        for (int n = top_nibble; n >= 0; --n) {
            unsigned v = 0;
            for (unsigned b = 0; b < 4; ++b)
                v |= static_cast<unsigned>(bit(static_cast<unsigned>(n) * 4 + b)) << b;
            out += digits[v];
        }
    }
    if (pad_to_bytes && out.size() % 2 != 0) out.insert(out.begin(), '0');
    return "0x" + out;
}

std::string Gf2Poly::to_binary() const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i) out += bit(static_cast<unsigned>(i)) ? '1' : '0';
    return out;
}

std::ostream& operator<<(std::ostream& os, const Gf2Poly& p) {
    return os << p.to_symbolic();
}

// ---------------------------------------------------------------------------
// Parsing
// ---------------------------------------------------------------------------

namespace {

void check_degree_cap(int deg, int cap, std::size_t pos) {
    if (cap >= 0 && deg > cap)
        throw ParseError("degree " + std::to_string(deg) + " exceeds cap " +
                             std::to_string(cap),
                         pos);
}

Gf2Poly parse_hex(std::string_view text, std::size_t offset, int cap) {
    // text excludes the "0x" prefix; offset points at the first digit.
    if (text.empty()) throw ParseError("hex literal has no digits", offset);
    std::vector<std::uint64_t> words((text.size() * 4 + kWordBits - 1) / kWordBits, 0);
    unsigned bitpos = 0;
    for (std::size_t i = text.size(); i-- > 0;) {
        char c = text[i];
        unsigned v;
        if (c >= '0' && c <= '9')
            v = static_cast<unsigned>(c - '0');
        else if (c >= 'a' && c <= 'f')
            v = static_cast<unsigned>(c - 'a' + 10);
        else if (c >= 'A' && c <= 'F')
            v = static_cast<unsigned>(c - 'A' + 10);
        else
            throw ParseError(std::string("invalid hex digit '") + c + "'", offset + i);
        words[bitpos / kWordBits] |= static_cast<std::uint64_t>(v) << (bitpos % kWordBits);
        bitpos += 4;
    }
    Gf2Poly p = Gf2Poly::from_words(std::move(words));
    check_degree_cap(p.degree(), cap, offset);
    return p;
}

Gf2Poly parse_binary(std::string_view text, std::size_t offset, int cap) {
    check_degree_cap(static_cast<int>(text.size()) - 1, cap, offset);
    std::vector<unsigned> exps;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '1') exps.push_back(static_cast<unsigned>(text.size() - 1 - i));
    }
    return Gf2Poly::from_exponents(exps);
}

Gf2Poly parse_symbolic(std::string_view text, int cap) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };

    std::vector<std::uint64_t> words;
    auto toggle = [&](unsigned e) {
        if (word_index(e) >= words.size()) words.resize(word_index(e) + 1, 0);
        words[word_index(e)] ^= std::uint64_t{1} << bit_index(e);
    };

    bool expect_term = true;
    while (true) {
        skip_ws();
        if (i >= text.size()) {
            if (expect_term) throw ParseError("expected a term", i);
            break;
        }
        if (!expect_term) {
            if (text[i] != '+')
                throw ParseError(std::string("expected '+' but found '") + text[i] + "'", i);
            ++i;
            expect_term = true;
            continue;
        }
        const std::size_t term_start = i;
        char c = text[i];
        if (c == '1') {
            ++i;
            toggle(0);
        } else if (c == 'x' || c == 'X') {
            ++i;
            std::size_t save = i;
            skip_ws();
            if (i < text.size() && text[i] == '^') {
                ++i;
                skip_ws();
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    throw ParseError("expected exponent digits after '^'", i);
                unsigned long e = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    e = e * 10 + static_cast<unsigned long>(text[i] - '0');
                    if (cap >= 0 && e > static_cast<unsigned long>(cap))
                        throw ParseError("degree " + std::to_string(e) + " exceeds cap " +
                                             std::to_string(cap),
                                         term_start);
                    ++i;
                }
                toggle(static_cast<unsigned>(e));
            } else {
                i = save;  // bare "x"
                toggle(1);
            }
        } else {
            throw ParseError(std::string("unexpected character '") + c + "'", i);
        }
        expect_term = false;
    }
    return Gf2Poly::from_words(std::move(words));
}

}  // namespace

Gf2Poly Gf2Poly::parse(std::string_view text, int degree_cap) {
    std::size_t begin = 0, end = text.size();
    while (begin < end && std::isspace(static_cast<unsigned char>(text[begin]))) ++begin;
    while (end > begin && std::isspace(static_cast<unsigned char>(text[end - 1]))) --end;
    if (begin == end) throw ParseError("empty input", begin);
    std::string_view body = text.substr(begin, end - begin);

    if (body.size() >= 2 && body[0] == '0' && (body[1] == 'x' || body[1] == 'X'))
        return parse_hex(body.substr(2), begin + 2, degree_cap);
    if (body.find_first_not_of("01") == std::string_view::npos)
        return parse_binary(body, begin, degree_cap);
    return parse_symbolic(text.substr(0, end), degree_cap);
}

// ---------------------------------------------------------------------------
// Arithmetic
// ---------------------------------------------------------------------------

Gf2Poly operator+(const Gf2Poly& a, const Gf2Poly& b) {
    std::vector<std::uint64_t> w(std::max(a.words().size(), b.words().size()), 0);
    for (std::size_t i = 0; i < a.words().size(); ++i) w[i] = a.words()[i];
    for (std::size_t i = 0; i < b.words().size(); ++i) w[i] ^= b.words()[i];
    return Gf2Poly::from_words(std::move(w));
}

Gf2Poly operator*(const Gf2Poly& a, const Gf2Poly& b) {
    if (a.is_zero() || b.is_zero()) return Gf2Poly::zero();
    // Iterate the set bits of the lighter operand.
    const Gf2Poly& outer = a.weight() <= b.weight() ? a : b;
    const Gf2Poly& inner = a.weight() <= b.weight() ? b : a;
    std::vector<std::uint64_t> acc(outer.words().size() + inner.words().size(), 0);
    for (std::size_t wi = 0; wi < outer.words().size(); ++wi) {
        std::uint64_t w = outer.words()[wi];
        while (w != 0) {
            const unsigned bi = static_cast<unsigned>(std::countr_zero(w));
            w &= w - 1;
            xor_shifted(acc, inner.words(), static_cast<unsigned>(wi) * kWordBits + bi);
        }
    }
    return Gf2Poly::from_words(std::move(acc));
}

Gf2Poly shift_left(const Gf2Poly& a, unsigned k) {
    if (a.is_zero()) return Gf2Poly::zero();
    std::vector<std::uint64_t> w(a.words().size() + k / kWordBits + 1, 0);
    xor_shifted(w, a.words(), k);
    return Gf2Poly::from_words(std::move(w));
}

DivRem divrem(const Gf2Poly& a, const Gf2Poly& m) {
    if (m.is_zero()) throw std::domain_error("divrem: division by zero polynomial");
    const int dm = m.degree();
    int dr = a.degree();
    if (dr < dm) return {Gf2Poly::zero(), a};

    std::vector<std::uint64_t> rem(a.words().begin(), a.words().end());
    std::vector<std::uint64_t> quot(word_index(static_cast<unsigned>(dr - dm)) + 1, 0);
    while (dr >= dm) {
        const unsigned s = static_cast<unsigned>(dr - dm);
        xor_shifted(rem, m.words(), s);
        quot[word_index(s)] |= std::uint64_t{1} << bit_index(s);
        dr = degree_below(rem, dr - 1);
    }
    return {Gf2Poly::from_words(std::move(quot)), Gf2Poly::from_words(std::move(rem))};
}

Gf2Poly mod_reduce(const Gf2Poly& a, const Gf2Poly& m) { return divrem(a, m).remainder; }

Gf2Poly modexp_x(const Nat& e, const Gf2Poly& m) {
    return modexp(Gf2Poly::x(), e, m);
}

Gf2Poly modexp(const Gf2Poly& a, const Nat& e, const Gf2Poly& m) {
    if (m.degree() < 1)
        throw std::domain_error("modexp: modulus must have degree >= 1");
    if (e < 0) throw std::domain_error("modexp: negative exponent");
    Gf2Poly result = Gf2Poly::one();
    if (e == 0) return result;
    Gf2Poly base = mod_reduce(a, m);
    const std::size_t nbits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = 0; i < nbits; ++i) {
        if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
            result = mod_reduce(result * base, m);
        if (i + 1 < nbits) base = mod_reduce(base * base, m);
    }
    return result;
}

Gf2Poly gcd(Gf2Poly a, Gf2Poly b) {
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) is undefined");
    while (!b.is_zero()) {
        Gf2Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Gf2Poly formal_derivative(const Gf2Poly& a) {
    // d/dx sum a_k x^k = sum over odd k of x^(k-1): shift right one, keep
    // even positions.
    constexpr std::uint64_t kEvenMask = 0x5555555555555555ULL;
    std::vector<std::uint64_t> w(a.words().size(), 0);
    for (std::size_t i = 0; i < w.size(); ++i) {
        std::uint64_t shifted = a.words()[i] >> 1;
        if (i + 1 < a.words().size()) shifted |= a.words()[i + 1] << 63;
        w[i] = shifted & kEvenMask;
    }
    return Gf2Poly::from_words(std::move(w));
}

Gf2Poly reciprocal(const Gf2Poly& m) {
    if (!m.constant_term())
        throw std::domain_error("reciprocal: constant term must be 1");
    const int h = m.degree();
    if (h < 1) throw std::domain_error("reciprocal: degree must be >= 1");
    std::vector<unsigned> exps;
    for (int i = 0; i <= h; ++i) {
        if (m.bit(static_cast<unsigned>(i))) exps.push_back(static_cast<unsigned>(h - i));
    }
    return Gf2Poly::from_exponents(exps);
}

}  // namespace gf2p
