#ifndef GF2PERIOD_PERIOD_HPP
#define GF2PERIOD_PERIOD_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gf2period/factor.hpp"

namespace gf2p {

enum class PeriodMethod { naive, factored };

/// `proven` when every prime in the certificate sits in the deterministic
/// Miller-Rabin range (below 2^64); `probabilistic` otherwise.
enum class PrimalityConfidence { proven, probabilistic };

/// Minimality certificate for a period e of M: the prime factorization of e
/// together with, for each prime p | e, the residue x^(e/p) mod M. The
/// period is exactly the order of x iff x^e = 1 and every witness differs
/// from 1.
struct PeriodCertificate {
    IntFactorization period_factors;
    std::vector<std::pair<Nat, Gf2Poly>> witnesses;  // (p, x^(e/p) mod M)
};

struct PeriodResult {
    Nat period;
    PeriodMethod method = PeriodMethod::factored;
    PeriodCertificate certificate;
    PrimalityConfidence primality_confidence = PrimalityConfidence::proven;
};

struct PeriodOptions {
    std::uint64_t naive_cap = std::uint64_t{1} << 24;
    FactorOptions factor;
};

struct CertCheck {
    bool ok;
    std::string reason;  // "ok" on success, otherwise the first failed check
};

constexpr std::uint64_t kDefaultNaiveCap = std::uint64_t{1} << 24;

/// Exact oracle: iterates r <- r*x mod m from r = x and returns the first e
/// with r = 1. Requires m(0) = 1 and degree(m) >= 1; throws std::domain_error
/// ("period undefined") otherwise and ResourceError when e would exceed cap.
PeriodResult period_naive(const Gf2Poly& m, std::uint64_t cap = kDefaultNaiveCap);

/// Order of x modulo an irreducible f != x: starts from 2^d - 1 and strips
/// every prime that keeps x^(e/p) = 1. Requires is_irreducible(f), f(0) = 1.
Nat order_of_irreducible(const Gf2Poly& f, const FactorOptions& opts = {});

/// Period by factorization: m = prod f_i^(k_i) gives
/// e = lcm_i(order(f_i)) * 2^ceil(log2(max_i k_i)). The certificate is
/// populated and self-checked before returning. Requires m(0) = 1 and
/// degree(m) >= 1.
PeriodResult period(const Gf2Poly& m, const PeriodOptions& opts = {});

/// True iff f is irreducible of degree h with the maximum order 2^h - 1.
bool is_primitive(const Gf2Poly& f, const FactorOptions& opts = {});

/// Recomputes every claim in the certificate: the factorization rebuilds the
/// period, every factor is prime, x^period = 1, and x^(period/p) != 1 for
/// each certified prime. Never throws; failures carry a reason code.
CertCheck verify_certificate(const Gf2Poly& m, const PeriodResult& result);

}  // namespace gf2p

#endif  // GF2PERIOD_PERIOD_HPP
