#ifndef GF2PERIOD_FACTOR_HPP
#define GF2PERIOD_FACTOR_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "gf2period/gf2poly.hpp"
#include "gf2period/nat.hpp"

namespace gf2p {

struct FactorOptions {
    /// Seeds every randomized step (equal-degree splitting, large Miller-Rabin
    /// bases are derived from the input instead). Same seed, same behavior.
    std::uint64_t seed = 0;

    /// Pollard rho gives up after this many iterations per composite
    /// candidate and raises ResourceError naming the unfactored cofactor.
    std::uint64_t rho_budget = std::uint64_t{1} << 24;
};

/// Factorization into irreducibles, sorted by (degree, bitmask ascending).
/// Invariants: product of poly^multiplicity reconstructs the input, every
/// entry is irreducible, no two entries share a polynomial.
struct PolyFactorization {
    std::vector<std::pair<Gf2Poly, unsigned>> factors;

    Gf2Poly product() const;
};

/// Prime factorization of a natural, primes ascending.
struct IntFactorization {
    std::vector<std::pair<Nat, unsigned>> factors;

    Nat product() const;

    /// True when every prime is below 2^64 (deterministic primality range).
    bool deterministic_range() const;
};

/// Rabin's test: f irreducible over GF(2) iff x^(2^d) = x (mod f) and
/// gcd(x^(2^(d/q)) - x, f) = 1 for every prime q dividing d = degree(f).
/// Requires degree(f) >= 1.
bool is_irreducible(const Gf2Poly& f);

/// f = prod part_i^mult_i with each part squarefree and the parts pairwise
/// coprime; sorted by (multiplicity, part). Characteristic-2 rule: when the
/// derivative vanishes, f is a perfect square and exponents halve into the
/// square root. Requires degree(f) >= 1.
std::vector<std::pair<Gf2Poly, unsigned>> squarefree_decomposition(const Gf2Poly& f);

/// Complete factorization into irreducibles: squarefree decomposition, then
/// distinct-degree splitting via gcd(x^(2^k) - x, f), then equal-degree
/// splitting with the characteristic-2 trace map on seeded random elements.
/// Output is deterministic and independent of the seed (canonical sort).
/// Requires degree(f) >= 1.
PolyFactorization factor_poly(const Gf2Poly& f, std::uint64_t rng_seed = 0);

/// Miller-Rabin: a deterministic witness set below 2^64, 64 rounds with
/// bases derived deterministically from n above it.
bool is_prime(const Nat& n);

/// Trial division by primes below 10^6, then Pollard rho (Brent variant)
/// under opts.rho_budget. Requires n >= 2. Deterministic for a given seed;
/// throws ResourceError with the unfactored cofactor when the budget runs out.
IntFactorization factor_int(const Nat& n, const FactorOptions& opts = {});

/// Shared sieve of primes below 10^6.
const std::vector<std::uint32_t>& small_primes();

}  // namespace gf2p

#endif  // GF2PERIOD_FACTOR_HPP
