#include <algorithm>
#include <map>
#include <random>

#include "gf2period/errors.hpp"
#include "gf2period/factor.hpp"

namespace gf2p {

namespace {

// Proven sufficient for all n < 3.3 * 10^24, which covers the u64 range.
constexpr std::uint32_t kDeterministicBases[] = {2,  3,  5,  7,  11, 13,
                                                 17, 19, 23, 29, 31, 37};
constexpr unsigned kLargeRounds = 64;

bool miller_rabin_round(const Nat& n, const Nat& n_minus_1, const Nat& d,
                        unsigned long s, const Nat& base) {
    Nat x;
    mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
    if (x == 1 || x == n_minus_1) return true;
    for (unsigned long i = 1; i < s; ++i) {
        x = (x * x) % n;
        if (x == n_minus_1) return true;
    }
    return false;
}

Nat deterministic_base(std::mt19937_64& rng, const Nat& n) {
    // Uniform enough for witness purposes: assemble as many 64-bit words as
    // n has, reduce into [2, n-2].
    const std::size_t words = mpz_sizeinbase(n.get_mpz_t(), 2) / 64 + 1;
    Nat r = 0;
    for (std::size_t i = 0; i < words; ++i) {
        r <<= 64;
        r += static_cast<unsigned long>(rng());
    }
    return 2 + r % (n - 3);
}

struct RhoBudget {
    std::uint64_t remaining;
    const Nat* candidate;

    void spend(std::uint64_t k) {
        if (k >= remaining)
            throw ResourceError("pollard rho iteration budget exhausted",
                                to_decimal(*candidate));
        remaining -= k;
    }
};

// Brent's cycle-finding variant of Pollard rho with f(x) = x^2 + c. Returns
// a nontrivial factor or n itself when this c fails.
Nat rho_brent(const Nat& n, unsigned long c, RhoBudget& budget) {
    const unsigned long batch = 128;
    Nat y = 2, x, ys, q = 1, g = 1, diff;
    std::uint64_t r = 1;
    auto step = [&](Nat& v) { v = (v * v + c) % n; };

    while (g == 1) {
        x = y;
        budget.spend(r);
        for (std::uint64_t i = 0; i < r; ++i) step(y);
        std::uint64_t k = 0;
        while (k < r && g == 1) {
            ys = y;
            const std::uint64_t chunk = std::min<std::uint64_t>(batch, r - k);
            budget.spend(chunk);
            for (std::uint64_t i = 0; i < chunk; ++i) {
                step(y);
                diff = x - y;
                q = (q * abs(diff)) % n;
            }
            g = gcd(q, n);
            k += chunk;
        }
        r *= 2;
    }
    if (g == n) {
        // Backtrack one step at a time from the last checkpoint.
        g = 1;
        while (g == 1) {
            budget.spend(1);
            step(ys);
            diff = x - ys;
            g = gcd(Nat(abs(diff)), n);
        }
    }
    return g;
}

Nat rho_factor(const Nat& n, const FactorOptions& opts) {
    RhoBudget budget{opts.rho_budget, &n};
    // Deterministic schedule over the polynomial offset c; the seed shifts
    // the schedule's starting point so distinct seeds explore distinct runs.
    for (unsigned long attempt = 0;; ++attempt) {
        const unsigned long c = 1 + static_cast<unsigned long>(
                                        (opts.seed + attempt) % 0xffffffffUL);
        Nat g = rho_brent(n, c, budget);
        if (g != n && g != 1) return g;
    }
}

void factor_recurse(const Nat& n, const FactorOptions& opts,
                    std::map<Nat, unsigned>& acc) {
    if (n == 1) return;
    if (is_prime(n)) {
        acc[n] += 1;
        return;
    }
    Nat g = rho_factor(n, opts);
    factor_recurse(g, opts, acc);
    factor_recurse(n / g, opts, acc);
}

}  // namespace

const std::vector<std::uint32_t>& small_primes() {
    static const std::vector<std::uint32_t> primes = [] {
        constexpr std::uint32_t limit = 1'000'000;
        std::vector<bool> composite(limit, false);
        std::vector<std::uint32_t> out;
        for (std::uint32_t p = 2; p < limit; ++p) {
            if (composite[p]) continue;
            out.push_back(p);
            for (std::uint64_t q = std::uint64_t{p} * p; q < limit; q += p)
                composite[static_cast<std::uint32_t>(q)] = true;
        }
        return out;
    }();
    return primes;
}

bool is_prime(const Nat& n) {
    if (n < 2) return false;
    for (std::uint32_t p : kDeterministicBases) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    if (n < 41 * 41) return true;  // no prime factor <= 37 and below 37^2+

    Nat n_minus_1 = n - 1;
    Nat d = n_minus_1;
    unsigned long s = 0;
    while (mpz_even_p(d.get_mpz_t())) {
        d >>= 1;
        ++s;
    }

    if (fits_u64(n)) {
        for (std::uint32_t b : kDeterministicBases) {
            if (!miller_rabin_round(n, n_minus_1, d, s, Nat(b))) return false;
        }
        return true;
    }
    std::mt19937_64 rng(static_cast<std::uint64_t>(mpz_get_ui(n.get_mpz_t())) ^
                        0x9e3779b97f4a7c15ULL);
    for (unsigned round = 0; round < kLargeRounds; ++round) {
        if (!miller_rabin_round(n, n_minus_1, d, s, deterministic_base(rng, n)))
            return false;
    }
    return true;
}

Nat IntFactorization::product() const {
    Nat acc = 1;
    for (const auto& [prime, exp] : factors) {
        for (unsigned i = 0; i < exp; ++i) acc *= prime;
    }
    return acc;
}

bool IntFactorization::deterministic_range() const {
    return std::all_of(factors.begin(), factors.end(),
                       [](const auto& f) { return fits_u64(f.first); });
}

IntFactorization factor_int(const Nat& n, const FactorOptions& opts) {
    if (n < 2) throw std::domain_error("factor_int: input must be >= 2");

    std::map<Nat, unsigned> acc;
    Nat rem = n;
    for (std::uint32_t p : small_primes()) {
        const unsigned long p_squared = static_cast<unsigned long>(p) * p;
        if (mpz_cmp_ui(rem.get_mpz_t(), p_squared) < 0) break;
        while (mpz_divisible_ui_p(rem.get_mpz_t(), p)) {
            acc[Nat(p)] += 1;
            rem /= p;
        }
    }
    if (rem > 1) {
        const std::uint32_t bound = small_primes().back();
        // Below bound^2 with no small factor left, the remainder is prime.
        if (Nat(bound) * bound > rem)
            acc[rem] += 1;
        else
            factor_recurse(rem, opts, acc);
    }

    IntFactorization result;
    result.factors.assign(acc.begin(), acc.end());
    if (result.product() != n)
        throw std::logic_error("factor_int: reconstruction check failed");
    return result;
}

}  // namespace gf2p
