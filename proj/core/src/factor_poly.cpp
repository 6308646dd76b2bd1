#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "gf2period/factor.hpp"

namespace gf2p {

namespace {

// Square root of a perfect square: with a vanishing derivative only even
// exponents occur, so bit i of the root is bit 2i of f.
Gf2Poly even_bit_sqrt(const Gf2Poly& f) {
    std::vector<unsigned> exps;
    for (int i = 0; i <= f.degree(); i += 2) {
        if (f.bit(static_cast<unsigned>(i))) exps.push_back(static_cast<unsigned>(i) / 2);
    }
    return Gf2Poly::from_exponents(exps);
}

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            out.push_back(p);
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

Gf2Poly random_poly_below(int degree_bound, std::mt19937_64& rng) {
    std::vector<std::uint64_t> w(static_cast<std::size_t>(degree_bound) / 64 + 1);
    for (auto& word : w) word = rng();
    const unsigned top = static_cast<unsigned>(degree_bound) % 64;
    w.back() &= (std::uint64_t{1} << top) - 1;  // keep degree < degree_bound
    return Gf2Poly::from_words(std::move(w));
}

// Characteristic-2 trace map Tr(a) = a + a^2 + a^4 + ... + a^(2^(d-1)) mod f.
Gf2Poly trace_map(const Gf2Poly& a, unsigned d, const Gf2Poly& f) {
    Gf2Poly acc = a;
    Gf2Poly pow = a;
    for (unsigned i = 1; i < d; ++i) {
        pow = mod_reduce(pow * pow, f);
        acc = acc + pow;
    }
    return acc;
}

// Splits a squarefree product of irreducibles all of degree d.
void equal_degree_split(const Gf2Poly& f, unsigned d, std::mt19937_64& rng,
                        std::vector<Gf2Poly>& out) {
    if (f.degree() == static_cast<int>(d)) {
        out.push_back(f);
        return;
    }
    while (true) {
        Gf2Poly a = random_poly_below(f.degree(), rng);
        if (a.is_zero()) continue;
        Gf2Poly t = trace_map(a, d, f);
        if (t.is_zero()) continue;
        Gf2Poly g = gcd(t, f);
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree_split(g, d, rng, out);
            equal_degree_split(divrem(f, g).quotient, d, rng, out);
            return;
        }
    }
}

// Distinct-degree split of a squarefree input: list of (product of all
// irreducible factors of degree d, d).
std::vector<std::pair<Gf2Poly, unsigned>> distinct_degree_split(Gf2Poly f) {
    std::vector<std::pair<Gf2Poly, unsigned>> out;
    Gf2Poly frob = mod_reduce(Gf2Poly::x(), f);  // x^(2^k) mod f
    unsigned d = 0;
    while (f.degree() >= 1) {
        if (2 * (d + 1) > static_cast<unsigned>(f.degree())) {
            out.emplace_back(f, static_cast<unsigned>(f.degree()));
            break;
        }
        ++d;
        frob = mod_reduce(frob * frob, f);
        Gf2Poly g = gcd(frob + mod_reduce(Gf2Poly::x(), f), f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = divrem(f, g).quotient;
            frob = mod_reduce(frob, f);
        }
    }
    return out;
}

}  // namespace

Gf2Poly PolyFactorization::product() const {
    Gf2Poly acc = Gf2Poly::one();
    for (const auto& [poly, mult] : factors) {
        for (unsigned i = 0; i < mult; ++i) acc = acc * poly;
    }
    return acc;
}

bool is_irreducible(const Gf2Poly& f) {
    if (f.degree() < 1) throw std::domain_error("is_irreducible: degree must be >= 1");
    const unsigned d = static_cast<unsigned>(f.degree());
    const Gf2Poly x_mod = mod_reduce(Gf2Poly::x(), f);

    auto frobenius_iterate = [&](unsigned k) {  // x^(2^k) mod f
        Gf2Poly t = x_mod;
        for (unsigned i = 0; i < k; ++i) t = mod_reduce(t * t, f);
        return t;
    };

    if (frobenius_iterate(d) != x_mod) return false;
    for (unsigned q : prime_divisors(d)) {
        if (gcd(frobenius_iterate(d / q) + x_mod, f).degree() != 0) return false;
    }
    return true;
}

std::vector<std::pair<Gf2Poly, unsigned>> squarefree_decomposition(const Gf2Poly& f) {
    if (f.degree() < 1)
        throw std::domain_error("squarefree_decomposition: degree must be >= 1");

    std::vector<std::pair<Gf2Poly, unsigned>> out;
    Gf2Poly deriv = formal_derivative(f);
    if (deriv.is_zero()) {
        for (auto& [part, mult] : squarefree_decomposition(even_bit_sqrt(f)))
            out.emplace_back(std::move(part), mult * 2);
    } else {
        Gf2Poly c = gcd(f, deriv);
        Gf2Poly w = divrem(f, c).quotient;
        unsigned i = 1;
        while (!w.is_one()) {
            Gf2Poly y = gcd(w, c);
            Gf2Poly part = divrem(w, y).quotient;
            if (!part.is_one()) out.emplace_back(std::move(part), i);
            c = divrem(c, y).quotient;
            w = std::move(y);
            ++i;
        }
        if (!c.is_one()) {
            for (auto& [part, mult] : squarefree_decomposition(even_bit_sqrt(c)))
                out.emplace_back(std::move(part), mult * 2);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.second != b.second ? a.second < b.second : a.first < b.first;
    });
    return out;
}

PolyFactorization factor_poly(const Gf2Poly& f, std::uint64_t rng_seed) {
    if (f.degree() < 1)
        throw std::domain_error("factor_poly: input must have degree >= 1");

    std::mt19937_64 rng(rng_seed);
    std::map<Gf2Poly, unsigned> acc;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        for (const auto& [prod, d] : distinct_degree_split(part)) {
            std::vector<Gf2Poly> irreducibles;
            equal_degree_split(prod, d, rng, irreducibles);
            for (auto& irr : irreducibles) acc[irr] += mult;
        }
    }

    PolyFactorization result;
    result.factors.assign(acc.begin(), acc.end());
    if (result.product() != f)
        throw std::logic_error("factor_poly: reconstruction check failed");
    return result;
}

}  // namespace gf2p
