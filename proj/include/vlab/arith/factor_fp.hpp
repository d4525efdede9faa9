#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vlab/arith/poly.hpp"

namespace vlab {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed5eedULL;

namespace detail {

// Squarefree decomposition over a finite field (Musser, with p-th roots for
// the inseparable part). Returns monic squarefree parts with multiplicities.
template <FiniteField F>
std::vector<std::pair<Poly<F>, int>> squarefree_fq(const Poly<F>& a) {
    const F& k = a.field();
    const std::uint64_t p = k.prime();
    std::vector<std::pair<Poly<F>, int>> out;
    Poly<F> f = monic(a);
    if (f.degree() <= 0) return out;

    auto add = [&](const Poly<F>& g, int m) {
        for (auto& [h, e] : out) {
            if (h == g) {
                e += m;
                return;
            }
        }
        out.emplace_back(g, m);
    };

    Poly<F> df = derivative(f);
    if (df.is_zero()) {
        // f = g(x^p); take p-th roots of the coefficients.
        std::vector<typename F::Elem> v;
        for (int i = 0; i <= f.degree(); i += static_cast<int>(p)) v.push_back(k.pth_root(f.coeffs()[i]));
        for (auto& [g, m] : squarefree_fq(Poly<F>(k, std::move(v)))) add(g, m * static_cast<int>(p));
        return out;
    }
    Poly<F> c = gcd(f, df);
    Poly<F> w = f / c;
    for (int i = 1; w.degree() > 0; ++i) {
        Poly<F> y = gcd(w, c);
        Poly<F> z = w / y;
        if (z.degree() > 0) add(monic(z), i);
        w = y;
        c = c / y;
    }
    if (c.degree() > 0) {
        std::vector<typename F::Elem> v;
        for (int i = 0; i <= c.degree(); i += static_cast<int>(p)) v.push_back(k.pth_root(c.coeffs()[i]));
        for (auto& [g, m] : squarefree_fq(Poly<F>(k, std::move(v)))) add(g, m * static_cast<int>(p));
    }
    return out;
}

// Distinct-degree factorization of a monic squarefree polynomial.
template <FiniteField F>
std::vector<std::pair<Poly<F>, int>> distinct_degree(Poly<F> f) {
    const F& k = f.field();
    const Int q = k.order();
    std::vector<std::pair<Poly<F>, int>> out;
    const Poly<F> x = Poly<F>::x(k);
    Poly<F> h = x % f;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, q, f);
        Poly<F> g = gcd(f, h - x);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(monic(f), f.degree());
    return out;
}

template <FiniteField F>
Poly<F> random_poly(const F& k, int deg_bound, std::mt19937_64& rng) {
    std::vector<typename F::Elem> v;
    for (int i = 0; i < deg_bound; ++i) v.push_back(k.random(rng));
    return Poly<F>(k, std::move(v));
}

// Equal-degree splitting (Cantor-Zassenhaus) of a product of degree-d irreducibles.
template <FiniteField F>
void equal_degree(const Poly<F>& f, int d, std::mt19937_64& rng, std::vector<Poly<F>>& out) {
    if (f.degree() == d) {
        out.push_back(monic(f));
        return;
    }
    const F& k = f.field();
    const Int q = k.order();
    const Int qd = pow_int(q, static_cast<unsigned long>(d));
    const bool even = k.prime() == 2;
    while (true) {
        Poly<F> a = random_poly(k, f.degree(), rng);
        if (a.degree() <= 0) continue;
        Poly<F> g = gcd(a, f);
        if (g.degree() <= 0) {
            Poly<F> b(k);
            if (even) {
                // trace map a + a^2 + ... + a^(2^(m d - 1)) with q^d = 2^(m d)
                const long bits = static_cast<long>(mpz_sizeinbase(qd.get_mpz_t(), 2)) - 1;
                Poly<F> t = a % f;
                b = t;
                for (long i = 1; i < bits; ++i) {
                    t = (t * t) % f;
                    b += t;
                }
            } else {
                b = powmod(a, (qd - 1) / 2, f) - Poly<F>::constant(k, k.one());
            }
            g = gcd(b, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(f / g, d, rng, out);
            return;
        }
    }
}

} // namespace detail

/// Irreducibility over a finite field: no factor of degree <= n/2.
template <FiniteField F>
bool is_irreducible(const Poly<F>& a) {
    if (a.degree() < 1) return false;
    if (a.degree() == 1) return true;
    const F& k = a.field();
    const Poly<F> f = monic(a);
    const Poly<F> x = Poly<F>::x(k);
    Poly<F> h = x;
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        h = powmod(h, k.order(), f);
        if (gcd(f, h - x).degree() > 0) return false;
    }
    return true;
}

/// Factorization over F_p or F_{p^f} into monic irreducibles with
/// multiplicities. Output is sorted (degree, then coefficients) and therefore
/// independent of the splitting seed.
template <FiniteField F>
Factorization<F> factor_over_fp(const Poly<F>& a, std::uint64_t seed = kDefaultSeed) {
    if (a.is_zero()) fail(ErrorCode::ZERO_POLY, "factorization of the zero polynomial");
    Factorization<F> out{a.lc(), {}};
    std::mt19937_64 rng(seed);
    for (const auto& [g, m] : detail::squarefree_fq(a)) {
        for (const auto& [h, d] : detail::distinct_degree(g)) {
            std::vector<Poly<F>> parts;
            detail::equal_degree(h, d, rng, parts);
            for (auto& u : parts) {
                // squarefree parts from the separable and inseparable branches can
                // share an irreducible factor; merge multiplicities
                auto it = std::find_if(out.factors.begin(), out.factors.end(),
                                       [&](const auto& e) { return e.first == u; });
                if (it != out.factors.end()) {
                    it->second += m;
                } else {
                    out.factors.emplace_back(std::move(u), m);
                }
            }
        }
    }
    out.sort();
    return out;
}

} // namespace vlab
