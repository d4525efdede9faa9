// Factorization over Q: modular factorization, Hensel lifting, recombination.

#include <algorithm>
#include <functional>

#include "vlab/nf/numberfields.hpp"

namespace vlab {

namespace {

using ZPoly = std::vector<Int>; // low to high, trimmed

void ztrim(ZPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    ztrim(r);
    return r;
}

ZPoly zadd(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    ztrim(a);
    return a;
}

ZPoly zsub(ZPoly a, const ZPoly& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    ztrim(a);
    return a;
}

ZPoly zmod(ZPoly a, const Int& m) {
    for (auto& c : a) c = mod_floor(c, m);
    ztrim(a);
    return a;
}

ZPoly zsym(ZPoly a, const Int& m) {
    for (auto& c : a) c = symmetric_mod(c, m);
    ztrim(a);
    return a;
}

ZPoly zscale(ZPoly a, const Int& s) {
    for (auto& c : a) c *= s;
    ztrim(a);
    return a;
}

// Division with remainder modulo m by b whose leading coefficient is a unit mod m.
std::pair<ZPoly, ZPoly> zdivmod_mod(ZPoly a, const ZPoly& b, const Int& m) {
    a = zmod(a, m);
    const int db = zdeg(b);
    if (zdeg(a) < db) return {{}, a};
    const Int inv = inverse_mod(b.back(), m);
    ZPoly q(a.size() - b.size() + 1, 0);
    for (int i = zdeg(a); i >= db; --i) {
        Int t = mod_floor(a[i] * inv, m);
        if (t == 0) continue;
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) a[i - db + j] = mod_floor(a[i - db + j] - t * b[j], m);
    }
    a.resize(db);
    ztrim(a);
    ztrim(q);
    return {q, a};
}

Int content(const ZPoly& a) {
    Int g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

ZPoly primitive_part(ZPoly a) {
    Int g = content(a);
    if (g == 0) return a;
    if (a.back() < 0) g = -g;
    for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return a;
}

Poly<PrimeField> to_fp(const ZPoly& a, const PrimeField& k) {
    std::vector<std::uint64_t> v;
    for (const auto& c : a) v.push_back(k.from_int(c));
    return Poly<PrimeField>(k, std::move(v));
}

ZPoly from_fp(const Poly<PrimeField>& a) {
    ZPoly r;
    for (auto c : a.coeffs()) r.push_back(Int(std::to_string(c)));
    return r;
}

// One quadratic Hensel step (von zur Gathen - Gerhard, Alg. 15.10): from
// f = g h, s g + t h = 1 mod m with h monic to the same relations mod m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
    const Int m2 = m * m;
    ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
    auto [q, r] = zdivmod_mod(zmul(s, e), h, m2);
    ZPoly g2 = zmod(zadd(zadd(g, zmul(t, e)), zmul(q, g)), m2);
    ZPoly h2 = zmod(zadd(h, r), m2);
    ZPoly b = zmod(zsub(zadd(zmul(s, g2), zmul(t, h2)), ZPoly{1}), m2);
    auto [c, d] = zdivmod_mod(zmul(s, b), h2, m2);
    s = zmod(zsub(s, d), m2);
    t = zmod(zsub(zsub(t, zmul(t, b)), zmul(c, g2)), m2);
    g = std::move(g2);
    h = std::move(h2);
}

// Lift f = lc(f) * prod(us) mod p to mod p^k; us monic mod p. Returns monic lifts.
std::vector<ZPoly> multifactor_lift(const ZPoly& f, const std::vector<ZPoly>& us, std::uint64_t p, long k) {
    const Int P(std::to_string(p));
    const Int Pk = pow_int(P, static_cast<unsigned long>(k));
    if (us.size() == 1) {
        return {zmod(zscale(f, inverse_mod(f.back(), Pk)), Pk)};
    }
    const PrimeField fp(p);
    const std::size_t half = us.size() / 2;
    std::vector<ZPoly> left(us.begin(), us.begin() + half), right(us.begin() + half, us.end());
    // h monic: product of the left factors; g carries the leading coefficient
    ZPoly h{1};
    for (const auto& u : left) h = zmod(zmul(h, u), P);
    ZPoly g{mod_floor(f.back(), P)};
    for (const auto& u : right) g = zmod(zmul(g, u), P);
    auto [one, s0, t0] = xgcd(to_fp(g, fp), to_fp(h, fp));
    if (!one.is_one()) fail(ErrorCode::INVALID_ARGUMENT, "modular factors are not coprime");
    Poly<PrimeField> sf = s0 % to_fp(h, fp);
    Poly<PrimeField> tf = exact_div(Poly<PrimeField>::constant(fp, 1) - sf * to_fp(g, fp), to_fp(h, fp));
    ZPoly s = from_fp(sf), t = from_fp(tf);
    Int m = P;
    while (m < Pk) {
        hensel_step(f, g, h, s, t, m);
        m *= m;
    }
    g = zmod(g, Pk);
    h = zmod(h, Pk);
    auto lh = multifactor_lift(h, left, p, k);
    auto lg = multifactor_lift(g, right, p, k);
    lh.insert(lh.end(), lg.begin(), lg.end());
    return lh;
}

bool squarefree_mod(const ZPoly& f, const PrimeField& k) {
    auto fp = to_fp(f, k);
    if (fp.degree() != zdeg(f)) return false;
    return gcd(fp, derivative(fp)).degree() == 0;
}

// f primitive, squarefree, degree >= 1, positive leading coefficient.
std::vector<ZPoly> zassenhaus(const ZPoly& f, std::uint64_t seed) {
    const int n = zdeg(f);
    if (n <= 1) return {f};

    // among the first few good primes keep the one with fewest modular factors
    std::uint64_t best_p = 0;
    std::vector<ZPoly> best;
    int good = 0;
    for (std::uint64_t p = 3; good < 5; p = next_prime(p)) {
        PrimeField k(p);
        if (mpz_divisible_ui_p(f.back().get_mpz_t(), p) || !squarefree_mod(f, k)) continue;
        ++good;
        auto fac = factor_over_fp(to_fp(f, k), seed);
        std::vector<ZPoly> us;
        for (const auto& [u, m] : fac.factors) us.push_back(from_fp(u));
        if (best_p == 0 || us.size() < best.size()) {
            best_p = p;
            best = std::move(us);
        }
        if (best.size() == 1) return {f};
    }

    // Mignotte-type bound on coefficients of factors of f
    Int maxc = 0;
    for (const auto& c : f) maxc = std::max(maxc, Int(abs(c)));
    const Int bound = pow_int(2, static_cast<unsigned long>(n)) * (n + 1) * maxc;
    const Int lc = f.back();
    const Int P(std::to_string(best_p));
    long k = 1;
    Int Pk = P;
    while (Pk <= 2 * abs(lc) * bound) {
        Pk *= P;
        ++k;
    }
    std::vector<ZPoly> lifted = multifactor_lift(f, best, best_p, k);

    std::vector<ZPoly> out;
    ZPoly g = f;
    std::vector<std::size_t> T(lifted.size());
    for (std::size_t i = 0; i < T.size(); ++i) T[i] = i;
    std::size_t s = 1;
    while (2 * s <= T.size()) {
        bool found = false;
        std::vector<std::size_t> idx(s);
        for (std::size_t i = 0; i < s; ++i) idx[i] = i;
        while (true) {
            const Int b = g.back();
            ZPoly gs{b}, hs{b};
            std::vector<bool> in(T.size(), false);
            for (auto i : idx) in[i] = true;
            for (std::size_t i = 0; i < T.size(); ++i) {
                if (in[i])
                    gs = zmod(zmul(gs, lifted[T[i]]), Pk);
                else
                    hs = zmod(zmul(hs, lifted[T[i]]), Pk);
            }
            gs = zsym(gs, Pk);
            hs = zsym(hs, Pk);
            if (zmul(gs, hs) == zscale(g, b)) {
                out.push_back(primitive_part(gs));
                g = primitive_part(hs);
                std::vector<std::size_t> rest;
                for (std::size_t i = 0; i < T.size(); ++i)
                    if (!in[i]) rest.push_back(T[i]);
                T = std::move(rest);
                found = true;
                break;
            }
            // next s-subset in lexicographic order
            std::size_t pos = s;
            while (pos > 0 && idx[pos - 1] == T.size() - s + pos - 1) --pos;
            if (pos == 0) break;
            ++idx[pos - 1];
            for (std::size_t j = pos; j < s; ++j) idx[j] = idx[j - 1] + 1;
        }
        if (!found) ++s;
    }
    out.push_back(g);
    return out;
}

} // namespace

Factorization<RationalField> factor_over_q(const QPoly& f, std::uint64_t seed) {
    if (f.is_zero()) fail(ErrorCode::ZERO_POLY, "factorization of the zero polynomial");
    RationalField Q;
    Factorization<RationalField> out{f.lc(), {}};
    for (const auto& [part, mult] : squarefree_decomposition_char0(f)) {
        Int den = 1;
        for (const auto& c : part.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.den().get_mpz_t());
        ZPoly z;
        for (const auto& c : part.coeffs()) z.push_back(c.num() * (den / c.den()));
        z = primitive_part(z);
        for (const auto& g : zassenhaus(z, seed)) {
            std::vector<Rat> v;
            for (const auto& c : g) v.push_back(Rat(c));
            out.factors.emplace_back(monic(QPoly(Q, std::move(v))), mult);
        }
    }
    out.sort();
    return out;
}

bool is_irreducible_over_q(const QPoly& f) {
    if (f.degree() < 1) return false;
    auto fac = factor_over_q(f);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

} // namespace vlab
