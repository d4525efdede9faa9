#include "vlab/nf/numberfields.hpp"

#include <algorithm>

#include "vlab/arith/linalg.hpp"

namespace vlab {

namespace {

using Vec = std::vector<Rat>;

KPoly lift_poly(const QPoly& f, const TowerField& k) { return to_tower_poly(f, k); }

// Newton interpolation through (i, values[i]), i = 0..n.
KPoly interpolate(const TowerField& k, const std::vector<AlgElem>& values) {
    const std::size_t n = values.size();
    std::vector<AlgElem> dd = values;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = n - 1; i >= j; --i) {
            dd[i] = k.scale(k.sub(dd[i], dd[i - 1]), Rat(1) / Rat(static_cast<long>(j)));
            if (i == j) break;
        }
    KPoly r(k);
    for (std::size_t j = n; j-- > 0;) {
        // r = r * (x - j) + dd[j]
        KPoly lin(k, {k.from_int(-static_cast<long>(j)), k.one()});
        r = r * lin + KPoly::constant(k, dd[j]);
    }
    return r;
}

// Coordinates of a level-`home` element over level `over`: chunks of size [K_over : Q].
std::vector<AlgElem> coords_over(const AlgElem& a, int sub) {
    std::vector<AlgElem> out;
    for (std::size_t i = 0; i < a.c.size(); i += sub) out.push_back(AlgElem{Vec(a.c.begin() + i, a.c.begin() + i + sub)});
    return out;
}

KPoly shift_poly(const KPoly& g, const AlgElem& c) {
    const TowerField& k = g.field();
    return compose(g, KPoly(k, {c, k.one()}));
}

std::vector<KPoly> trager(const KPoly& g, const Limits& limits, std::uint64_t seed) {
    if (g.degree() <= 1) return {g};
    const TowerField& k = g.field();
    const AlgElem alpha = k.generator(k.level());
    for (long s = 0;; ++s) {
        const AlgElem sa = k.scale(alpha, Rat(s));
        KPoly gs = shift_poly(g, k.neg(sa));
        KPoly n = norm_down(gs);
        if (gcd(n, derivative(n)).degree() > 0) continue;
        auto fac = factor_over_field(n, limits, seed);
        std::vector<KPoly> out;
        if (fac.factors.size() == 1) return {g};
        for (const auto& [h, m] : fac.factors) {
            KPoly d = gcd(gs, embed_poly(h, k));
            out.push_back(monic(shift_poly(d, sa)));
        }
        return out;
    }
}

} // namespace

KPoly norm_down(const KPoly& f) {
    const TowerField& k = f.field();
    if (k.level() == 0) fail(ErrorCode::INVALID_ARGUMENT, "norm from Q");
    const TowerField lower = k.below();
    const KPoly m = k.tower()->minpoly(k.level());
    const int d = m.degree();
    const int n = f.degree() * d;
    std::vector<AlgElem> values;
    for (int j = 0; j <= n; ++j) {
        AlgElem v = eval(f, k.from_int(j));
        KPoly pv(lower, k.split(v));
        values.push_back(resultant(m, pv));
    }
    return interpolate(lower, values);
}

Factorization<TowerField> factor_over_field(const KPoly& f, const Limits& limits, std::uint64_t seed) {
    if (f.is_zero()) fail(ErrorCode::ZERO_POLY, "factorization of the zero polynomial");
    const TowerField& k = f.field();
    if (static_cast<int>(k.level()) > limits.max_depth)
        fail(ErrorCode::TOWER_DEPTH, "tower depth exceeds " + std::to_string(limits.max_depth));
    if (k.level() == 0) {
        auto fq = factor_over_q(to_rational_poly(f), seed);
        Factorization<TowerField> out{k.from_rat(fq.unit), {}};
        for (const auto& [g, m] : fq.factors) out.factors.emplace_back(lift_poly(g, k), m);
        return out;
    }
    Factorization<TowerField> out{f.lc(), {}};
    for (const auto& [part, mult] : squarefree_decomposition_char0(f))
        for (auto& g : trager(part, limits, seed)) out.factors.emplace_back(std::move(g), mult);
    out.sort();
    return out;
}

bool is_irreducible_over(const KPoly& f, const Limits& limits) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    if (f.field().level() == 0) return is_irreducible_over_q(to_rational_poly(f));
    auto fac = factor_over_field(f, limits);
    return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

KPoly minimal_polynomial(const TowerField& home, const AlgElem& a, std::size_t over) {
    if (over > home.level()) fail(ErrorCode::TOWER_DEPTH, "base level lies above the element's field");
    const TowerField base = home.tower()->field(over);
    const int sub = base.degree();
    const std::size_t rows = home.degree() / sub;
    std::vector<std::vector<AlgElem>> powers{coords_over(home.one(), sub)};
    AlgElem cur = home.one();
    while (true) {
        cur = home.mul(cur, a);
        auto next = coords_over(cur, sub);
        Matrix<TowerField> mat(rows);
        std::vector<AlgElem> rhs(rows);
        for (std::size_t r = 0; r < rows; ++r) {
            for (const auto& p : powers) mat[r].push_back(p[r]);
            rhs[r] = base.neg(next[r]);
        }
        if (auto sol = solve(base, mat, rhs)) {
            std::vector<AlgElem> c = *sol;
            c.push_back(base.one());
            return KPoly(base, std::move(c));
        }
        powers.push_back(std::move(next));
    }
}

QPoly minimal_polynomial_over_q(const TowerField& home, const AlgElem& a) {
    return to_rational_poly(minimal_polynomial(home, a, 0));
}

PrimitiveElement primitive_element(const TowerPtr& tower, const Limits& limits) {
    const std::size_t n = tower->depth();
    if (n == 0) fail(ErrorCode::TOWER_DEPTH, "the rationals have no generators");
    if (static_cast<int>(n) > limits.max_depth)
        fail(ErrorCode::TOWER_DEPTH, "tower depth exceeds " + std::to_string(limits.max_depth));
    const TowerField top = tower->top();
    const int D = tower->degree();
    auto try_comb = [&](const std::vector<long>& comb) -> std::optional<PrimitiveElement> {
        AlgElem theta = top.zero();
        for (std::size_t i = 0; i < n; ++i)
            theta = top.add(theta, top.scale(top.generator(i + 1), Rat(comb[i])));
        QPoly mp = minimal_polynomial_over_q(top, theta);
        if (mp.degree() != D) return std::nullopt;
        return PrimitiveElement{theta, mp, comb};
    };
    if (n == 1) return *try_comb({1});
    // first coefficient 1; the others range over 1..M with max exactly M, lexicographic
    for (long M = 1;; ++M) {
        std::vector<long> rest(n - 1, 1);
        while (true) {
            if (*std::max_element(rest.begin(), rest.end()) == M) {
                std::vector<long> comb{1};
                comb.insert(comb.end(), rest.begin(), rest.end());
                if (auto pe = try_comb(comb)) return *pe;
            }
            std::size_t i = rest.size();
            while (i > 0 && rest[i - 1] == M) rest[--i] = 1;
            if (i == 0) break;
            ++rest[i - 1];
        }
    }
}

AbsoluteBasis::AbsoluteBasis(TowerPtr tower, const Limits& limits) : tower_(std::move(tower)) {
    const int D = tower_->degree();
    const TowerField top = tower_->top();
    if (tower_->depth() == 0) {
        prim_ = PrimitiveElement{top.zero(), QPoly(RationalField{}, {Rat(0), Rat(1)}), {}};
    } else {
        prim_ = primitive_element(tower_, limits);
    }
    from_theta_.assign(D, Vec(D, Rat(0)));
    AlgElem p = top.one();
    for (int j = 0; j < D; ++j) {
        for (int i = 0; i < D; ++i) from_theta_[i][j] = p.c[i];
        p = top.mul(p, prim_.theta);
    }
    auto inv = inverse(RationalField{}, from_theta_);
    if (!inv) fail(ErrorCode::INVALID_ARGUMENT, "primitive element powers are dependent");
    to_theta_ = std::move(*inv);
}

std::vector<Rat> AbsoluteBasis::to_theta(const AlgElem& a) const {
    const std::size_t D = to_theta_.size();
    Vec out(D, Rat(0));
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < D; ++j)
            if (!a.c[j].is_zero()) out[i] += to_theta_[i][j] * a.c[j];
    return out;
}

AlgElem AbsoluteBasis::from_theta(const std::vector<Rat>& coords) const {
    const std::size_t D = from_theta_.size();
    AlgElem out{Vec(D, Rat(0))};
    for (std::size_t i = 0; i < D; ++i)
        for (std::size_t j = 0; j < coords.size() && j < D; ++j)
            if (!coords[j].is_zero()) out.c[i] += from_theta_[i][j] * coords[j];
    return out;
}

} // namespace vlab
