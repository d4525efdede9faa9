#include "vlab/valuation/valuation.hpp"

#include <algorithm>
#include <numeric>

namespace vlab {

Valuation::Valuation(PlacesPtr places, std::size_t index) : places_(std::move(places)), index_(index) {
    if (index_ >= places_->count()) fail(ErrorCode::INDEX_OUT_OF_RANGE, "no valuation with index " + std::to_string(index_));
}

Valuation Valuation::padic(std::uint64_t p) { return Valuation(Places::compute(FieldTower::rationals(), p), 0); }

Valuation Valuation::on(const TowerPtr& tower, std::uint64_t p, std::size_t index, const PlaceOptions& opt) {
    return Valuation(Places::compute(tower, p, opt), index);
}

bool operator==(const Valuation& a, const Valuation& b) {
    if (a.p() != b.p() || a.index_ != b.index_) return false;
    if (a.places_ == b.places_) return true;
    const auto& ta = *a.tower();
    const auto& tb = *b.tower();
    return ta.depth() == tb.depth() && ta.same_prefix(tb, ta.depth());
}

NewtonPolygon newton_polygon(const Poly<TowerField>& f, const Valuation& v) {
    if (f.is_zero()) fail(ErrorCode::ZERO_POLY, "Newton polygon of the zero polynomial");
    if (!(f.field() == v.field())) fail(ErrorCode::DOMAIN_MISMATCH, "polynomial is not over the valuation's field");
    std::vector<std::pair<long, Rat>> pts;
    for (int i = 0; i <= f.degree(); ++i)
        if (!f.field().is_zero(f.coeffs()[i])) pts.emplace_back(i, v.value(f.coeffs()[i]).a());
    return NewtonPolygon::from_points(pts);
}

bool restricts(const Valuation& w, const Valuation& v) {
    if (w.p() != v.p()) return false;
    const auto& tw = *w.tower();
    const auto& tv = *v.tower();
    if (tv.depth() > tw.depth() || !tw.same_prefix(tv, tv.depth()))
        fail(ErrorCode::DOMAIN_MISMATCH, "valuation field is not a subfield of the extension's tower");
    const TowerField top = w.field();
    for (const auto& g : v.places()->ideal_basis(v.index()))
        if (!(w.value(top.embed(g)) > Value(Rat(0)))) return false;
    return true;
}

std::optional<Separation> separate(const Valuation& a, const Valuation& b) {
    if (a.p() != b.p()) {
        AlgElem x = a.field().from_int(static_cast<long>(a.p()));
        return Separation{x, a.value(x), b.value(x)};
    }
    if (a == b) return std::nullopt;
    for (const auto& g : a.places()->ideal_basis(a.index())) {
        Value va = a.value(g), vb = b.value(g);
        if (va != vb) return Separation{g, va, vb};
    }
    return std::nullopt;
}

namespace {

// Rationals n/d in lowest terms with max(|n|, d) = H, ordered by d, |n|, sign.
std::vector<Rat> rationals_of_height(long H) {
    std::vector<Rat> out;
    if (H == 0) return {Rat(0)};
    for (long d = 1; d <= H; ++d) {
        for (long n = 0; n <= H; ++n) {
            if (std::max(n, d) != H || std::gcd(n, d) != 1) continue;
            out.emplace_back(Int(n), Int(d));
            if (n != 0) out.emplace_back(Int(-n), Int(d));
        }
    }
    return out;
}

} // namespace

AlgElem weak_approximation(const std::vector<Valuation>& vs, const std::vector<AlgElem>& targets,
                           const WeakApproxOptions& opt) {
    if (vs.empty()) fail(ErrorCode::INVALID_ARGUMENT, "no valuations given");
    if (vs.size() != targets.size()) fail(ErrorCode::INVALID_ARGUMENT, "one target per valuation is required");
    const TowerField k = vs[0].field();
    for (const auto& v : vs)
        if (!(v.field() == k)) fail(ErrorCode::DOMAIN_MISMATCH, "valuations live on different fields");
    for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (!separate(vs[i], vs[j]))
                fail(ErrorCode::DUPLICATE_VALUATIONS, "valuations " + std::to_string(i) + " and " + std::to_string(j) +
                                                          " coincide");
    for (std::size_t i = 0; i < vs.size(); ++i)
        if (vs[i].value(targets[i]) < Value(Rat(0)))
            fail(ErrorCode::INVALID_ARGUMENT, "target " + std::to_string(i) + " has negative value");

    auto ok = [&](const AlgElem& a) {
        for (std::size_t i = 0; i < vs.size(); ++i) {
            if (vs[i].value(a) < Value(Rat(0))) return false;
            if (!(vs[i].value(k.sub(a, targets[i])) > Value(Rat(0)))) return false;
        }
        return true;
    };
    if (vs.size() == 1 && ok(targets[0])) return targets[0];

    const int D = k.degree();
    long tried = 0;
    for (long H = 0;; ++H) {
        // all coordinate vectors with entries of height <= H and at least one of height H
        std::vector<Rat> pool;
        for (long h = 0; h <= H; ++h) {
            auto r = rationals_of_height(h);
            pool.insert(pool.end(), r.begin(), r.end());
        }
        const std::size_t fresh_from = pool.size() - rationals_of_height(H).size();
        std::vector<std::size_t> idx(D, 0);
        while (true) {
            bool has_fresh = std::any_of(idx.begin(), idx.end(), [&](std::size_t i) { return i >= fresh_from; });
            if (has_fresh) {
                AlgElem a{std::vector<Rat>(D)};
                for (int j = 0; j < D; ++j) a.c[j] = pool[idx[j]];
                if (ok(a)) return a;
                if (++tried > opt.max_candidates)
                    fail(ErrorCode::INVALID_ARGUMENT, "weak approximation search budget exhausted");
            }
            int pos = 0;
            while (pos < D && ++idx[pos] == pool.size()) idx[pos++] = 0;
            if (pos == D) break;
        }
    }
}

} // namespace vlab
