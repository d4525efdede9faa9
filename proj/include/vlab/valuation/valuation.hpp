#pragma once

#include <vector>

#include "vlab/valuation/places.hpp"

namespace vlab {

/// One p-adic valuation on the top field of a tower: a prime of Places,
/// normalized so that v(p) = 1.
class Valuation {
public:
    Valuation(PlacesPtr places, std::size_t index);
    /// The p-adic valuation on Q.
    static Valuation padic(std::uint64_t p);
    /// The i-th valuation above p on the top field of `tower`.
    static Valuation on(const TowerPtr& tower, std::uint64_t p, std::size_t index, const PlaceOptions& opt = {});

    const PlacesPtr& places() const { return places_; }
    std::size_t index() const { return index_; }
    const TowerPtr& tower() const { return places_->tower(); }
    TowerField field() const { return places_->field(); }
    std::uint64_t p() const { return places_->p(); }
    /// Absolute ramification index and residue degree over Q.
    int e() const { return places_->e(index_); }
    int f() const { return places_->f(index_); }

    Value value(const AlgElem& a) const { return places_->value(index_, a); }
    Value value(const Rat& r) const { return value(field().from_rat(r)); }

    friend bool operator==(const Valuation& a, const Valuation& b);

private:
    PlacesPtr places_;
    std::size_t index_;
};

/// Newton polygon of f (over the valuation's field) from points (i, v(a_i)).
NewtonPolygon newton_polygon(const Poly<TowerField>& f, const Valuation& v);

/// True iff `w` (on a tower extending v's tower) restricts to v.
bool restricts(const Valuation& w, const Valuation& v);

/// Element of `w`'s field on which the two differ, with both values; nullopt when equal.
struct Separation {
    AlgElem element;
    Value first, second;
};
std::optional<Separation> separate(const Valuation& a, const Valuation& b);

struct WeakApproxOptions {
    long max_candidates = 2000000;
};

/// Element a with v_i(a) >= 0 and v_i(a - a_i) > 0 for all i, found by a
/// height-ordered search and verified exactly.
AlgElem weak_approximation(const std::vector<Valuation>& vs, const std::vector<AlgElem>& targets,
                           const WeakApproxOptions& opt = {});

} // namespace vlab
