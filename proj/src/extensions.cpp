#include "vlab/ext/extensions.hpp"

#include <algorithm>

namespace vlab {

namespace {

std::string fresh_name(const TowerPtr& t, const std::string& base) {
    auto names = t->names();
    auto taken = [&](const std::string& s) { return s == "x" || std::find(names.begin(), names.end(), s) != names.end(); };
    if (!taken(base)) return base;
    for (int i = 2;; ++i) {
        std::string s = base + "_" + std::to_string(i);
        if (!taken(s)) return s;
    }
}

void check_growth(const TowerPtr& t, int deg, const Limits& limits) {
    if (static_cast<int>(t->depth()) + 1 > limits.max_depth)
        fail(ErrorCode::TOWER_DEPTH, "tower depth would exceed " + std::to_string(limits.max_depth));
    if (t->degree() * deg > limits.max_degree)
        fail(ErrorCode::DEGREE_BOUND, "tower degree would exceed " + std::to_string(limits.max_degree));
}

AlgElem power(const TowerField& k, const AlgElem& a, long e) {
    AlgElem base = e < 0 ? k.inv(a) : a;
    AlgElem r = k.one();
    for (long i = 0; i < (e < 0 ? -e : e); ++i) r = k.mul(r, base);
    return r;
}

bool step_less(const PathStep& a, const PathStep& b) {
    if (a.slope != b.slope) return a.slope < b.slope;
    if (poly_less(a.residual_factor, b.residual_factor)) return true;
    if (poly_less(b.residual_factor, a.residual_factor)) return false;
    return a.multiplicity < b.multiplicity;
}

// First-order path of the root a of g under the extension w of v.
PathStep first_step(const Valuation& v, const Poly<TowerField>& g, const Valuation& w, const AlgElem& a,
                    const Value& root_value, int e_rel, int f_rel, bool& consistent) {
    const TowerField k = v.field();
    const TowerField L = w.field();
    const ExtField& F = v.places()->residue_field(v.index());
    PathStep step{Rat(0), Poly<ExtField>(F), 1};
    consistent = true;
    if (root_value.is_infinite()) {
        // g = x: the root is zero
        step.residual_factor = Poly<ExtField>::x(F);
        return step;
    }
    step.slope = -root_value.a();
    NewtonPolygon np = newton_polygon(g, v);
    std::size_t seg = np.segments.size();
    for (std::size_t s = 0; s < np.segments.size(); ++s)
        if (np.segments[s].slope == step.slope) seg = s;
    if (seg == np.segments.size()) fail(ErrorCode::INVALID_ARGUMENT, "root value matches no Newton polygon segment");
    const int ev = v.e();
    // root value in units of the base uniformizer: h / b in lowest terms
    const Rat lam = root_value.a() * Rat(ev);
    const Int h = lam.num(), b = lam.den();
    const long bl = b.get_si(), hl = h.get_si();
    const long i0 = np.start(seg), len = np.segments[seg].length;
    const AlgElem& pi = v.places()->uniformizer(v.index());
    const long y0 = v.places()->ord(v.index(), g.coeffs()[i0]);
    std::vector<FqElem> rc;
    for (long j = 0; j * bl <= len; ++j) {
        const AlgElem& c = g.coeffs()[i0 + j * bl];
        const long y = y0 - j * hl;
        if (k.is_zero(c) || v.places()->ord(v.index(), c) != y) {
            rc.push_back(F.zero());
            continue;
        }
        rc.push_back(v.places()->reduce(v.index(), k.mul(c, power(k, pi, -y))));
    }
    Poly<ExtField> R(F, rc);
    const AlgElem theta = L.mul(power(L, a, bl), power(L, L.embed(pi), -hl));
    auto fac = factor_over_fp(R);
    for (const auto& [psi, mult] : fac.factors) {
        AlgElem val = L.zero();
        for (int j = psi.degree(); j >= 0; --j)
            val = L.add(L.mul(val, theta), L.embed(v.places()->lift(v.index(), psi.coeffs()[j])));
        if (w.value(val) > Value(Rat(0))) {
            step.residual_factor = psi;
            step.multiplicity = mult;
            if (mult == 1) consistent = (e_rel == bl && f_rel == psi.degree());
            return step;
        }
    }
    fail(ErrorCode::INVALID_ARGUMENT, "no residual factor vanishes at the root");
}

AlgElem map_level(const TowerPtr& second, std::size_t level, const AlgElem& a, const std::vector<AlgElem>& images,
                  const TowerField& target) {
    if (level == 0) return target.from_rat(a.c.at(0));
    const TowerField k = second->field(level);
    auto chunks = k.split(a);
    AlgElem r = target.zero();
    for (std::size_t j = chunks.size(); j-- > 0;)
        r = target.add(target.mul(r, images[level - 1]), map_level(second, level - 1, chunks[j], images, target));
    return r;
}

} // namespace

ExtensionReport extensions_of(const Valuation& v, const Poly<TowerField>& g0, const ExtensionOptions& opt) {
    const TowerField k = v.field();
    if (g0.is_zero()) fail(ErrorCode::ZERO_POLY, "extensions of the zero polynomial");
    if (!(g0.field() == k)) fail(ErrorCode::DOMAIN_MISMATCH, "polynomial is not over the valuation's field");
    if (g0.degree() < 1) fail(ErrorCode::NOT_IRREDUCIBLE, "constant polynomial");
    const Poly<TowerField> g = monic(g0);
    const Limits& limits = opt.places.limits;
    check_growth(v.tower(), g.degree(), limits);
    if (!is_irreducible_over(g, limits)) fail(ErrorCode::NOT_IRREDUCIBLE, "polynomial is reducible over " + k.describe());

    TowerPtr L = v.tower()->extend_unchecked(fresh_name(v.tower(), opt.root_name), g);
    PlacesPtr pl = Places::compute(L, v.p(), opt.places);
    const TowerField lt = L->top();
    const AlgElem a = lt.generator(L->depth());

    ExtensionReport rep;
    rep.degree = g.degree();
    for (std::size_t i = 0; i < pl->count(); ++i) {
        auto below = v.places()->match([&](const AlgElem& x) { return pl->value(i, lt.embed(x)); });
        if (!below || *below != v.index()) continue;
        ExtensionDescriptor d{v, g, Valuation(pl, i), {}, 0, 0, false, true, Value()};
        if (pl->e(i) % v.e() != 0 || pl->f(i) % v.f() != 0)
            fail(ErrorCode::INVALID_ARGUMENT, "inconsistent ramification data");
        d.e = pl->e(i) / v.e();
        d.f = pl->f(i) / v.f();
        d.root_value = pl->value(i, a);
        bool consistent = true;
        d.path.push_back(first_step(v, g, d.ext, a, d.root_value, d.e, d.f, consistent));
        d.path_consistent = consistent;
        rep.extensions.push_back(std::move(d));
    }
    std::stable_sort(rep.extensions.begin(), rep.extensions.end(), [](const auto& x, const auto& y) {
        if (step_less(x.path[0], y.path[0])) return true;
        if (step_less(y.path[0], x.path[0])) return false;
        if (x.e != y.e) return x.e < y.e;
        return x.f < y.f;
    });
    bool separated = true;
    for (std::size_t i = 0; i < rep.extensions.size(); ++i)
        for (std::size_t j = i + 1; j < rep.extensions.size(); ++j) {
            auto s = separate(rep.extensions[i].ext, rep.extensions[j].ext);
            if (!s) {
                separated = false;
                continue;
            }
            rep.separations.push_back({i, j, s->element, s->first, s->second});
        }
    for (const auto& d : rep.extensions) rep.certificate += d.e * d.f;
    rep.certified = separated && rep.certificate == rep.degree;
    for (auto& d : rep.extensions) d.certified = rep.certified;
    return rep;
}

Value value_of_element(const Poly<TowerField>& g, const ExtensionDescriptor& d) {
    if (!d.certified) fail(ErrorCode::UNCERTIFIED_DESCRIPTOR, "descriptor is not certified");
    if (!(g.field() == d.base.field())) fail(ErrorCode::DOMAIN_MISMATCH, "polynomial is not over the base field");
    const TowerField L = d.ext.field();
    const AlgElem a = L.generator(d.ext.tower()->depth());
    AlgElem val = L.zero();
    for (int j = g.degree(); j >= 0; --j) val = L.add(L.mul(val, a), L.embed(g.coeffs()[j]));
    return d.ext.value(val);
}

bool restricts_to(const ExtensionDescriptor& w, const Valuation& v) {
    if (!w.certified) fail(ErrorCode::UNCERTIFIED_DESCRIPTOR, "descriptor is not certified");
    return restricts(w.ext, v);
}

Compositum compositum(const TowerPtr& first, const TowerPtr& second, const Limits& limits) {
    std::size_t common = 0;
    while (common < std::min(first->depth(), second->depth()) && first->same_prefix(*second, common + 1)) ++common;
    Compositum c{first, {}};
    for (std::size_t i = 1; i <= common; ++i) c.images.push_back(first->top().generator(i));
    for (std::size_t i = common + 1; i <= second->depth(); ++i) {
        const TowerField top = c.tower->top();
        const auto mp = second->minpoly(i);
        std::vector<AlgElem> coeffs;
        for (const auto& x : mp.coeffs()) coeffs.push_back(map_level(second, i - 1, x, c.images, top));
        Poly<TowerField> mapped(top, coeffs);
        auto fac = factor_over_field(mapped, limits);
        const auto& psi = fac.factors.front().first;
        if (psi.degree() == 1) {
            c.images.push_back(top.neg(psi.coeffs()[0]));
            continue;
        }
        check_growth(c.tower, psi.degree(), limits);
        c.tower = c.tower->extend_unchecked(fresh_name(c.tower, second->level(i).name), psi);
        const TowerField nt = c.tower->top();
        for (auto& img : c.images) img = nt.embed(img);
        c.images.push_back(nt.generator(c.tower->depth()));
    }
    const TowerField top = c.tower->top();
    for (auto& img : c.images) img = top.embed(img);
    return c;
}

AlgElem map_into(const Compositum& c, const TowerPtr& second, const AlgElem& a) {
    return map_level(second, second->depth(), a, c.images, c.tower->top());
}

bool common_extension_exists(const Valuation& u, const Valuation& w, const PlaceOptions& opt) {
    if (u.p() != w.p()) fail(ErrorCode::INVALID_ARGUMENT, "valuations lie over different primes");
    Compositum c = compositum(u.tower(), w.tower(), opt.limits);
    PlacesPtr pc = Places::compute(c.tower, u.p(), opt);
    for (std::size_t i = 0; i < pc->count(); ++i) {
        Valuation z(pc, i);
        if (!restricts(z, u)) continue;
        bool ok = true;
        for (const auto& g : w.places()->ideal_basis(w.index()))
            if (!(z.value(map_into(c, w.tower(), g)) > Value(Rat(0)))) {
                ok = false;
                break;
            }
        if (ok) return true;
    }
    return false;
}

bool common_extension_exists(const ExtensionDescriptor& u, const ExtensionDescriptor& w, const PlaceOptions& opt) {
    if (!u.certified || !w.certified) fail(ErrorCode::UNCERTIFIED_DESCRIPTOR, "descriptor is not certified");
    return common_extension_exists(u.ext, w.ext, opt);
}

bool is_immediate(const ExtensionDescriptor& d) {
    if (!d.certified) fail(ErrorCode::UNCERTIFIED_DESCRIPTOR, "descriptor is not certified");
    return d.e == 1 && d.f == 1;
}

bool henselization_membership(const Poly<RationalField>& g, std::uint64_t p, std::size_t which,
                              const ExtensionOptions& opt) {
    Valuation v = Valuation::padic(p);
    auto rep = extensions_of(v, to_tower_poly(g, v.field()), opt);
    if (which >= rep.extensions.size())
        fail(ErrorCode::INDEX_OUT_OF_RANGE, "extension index " + std::to_string(which) + " out of range (" +
                                                std::to_string(rep.extensions.size()) + " extensions)");
    return is_immediate(rep.extensions[which]);
}

} // namespace vlab
