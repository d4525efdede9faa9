#include "vlab/valuation/value.hpp"

namespace vlab {

Value operator-(const Value& x, const Value& y) {
    if (y.inf_) fail(ErrorCode::INVALID_ARGUMENT, "subtracting an infinite value");
    if (x.inf_) return x;
    return Value(x.a_ - y.a_, x.b_ - y.b_);
}

std::string Value::str() const {
    if (inf_) return "inf";
    if (b_.is_zero()) return a_.str();
    std::string rb = b_ == Rat(1) ? "r" : b_.str() + "*r";
    if (a_.is_zero()) return rb;
    return a_.str() + " + " + rb;
}

Value vp_rational(const Rat& x, const Int& p) {
    if (!is_prime(p)) fail(ErrorCode::NOT_PRIME, p.get_str() + " is not prime");
    if (x.is_zero()) return Value::infinity();
    return Value(Rat(vp_rat(x, p)));
}

NewtonPolygon NewtonPolygon::from_points(const std::vector<std::pair<long, Rat>>& pts) {
    if (pts.empty()) fail(ErrorCode::ZERO_POLY, "Newton polygon of the zero polynomial");
    NewtonPolygon np;
    np.zero_roots = pts.front().first;
    // monotone chain lower hull; points sorted by abscissa
    std::vector<std::pair<long, Rat>> hull;
    auto cross_le = [](const auto& o, const auto& a, const auto& b) {
        // slope(o,a) >= slope(o,b) means a is not strictly below the chord o-b
        Rat s1 = (a.second - o.second) / Rat(a.first - o.first);
        Rat s2 = (b.second - o.second) / Rat(b.first - o.first);
        return s1 >= s2;
    };
    for (const auto& q : pts) {
        while (hull.size() >= 2 && cross_le(hull[hull.size() - 2], hull.back(), q)) hull.pop_back();
        hull.push_back(q);
    }
    np.vertices = hull;
    for (std::size_t i = 1; i < hull.size(); ++i) {
        long len = hull[i].first - hull[i - 1].first;
        np.segments.push_back({(hull[i].second - hull[i - 1].second) / Rat(len), len});
    }
    return np;
}

long NewtonPolygon::start(std::size_t segment) const { return vertices.at(segment).first; }

Rat NewtonPolygon::height_at(std::size_t segment, long i) const {
    const auto& v = vertices.at(segment);
    return v.second + segments.at(segment).slope * Rat(i - v.first);
}

NewtonPolygon newton_polygon_p(const Poly<RationalField>& f, const Int& p) {
    if (!is_prime(p)) fail(ErrorCode::NOT_PRIME, p.get_str() + " is not prime");
    if (f.is_zero()) fail(ErrorCode::ZERO_POLY, "Newton polygon of the zero polynomial");
    std::vector<std::pair<long, Rat>> pts;
    for (int i = 0; i <= f.degree(); ++i)
        if (!f.coeffs()[i].is_zero()) pts.emplace_back(i, Rat(vp_rat(f.coeffs()[i], p)));
    return NewtonPolygon::from_points(pts);
}

Int PadicApprox::representative() const {
    Int m = pow_int(p, static_cast<unsigned long>(shift + N));
    return mod_floor(unit * pow_int(p, static_cast<unsigned long>(shift)), m);
}

} // namespace vlab
