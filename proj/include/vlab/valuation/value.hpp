#pragma once

#include <compare>
#include <string>
#include <vector>

#include "vlab/arith/poly.hpp"
#include "vlab/arith/rat.hpp"

namespace vlab {

/// a*1 + b*r with r larger than every rational, or infinity. Ordered
/// lexicographically on (b, a).
class Value {
public:
    Value() = default;
    Value(Rat a, Rat b = Rat(0)) : a_(std::move(a)), b_(std::move(b)) {}
    static Value infinity() {
        Value v;
        v.inf_ = true;
        return v;
    }

    bool is_infinite() const { return inf_; }
    const Rat& a() const { return a_; }
    const Rat& b() const { return b_; }

    friend Value operator+(const Value& x, const Value& y) {
        if (x.inf_ || y.inf_) return infinity();
        return Value(x.a_ + y.a_, x.b_ + y.b_);
    }
    friend Value operator-(const Value& x, const Value& y); // y finite
    Value operator*(const Rat& k) const { return inf_ ? *this : Value(a_ * k, b_ * k); }

    friend bool operator==(const Value& x, const Value& y) {
        if (x.inf_ || y.inf_) return x.inf_ == y.inf_;
        return x.a_ == y.a_ && x.b_ == y.b_;
    }
    friend std::strong_ordering operator<=>(const Value& x, const Value& y) {
        if (x.inf_ || y.inf_) return x.inf_ <=> y.inf_;
        if (auto c = x.b_ <=> y.b_; c != 0) return c;
        return x.a_ <=> y.a_;
    }

    std::string str() const;

private:
    bool inf_ = false;
    Rat a_{0}, b_{0};
};

/// p-adic valuation of a rational number.
Value vp_rational(const Rat& x, const Int& p);

struct Segment {
    Rat slope;
    long length;
    friend bool operator==(const Segment&, const Segment&) = default;
};

/// Lower convex hull of points (i, v_i), slopes strictly increasing. A segment
/// of slope s and length l accounts for l roots of value -s.
struct NewtonPolygon {
    std::vector<Segment> segments;
    std::vector<std::pair<long, Rat>> vertices;
    long zero_roots = 0; // order of vanishing at 0

    static NewtonPolygon from_points(const std::vector<std::pair<long, Rat>>& pts);
    /// Value of the line of the segment with this slope at abscissa i.
    Rat height_at(std::size_t segment, long i) const;
    long start(std::size_t segment) const;
};

NewtonPolygon newton_polygon_p(const Poly<RationalField>& f, const Int& p);

/// unit * p^shift with relative precision N (absolute precision p^(shift+N)).
struct PadicApprox {
    Int p;
    long shift = 0;
    Int unit;
    long N = 0;
    friend bool operator==(const PadicApprox&, const PadicApprox&) = default;
    /// Integer representative in [0, p^(shift+N)).
    Int representative() const;
};

} // namespace vlab
