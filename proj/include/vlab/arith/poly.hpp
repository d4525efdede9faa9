#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vlab/arith/fields.hpp"
#include "vlab/error.hpp"

namespace vlab {

/// Dense univariate polynomial over a field object F. Coefficient i is the
/// coefficient of x^i; the zero polynomial has no coefficients and the
/// leading coefficient is otherwise nonzero.
template <Field F>
class Poly {
public:
    using Elem = typename F::Elem;

    explicit Poly(F field) : field_(std::move(field)) {}
    Poly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

    static Poly constant(const F& field, Elem c) { return Poly(field, {std::move(c)}); }
    static Poly x(const F& field) { return Poly(field, {field.zero(), field.one()}); }
    static Poly monomial(const F& field, Elem c, int deg) {
        std::vector<Elem> v(deg + 1, field.zero());
        v[deg] = std::move(c);
        return Poly(field, std::move(v));
    }

    const F& field() const { return field_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && field_.eq(c_[0], field_.one()); }
    const std::vector<Elem>& coeffs() const { return c_; }
    Elem coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : field_.zero(); }
    const Elem& lc() const {
        if (c_.empty()) fail(ErrorCode::ZERO_POLY, "leading coefficient of the zero polynomial");
        return c_.back();
    }

    Poly& operator+=(const Poly& o) {
        check_domain(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.add(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_domain(o);
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), field_.zero());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = field_.sub(c_[i], o.c_[i]);
        trim();
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    Poly operator-() const {
        Poly r(field_);
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(field_.neg(a));
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_domain(b);
        if (a.is_zero() || b.is_zero()) return Poly(a.field_);
        const F& k = a.field_;
        std::vector<Elem> r(a.c_.size() + b.c_.size() - 1, k.zero());
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (k.is_zero(a.c_[i])) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                r[i + j] = k.add(r[i + j], k.mul(a.c_[i], b.c_[j]));
        }
        return Poly(k, std::move(r));
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly scaled(const Elem& s) const {
        if (field_.is_zero(s)) return Poly(field_);
        Poly r(field_);
        r.c_.reserve(c_.size());
        for (const auto& a : c_) r.c_.push_back(field_.mul(a, s));
        return r;
    }
    // Multiply by x^k.
    Poly shifted(int k) const {
        if (is_zero()) return *this;
        std::vector<Elem> v(k, field_.zero());
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(field_, std::move(v));
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        if (!(a.field_ == b.field_) || a.c_.size() != b.c_.size()) return false;
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            if (!a.field_.eq(a.c_[i], b.c_[i])) return false;
        return true;
    }

    void check_domain(const Poly& o) const {
        if (!(field_ == o.field_))
            fail(ErrorCode::DOMAIN_MISMATCH,
                 "polynomials over different domains: " + field_.describe() + " vs " + o.field_.describe());
    }

private:
    void trim() {
        while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
    }

    F field_;
    std::vector<Elem> c_;
};

template <Field F>
Poly<F> monic(const Poly<F>& a) {
    if (a.is_zero()) return a;
    return a.scaled(a.field().inv(a.lc()));
}

template <Field F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
    a.check_domain(b);
    if (b.is_zero()) fail(ErrorCode::DIVISION_BY_ZERO, "polynomial division by zero");
    const F& k = a.field();
    using Elem = typename F::Elem;
    if (a.degree() < b.degree()) return {Poly<F>(k), a};
    std::vector<Elem> r = a.coeffs();
    std::vector<Elem> q(a.degree() - b.degree() + 1, k.zero());
    const Elem inv_lc = k.inv(b.lc());
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        if (k.is_zero(r[i])) continue;
        Elem t = k.mul(r[i], inv_lc);
        q[i - db] = t;
        for (int j = 0; j <= db; ++j) r[i - db + j] = k.sub(r[i - db + j], k.mul(t, b.coeffs()[j]));
    }
    r.resize(db);
    return {Poly<F>(k, std::move(q)), Poly<F>(k, std::move(r))};
}

template <Field F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) { return divmod(a, b).second; }

template <Field F>
Poly<F> operator/(const Poly<F>& a, const Poly<F>& b) { return divmod(a, b).first; }

// Exact division; throws when b does not divide a.
template <Field F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) fail(ErrorCode::INVALID_ARGUMENT, "inexact polynomial division");
    return q;
}

template <Field F>
bool divides(const Poly<F>& d, const Poly<F>& a) { return (a % d).is_zero(); }

/// Monic gcd; gcd(0, 0) = 0.
template <Field F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
    a.check_domain(b);
    while (!b.is_zero()) {
        Poly<F> r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return monic(a);
}

/// Returns (g, s, t) with s*a + t*b = g monic.
template <Field F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const Poly<F>& a, const Poly<F>& b) {
    a.check_domain(b);
    const F& k = a.field();
    Poly<F> r0 = a, r1 = b;
    Poly<F> s0 = Poly<F>::constant(k, k.one()), s1(k);
    Poly<F> t0(k), t1 = Poly<F>::constant(k, k.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        r0 = std::exchange(r1, std::move(r));
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    auto inv = k.inv(r0.lc());
    return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <Field F>
Poly<F> derivative(const Poly<F>& a) {
    const F& k = a.field();
    std::vector<typename F::Elem> v;
    for (int i = 1; i <= a.degree(); ++i) v.push_back(k.mul(k.from_int(i), a.coeffs()[i]));
    return Poly<F>(k, std::move(v));
}

template <Field F>
typename F::Elem eval(const Poly<F>& a, const typename F::Elem& x) {
    const F& k = a.field();
    auto r = k.zero();
    for (int i = a.degree(); i >= 0; --i) r = k.add(k.mul(r, x), a.coeffs()[i]);
    return r;
}

// a(b(x))
template <Field F>
Poly<F> compose(const Poly<F>& a, const Poly<F>& b) {
    a.check_domain(b);
    Poly<F> r(a.field());
    for (int i = a.degree(); i >= 0; --i) r = r * b + Poly<F>::constant(a.field(), a.coeffs()[i]);
    return r;
}

template <Field F>
Poly<F> pow(const Poly<F>& a, unsigned long e) {
    Poly<F> r = Poly<F>::constant(a.field(), a.field().one()), b = a;
    while (e) {
        if (e & 1) r = r * b;
        e >>= 1;
        if (e) b = b * b;
    }
    return r;
}

template <Field F>
Poly<F> powmod(const Poly<F>& a, Int e, const Poly<F>& m) {
    Poly<F> r = Poly<F>::constant(a.field(), a.field().one()) % m, b = a % m;
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = (r * b) % m;
        e >>= 1;
        if (e > 0) b = (b * b) % m;
    }
    return r;
}

/// Product of the distinct irreducible factors, monic. Requires characteristic
/// zero or degree below the characteristic.
template <Field F>
Poly<F> squarefree_part(const Poly<F>& a) {
    if (a.is_zero()) fail(ErrorCode::ZERO_POLY, "squarefree part of the zero polynomial");
    const Int ch = a.field().characteristic();
    if (ch != 0 && Int(a.degree()) >= ch)
        fail(ErrorCode::INVALID_ARGUMENT, "squarefree_part needs degree below the characteristic");
    if (a.degree() <= 0) return Poly<F>::constant(a.field(), a.field().one());
    return monic(a / gcd(a, derivative(a)));
}

/// Squarefree decomposition in characteristic zero (Yun): returns (g_i, i)
/// with a = lc * prod g_i^i, each g_i monic squarefree and pairwise coprime.
template <Field F>
std::vector<std::pair<Poly<F>, int>> squarefree_decomposition_char0(const Poly<F>& a) {
    if (a.is_zero()) fail(ErrorCode::ZERO_POLY, "squarefree decomposition of the zero polynomial");
    std::vector<std::pair<Poly<F>, int>> out;
    if (a.degree() == 0) return out;
    Poly<F> f = monic(a);
    Poly<F> df = derivative(f);
    Poly<F> g = gcd(f, df);
    Poly<F> b = f / g;
    Poly<F> c = df / g;
    Poly<F> d = c - derivative(b);
    for (int i = 1; b.degree() > 0; ++i) {
        Poly<F> h = gcd(b, d);
        if (h.degree() > 0) out.emplace_back(h, i);
        b = b / h;
        c = d / h;
        d = c - derivative(b);
    }
    return out;
}

/// Degree first, then coefficients from the constant term upward.
template <Field F>
bool poly_less(const Poly<F>& a, const Poly<F>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    const F& k = a.field();
    for (int i = 0; i <= a.degree(); ++i) {
        if (k.less(a.coeffs()[i], b.coeffs()[i])) return true;
        if (k.less(b.coeffs()[i], a.coeffs()[i])) return false;
    }
    return false;
}

template <Field F>
struct Factorization {
    typename F::Elem unit;
    std::vector<std::pair<Poly<F>, int>> factors; // monic irreducible, multiplicity

    void sort() {
        std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) {
            if (poly_less(x.first, y.first)) return true;
            if (poly_less(y.first, x.first)) return false;
            return x.second < y.second;
        });
    }

    Poly<F> expand(const F& k) const {
        Poly<F> r = Poly<F>::constant(k, unit);
        for (const auto& [g, m] : factors) r = r * pow(g, static_cast<unsigned long>(m));
        return r;
    }
};

} // namespace vlab
