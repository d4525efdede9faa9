#pragma once

namespace vlab {

template <Field F>
typename F::Elem resultant(const Poly<F>& a, const Poly<F>& b) {
    const F& k = a.field();
    if (a.is_zero() || b.is_zero()) return k.zero();
    auto power = [&](typename F::Elem x, int e) {
        auto r = k.one();
        for (int i = 0; i < e; ++i) r = k.mul(r, x);
        return r;
    };
    Poly<F> u = a, v = b;
    auto acc = k.one();
    while (true) {
        const int du = u.degree(), dv = v.degree();
        if (dv == 0) return k.mul(acc, power(v.lc(), du));
        Poly<F> r = u % v;
        if (r.is_zero()) return k.zero();
        // res(u, v) = (-1)^(du dv) lc(v)^(du - deg r) res(v, r)
        auto factor = power(v.lc(), du - r.degree());
        if ((du % 2 == 1) && (dv % 2 == 1)) factor = k.neg(factor);
        acc = k.mul(acc, factor);
        u = std::move(v);
        v = std::move(r);
    }
}

} // namespace vlab
