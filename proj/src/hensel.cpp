#include "vlab/hensel/hensel.hpp"

namespace vlab {

namespace {

Int to_residue(const Rat& x, const Int& m) {
    return mod_floor(x.num() * inverse_mod(x.den(), m), m);
}

Value vp(const Rat& x, std::uint64_t p) { return vp_rational(x, Int(std::to_string(p))); }

void check_integral(const QPoly& f, std::uint64_t p) {
    for (const auto& c : f.coeffs())
        if (vp(c, p) < Value(Rat(0))) fail(ErrorCode::NOT_INTEGRAL, "coefficient " + c.str() + " is not p-integral");
}

long as_long(const Value& v) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), v.a().num().get_mpz_t(), v.a().den().get_mpz_t());
    return q.get_si();
}

} // namespace

PadicApprox padic_from_residue(const Int& b, const Int& p, long N) {
    const Int m = pow_int(p, static_cast<unsigned long>(N));
    Int r = mod_floor(b, m);
    if (r == 0) return PadicApprox{p, 0, Int(0), N};
    const long s = vp_int(r, p);
    return PadicApprox{p, s, r / pow_int(p, static_cast<unsigned long>(s)), N - s};
}

HenselResult hensel_lift(const HenselProblem& prob, const HenselOptions& opt) {
    if (!is_prime(prob.p)) fail(ErrorCode::NOT_PRIME, std::to_string(prob.p) + " is not prime");
    if (prob.f.is_zero()) fail(ErrorCode::ZERO_POLY, "lifting a root of the zero polynomial");
    if (prob.N < 1) fail(ErrorCode::INVALID_ARGUMENT, "precision must be positive");
    if (prob.N > opt.max_precision)
        fail(ErrorCode::PRECISION_OVERFLOW, "precision " + std::to_string(prob.N) + " exceeds the cap " +
                                                std::to_string(opt.max_precision));
    check_integral(prob.f, prob.p);
    if (vp(prob.seed, prob.p) < Value(Rat(0))) fail(ErrorCode::NOT_INTEGRAL, "seed is not p-integral");

    const Int P(std::to_string(prob.p));
    const QPoly df = derivative(prob.f);
    const Value delta = vp(eval(df, prob.seed), prob.p);
    const Value v0 = vp(eval(prob.f, prob.seed), prob.p);
    if (delta.is_infinite()) fail(ErrorCode::HENSEL_PRECONDITION, "f'(seed) = 0");
    if (!(v0 > delta * Rat(2)))
        fail(ErrorCode::HENSEL_PRECONDITION, "v(f(seed)) = " + v0.str() + " is not above 2 v(f'(seed)) = " +
                                                 (delta * Rat(2)).str());

    HenselResult res;
    res.derivative_value = delta;
    const long d = as_long(delta);
    const Value goal(Rat(prob.N + d));
    Rat b = prob.seed;
    Value vk = v0;
    res.trace.push_back({b, vk});
    while (!vk.is_infinite() && vk < goal) {
        // truncation keeps the defect at least 2 vk - 2 d
        const long M = 2 * as_long(vk) - d;
        const Int PM = pow_int(P, static_cast<unsigned long>(M));
        Rat next = b - eval(prob.f, b) / eval(df, b);
        b = Rat(to_residue(next, PM));
        vk = vp(eval(prob.f, b), prob.p);
        res.trace.push_back({b, vk});
    }
    res.exact = vk.is_infinite();
    const Int PN = pow_int(P, static_cast<unsigned long>(prob.N));
    res.root = padic_from_residue(to_residue(b, PN), P, prob.N);
    return res;
}

HenselResult hensel_simple_root(const QPoly& f, const Int& abar, std::uint64_t p, long N, const HenselOptions& opt) {
    if (!is_prime(p)) fail(ErrorCode::NOT_PRIME, std::to_string(p) + " is not prime");
    if (f.is_zero()) fail(ErrorCode::ZERO_POLY, "lifting a root of the zero polynomial");
    check_integral(f, p);
    const Int P(std::to_string(p));
    const Rat a(mod_floor(abar, P));
    if (to_residue(eval(f, a), P) != 0) fail(ErrorCode::NOT_SIMPLE_ROOT, "residue is not a root mod p");
    if (to_residue(eval(derivative(f), a), P) == 0)
        fail(ErrorCode::NOT_SIMPLE_ROOT, "residue is a multiple root mod p");
    return hensel_lift(HenselProblem{f, a, p, N}, opt);
}

HenselResult hensel_simple_root(const QPoly& f, const ExtField& F, const FqElem& abar, long N,
                                const HenselOptions& opt) {
    if (F.degree() != 1) fail(ErrorCode::DOMAIN_MISMATCH, "lifting is implemented for prime residue fields");
    return hensel_simple_root(f, Int(std::to_string(abar.rep.at(0))), F.prime(), N, opt);
}

HenselSetReport hensel_set_membership(const Valuation& v, const KPoly& f, const Limits& limits) {
    if (f.is_zero()) fail(ErrorCode::ZERO_POLY, "membership of the zero polynomial");
    if (!(f.field() == v.field())) fail(ErrorCode::DOMAIN_MISMATCH, "polynomial is not over the valuation's field");
    const TowerField& k = f.field();
    const int n = f.degree();
    if (n < 1 || !(f.lc() == k.one())) fail(ErrorCode::INVALID_ARGUMENT, "polynomial must be monic of positive degree");
    HenselSetReport rep;
    for (const auto& c : f.coeffs()) {
        rep.coefficient_values.push_back(v.value(c));
        if (rep.coefficient_values.back() < Value(Rat(0)))
            fail(ErrorCode::NOT_INTEGRAL, "coefficient of negative value " + rep.coefficient_values.back().str());
    }
    auto shape_fail = [&](int i) {
        rep.reason = "shape: v(a_" + std::to_string(i) + ") = " + rep.coefficient_values[i].str();
        return rep;
    };
    if (rep.coefficient_values[n - 1] != Value(Rat(0))) return shape_fail(n - 1);
    for (int i = 0; i + 2 <= n; ++i)
        if (!(rep.coefficient_values[i] > Value(Rat(0)))) return shape_fail(i);
    if (!is_irreducible_over(f, limits)) {
        rep.reason = "reducible";
        return rep;
    }
    rep.member = true;
    rep.non_henselian = n >= 2;
    return rep;
}

} // namespace vlab
