#include <gtest/gtest.h>

#include <random>

#include "vlab/hensel/hensel.hpp"
#include "vlab/io/polytext.hpp"

using namespace vlab;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::INVALID_ARGUMENT;
}

Value vp(const Rat& x, std::uint64_t p) { return vp_rational(x, Int(std::to_string(p))); }

// f(b) mod p^N computed directly on the integer representative
bool root_mod(const QPoly& f, const PadicApprox& r, long N) {
    Rat fb = eval(f, Rat(r.representative()));
    return vp(fb, to_u64(r.p)) >= Value(Rat(N));
}

} // namespace

TEST(HenselLift, WorkedValue) {
    auto r = hensel_lift({parse_qpoly("x^2 - 2"), Rat(3), 7, 2});
    EXPECT_EQ(r.root.representative(), Int(10));
    EXPECT_EQ(r.root, (PadicApprox{Int(7), 0, Int(10), 2}));
}

TEST(HenselLift, ExactRoot) {
    for (std::uint64_t p : {2, 3, 11}) {
        auto r = hensel_lift({parse_qpoly("x^2 - 1"), Rat(1), p, 5});
        EXPECT_TRUE(r.exact);
        EXPECT_EQ(r.root.representative(), Int(1));
    }
}

TEST(HenselLift, Errors) {
    EXPECT_EQ(code_of([] { hensel_lift({parse_qpoly("x^2 - 2"), Rat(0), 2, 4}); }), ErrorCode::HENSEL_PRECONDITION);
    EXPECT_EQ(code_of([] { hensel_lift({parse_qpoly("x^2 - 2"), Rat(1), 7, 4}); }), ErrorCode::HENSEL_PRECONDITION);
    EXPECT_EQ(code_of([] { hensel_lift({parse_qpoly("x^2 - 2"), Rat(3), 7, 513}); }), ErrorCode::PRECISION_OVERFLOW);
    EXPECT_EQ(code_of([] { hensel_lift({parse_qpoly("x^2 - 1/7"), Rat(3), 7, 3}); }), ErrorCode::NOT_INTEGRAL);
    EXPECT_EQ(code_of([] { hensel_lift({parse_qpoly("x^2 - 2"), Rat(3), 8, 3}); }), ErrorCode::NOT_PRIME);
}

TEST(HenselLift, NonzeroDerivativeValue) {
    // x^2 - 17 at 2: f'(1) = 2 has value 1, f(1) = -16 has value 4 > 2
    auto r = hensel_lift({parse_qpoly("x^2 - 17"), Rat(1), 2, 20});
    EXPECT_EQ(r.derivative_value, Value(Rat(1)));
    EXPECT_TRUE(root_mod(parse_qpoly("x^2 - 17"), r.root, 20));
    EXPECT_GT(vp(Rat(r.root.representative()) - Rat(1), 2), Value(Rat(1)));
}

TEST(HenselLift, RandomProblems) {
    std::mt19937_64 rng(41);
    const std::uint64_t primes[] = {2, 3, 5, 7, 11, 13};
    int done = 0;
    while (done < 60) {
        std::uint64_t p = primes[rng() % 6];
        int deg = 2 + static_cast<int>(rng() % 4);
        std::vector<Rat> c(deg + 1);
        for (auto& x : c) x = Rat(static_cast<long>(rng() % 41) - 20);
        c.back() = Rat(1);
        Rat a(static_cast<long>(rng() % 50));
        // force a near-root: shift the constant so that f(a) = p^k * u
        QPoly f(RationalField{}, c);
        Rat fa = eval(f, a);
        long k = 1 + static_cast<long>(rng() % 6);
        c[0] = c[0] - fa + Rat(pow_int(Int(std::to_string(p)), k));
        f = QPoly(RationalField{}, c);
        Value d = vp(eval(derivative(f), a), p);
        if (d.is_infinite() || !(vp(eval(f, a), p) > d * Rat(2))) continue;
        long N = 1 + static_cast<long>(rng() % 30) + static_cast<long>(mpz_get_si(d.a().num().get_mpz_t()));
        auto r = hensel_lift({f, a, p, N});
        EXPECT_TRUE(root_mod(f, r.root, N));
        EXPECT_GT(vp(Rat(r.root.representative()) - a, p), d);
        for (std::size_t i = 0; i + 1 < r.trace.size(); ++i)
            EXPECT_GE(r.trace[i + 1].defect, r.trace[i].defect * Rat(2) - d * Rat(2));
        // a second seed in the same ball gives the same lift
        Rat a2 = a + Rat(pow_int(Int(std::to_string(p)), static_cast<unsigned long>(k)));
        if (vp(a2 - a, p) > d && vp(eval(f, a2), p) > d * Rat(2)) {
            auto r2 = hensel_lift({f, a2, p, N});
            EXPECT_EQ(r2.root.representative(), r.root.representative());
        }
        ++done;
    }
}

TEST(HenselSimpleRoot, Examples) {
    auto r = hensel_simple_root(parse_qpoly("x^2 - 7"), Int(1), 3, 10);
    Int b = r.root.representative();
    EXPECT_EQ(mod_floor(b, Int(3)), Int(1));
    EXPECT_EQ(mod_floor(b * b - 7, pow_int(Int(3), 10)), Int(0));
    EXPECT_EQ(hensel_simple_root(parse_qpoly("x - 5"), Int(5), 7, 3).root.representative(), Int(5));
    EXPECT_EQ(code_of([] { hensel_simple_root(parse_qpoly("x^2"), Int(0), 2, 3); }), ErrorCode::NOT_SIMPLE_ROOT);
    EXPECT_EQ(code_of([] { hensel_simple_root(parse_qpoly("x^2 - 7"), Int(0), 3, 3); }), ErrorCode::NOT_SIMPLE_ROOT);
    ExtField F(5, {0, 1});
    auto r5 = hensel_simple_root(parse_qpoly("x^2 + 1"), F, F.from_int(2), 6);
    EXPECT_EQ(mod_floor(r5.root.representative() * r5.root.representative() + 1, pow_int(Int(5), 6)), Int(0));
    ExtField F9 = ExtField::standard(3, 2);
    EXPECT_EQ(code_of([&] { hensel_simple_root(parse_qpoly("x^2 + 1"), F9, F9.generator(), 4); }),
              ErrorCode::DOMAIN_MISMATCH);
}

TEST(PadicApprox, Normalization) {
    EXPECT_EQ(padic_from_residue(Int(18), Int(3), 4), (PadicApprox{Int(3), 2, Int(2), 2}));
    EXPECT_EQ(padic_from_residue(Int(81), Int(3), 4), (PadicApprox{Int(3), 0, Int(0), 4}));
    EXPECT_EQ(padic_from_residue(Int(18), Int(3), 4).representative(), Int(18));
}

TEST(HenselSet, Examples) {
    Valuation v2 = Valuation::padic(2);
    auto q = [&](const char* s) { return parse_poly(s, v2.field()); };
    auto a = hensel_set_membership(v2, q("x^2 + x + 2"));
    EXPECT_TRUE(a.member);
    EXPECT_TRUE(a.non_henselian);
    auto b = hensel_set_membership(v2, q("x^2 + 3*x + 2"));
    EXPECT_FALSE(b.member);
    EXPECT_EQ(b.reason, "reducible");
    auto c = hensel_set_membership(v2, q("x^2 + x + 1"));
    EXPECT_FALSE(c.member);
    EXPECT_EQ(c.reason, "shape: v(a_0) = 0");
    auto d = hensel_set_membership(v2, q("x^2 + 2*x + 2"));
    EXPECT_EQ(d.reason, "shape: v(a_1) = 1");
    auto lin = hensel_set_membership(v2, q("x + 1"));
    EXPECT_TRUE(lin.member);
    EXPECT_FALSE(lin.non_henselian);
    EXPECT_EQ(code_of([&] { hensel_set_membership(v2, q("x^2 + x + 1/2")); }), ErrorCode::NOT_INTEGRAL);
}

TEST(HenselSet, OverQuadraticField) {
    // Q(i) at 5: 5 splits; x^2 + x + 5 is irreducible over Q(i) (discriminant -19)
    auto K = build_tower({{"i", "x^2 + 1"}});
    Valuation v = Valuation::on(K, 5, 0);
    auto r = hensel_set_membership(v, parse_poly("x^2 + x + 5", K->top()));
    EXPECT_TRUE(r.member);
    // x^2 + x + (i + 2) or (2 - i): one has positive value at this prime
    auto s1 = hensel_set_membership(v, parse_poly("x^2 + x + (i + 2)", K->top()));
    auto s2 = hensel_set_membership(v, parse_poly("x^2 + x + (2 - i)", K->top()));
    EXPECT_NE(s1.reason.rfind("shape", 0) == 0, s2.reason.rfind("shape", 0) == 0);
}
