#include <gtest/gtest.h>

#include <random>

#include "vlab/io/polytext.hpp"
#include "vlab/valuation/places.hpp"

using namespace vlab;

namespace {

TowerPtr tower(std::vector<LevelSpec> specs) { return build_tower(specs); }

int sum_ef(const Places& pl) {
    int s = 0;
    for (std::size_t i = 0; i < pl.count(); ++i) s += pl.e(i) * pl.f(i);
    return s;
}

} // namespace

TEST(Places, QuadraticSplittingTypes) {
    auto K2 = tower({{"s", "x^2 - 2"}});
    auto a = Places::compute(K2, 2);
    ASSERT_EQ(a->count(), 1u);
    EXPECT_EQ(a->e(0), 2);
    EXPECT_EQ(a->f(0), 1);
    EXPECT_EQ(a->value(0, K2->top().generator(1)), Value(Rat::parse("1/2")));

    auto Ki = tower({{"i", "x^2 + 1"}});
    auto b = Places::compute(Ki, 5);
    EXPECT_EQ(b->count(), 2u);
    auto c = Places::compute(Ki, 3);
    ASSERT_EQ(c->count(), 1u);
    EXPECT_EQ(c->f(0), 2);
    auto d = Places::compute(Ki, 2);
    ASSERT_EQ(d->count(), 1u);
    EXPECT_EQ(d->e(0), 2);
}

TEST(Places, PaperInstance) {
    auto K = tower({{"a", "x^2 - 2*x - 6"}});
    auto pl = Places::compute(K, 3);
    ASSERT_EQ(pl->count(), 2u);
    TowerField k = K->top();
    std::vector<Value> vals{pl->value(0, k.generator(1)), pl->value(1, k.generator(1))};
    std::sort(vals.begin(), vals.end());
    EXPECT_EQ(vals[0], Value(Rat(0)));
    EXPECT_EQ(vals[1], Value(Rat(1)));
}

TEST(Places, BiquadraticAtThree) {
    auto K = tower({{"a", "x^2 - 3"}, {"b", "x^2 - 7"}});
    auto pl = Places::compute(K, 3);
    EXPECT_EQ(pl->count(), 2u);
    EXPECT_EQ(sum_ef(*pl), 4);
    auto q2 = Places::compute(K, 2);
    EXPECT_EQ(sum_ef(*q2), 4);
}

TEST(Places, FundamentalEqualityRandom) {
    std::mt19937_64 rng(17);
    int done = 0;
    while (done < 40) {
        int deg = 2 + static_cast<int>(rng() % 3);
        std::vector<Rat> c(deg + 1);
        for (auto& x : c) x = Rat(static_cast<long>(rng() % 41) - 20);
        c.back() = Rat(1);
        QPoly f(RationalField{}, c);
        if (!is_irreducible_over_q(f)) continue;
        auto K = FieldTower::rationals()->extend("a", to_tower_poly(f, FieldTower::rationals()->top()));
        for (std::uint64_t p : {2u, 3u, 5u, 7u}) {
            auto pl = Places::compute(K, p);
            EXPECT_EQ(sum_ef(*pl), deg) << print_qpoly(f) << " p=" << p;
            // valuation axioms on random elements
            TowerField k = K->top();
            for (int t = 0; t < 3; ++t) {
                AlgElem x = k.zero(), y = k.zero();
                for (int i = 0; i < deg; ++i) {
                    x.c[i] = Rat(static_cast<long>(rng() % 13) - 6);
                    y.c[i] = Rat(static_cast<long>(rng() % 13) - 6);
                }
                if (k.is_zero(x) || k.is_zero(y)) continue;
                for (std::size_t i = 0; i < pl->count(); ++i) {
                    EXPECT_EQ(pl->value(i, k.mul(x, y)), pl->value(i, x) + pl->value(i, y));
                    EXPECT_GE(pl->value(i, k.add(x, y)), std::min(pl->value(i, x), pl->value(i, y)));
                    if (pl->value(i, x) != pl->value(i, y))
                        EXPECT_EQ(pl->value(i, k.add(x, y)), std::min(pl->value(i, x), pl->value(i, y)));
                }
            }
        }
        ++done;
    }
}

TEST(Places, ResidueMaps) {
    auto K = tower({{"i", "x^2 + 1"}});
    auto pl = Places::compute(K, 3);
    TowerField k = K->top();
    const ExtField& F = pl->residue_field(0);
    EXPECT_EQ(F.degree(), 2);
    FqElem ri = pl->reduce(0, k.generator(1));
    EXPECT_EQ(F.mul(ri, ri), F.from_int(-1));
    AlgElem back = pl->lift(0, ri);
    EXPECT_GT(pl->value(0, k.sub(back, k.generator(1))), Value(Rat(0)));
}
