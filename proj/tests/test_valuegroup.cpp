#include <gtest/gtest.h>

#include <random>

#include "vlab/group/valuegroup.hpp"

using namespace vlab;

namespace {

GroupElem E(const char* a, const char* b) { return GroupElem(Rat::parse(a), Rat::parse(b)); }

FGGroup Z1r() { return FGGroup({E("1", "0"), E("0", "1")}); }

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::INVALID_ARGUMENT;
}

} // namespace

TEST(GroupContains, Examples) {
    EXPECT_TRUE(group_contains(Z1r(), E("3", "2")));
    EXPECT_FALSE(group_contains(Z1r(), E("0", "1/2")));
    EXPECT_TRUE(group_contains(FGGroup({E("1/3", "5/7")}), E("0", "0")));
    EXPECT_TRUE(group_contains(FGGroup{}, E("0", "0")));
    EXPECT_FALSE(group_contains(FGGroup{}, E("1", "0")));
    FGGroup g({E("2/3", "1"), E("1/2", "0")});
    EXPECT_TRUE(g.contains(E("7/6", "1")));
    EXPECT_FALSE(g.contains(E("1/3", "1")));
}

TEST(DivQuery, Examples) {
    EXPECT_TRUE(div_query(Z1r(), E("2", "0"), 2));
    EXPECT_FALSE(div_query(Z1r(), E("0", "1"), 2));
    EXPECT_TRUE(div_query(FGGroup({E("1", "0"), E("0", "1/2")}), E("0", "1"), 2));
    EXPECT_EQ(code_of([] { div_query(Z1r(), E("1/2", "0"), 2); }), ErrorCode::NOT_A_MEMBER);
}

TEST(ExtendDiv, Examples) {
    DivGroup G(Z1r());
    DivGroup H = extend_div(G, E("0", "1"), 2);
    EXPECT_TRUE(H.divides(E("0", "1"), 2));
    // x = a + 1 with a = r/2
    EXPECT_FALSE(H.divides(E("1", "1/2"), 3));
    EXPECT_FALSE(H.divides_oracle(E("1", "1/2"), 3));
    DivGroup same = extend_div(G, E("5", "1"), 1);
    EXPECT_EQ(same.group().basis(), G.group().basis());
    EXPECT_EQ(code_of([&] { extend_div(G, E("0", "1/3"), 2); }), ErrorCode::NOT_A_MEMBER);
}

TEST(ExtendDiv, NormalizesB) {
    // b = 2r is divisible by 2 in G: the adjunction reduces to a = r with n = 1
    DivGroup G(Z1r());
    DivGroup H = extend_div(G, E("0", "2"), 2);
    EXPECT_EQ(H.reduced_n(), 1);
    DivGroup K = extend_div(G, E("0", "6"), 4);
    EXPECT_EQ(K.reduced_n(), 2);
    EXPECT_EQ(K.reduced_b(), E("0", "3"));
}

TEST(ExtendDiv, PrimeDividingDegree) {
    // G = Z, a = 1/2: 2 divides 1 in H although the base part g = 1 is odd
    DivGroup G(FGGroup({E("1", "0")}));
    DivGroup H = extend_div(G, E("1", "0"), 2);
    EXPECT_TRUE(H.divides(E("1", "0"), 2));
    EXPECT_TRUE(H.divides_oracle(E("1", "0"), 2));
    EXPECT_FALSE(H.divides(E("1", "0"), 4));
}

TEST(ExtendDiv, AgreesWithLatticeRandom) {
    std::mt19937_64 rng(5);
    auto small = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    auto rnd_in = [&](const FGGroup& g) {
        GroupElem x(Rat(0));
        for (const auto& y : g.gens()) x = x + y * Rat(small(-4, 4));
        return x;
    };
    int queries = 0;
    for (int t = 0; t < 200; ++t) {
        std::vector<GroupElem> gens;
        int ng = static_cast<int>(small(1, 3));
        for (int i = 0; i < ng; ++i)
            gens.push_back(GroupElem(Rat(small(-6, 6)) / Rat(small(1, 4)), Rat(small(-3, 3)) / Rat(small(1, 3))));
        DivGroup H{FGGroup(gens)};
        int levels = static_cast<int>(small(1, 3));
        for (int l = 0; l < levels; ++l) H = extend_div(H, rnd_in(H.group()), small(1, 12));
        for (int j = 0; j < 5; ++j) {
            GroupElem x = rnd_in(H.group());
            long k = small(1, 30);
            ASSERT_EQ(H.divides(x, k), H.divides_oracle(x, k)) << "x = " << x.str() << " k = " << k;
            ++queries;
        }
    }
    EXPECT_EQ(queries, 1000);
}

TEST(DivQuery, Properties) {
    std::mt19937_64 rng(8);
    FGGroup g({E("1", "0"), E("1/6", "1/4"), E("0", "1/9")});
    for (int t = 0; t < 200; ++t) {
        GroupElem x(Rat(static_cast<long>(rng() % 37) - 18));
        x = x + E("1/6", "1/4") * Rat(static_cast<long>(rng() % 13) - 6) + E("0", "1/9") * Rat(static_cast<long>(rng() % 7));
        EXPECT_TRUE(div_query(g, x, 1));
        long q1 = 1 + static_cast<long>(rng() % 6), q2 = 1 + static_cast<long>(rng() % 6);
        if (div_query(g, x, q1))
            EXPECT_EQ(div_query(g, x, q1 * q2), div_query(g, x * (Rat(1) / Rat(q1)), q2));
    }
}

TEST(LeastPositive, Examples) {
    EXPECT_TRUE(least_positive_is_one(Z1r()));
    EXPECT_FALSE(least_positive_is_one(FGGroup({E("1/2", "0"), E("0", "1")})));
    EXPECT_TRUE(least_positive_is_one(FGGroup({E("1", "0"), E("0", "1/6")})));
    EXPECT_TRUE(least_positive_is_one(FGGroup({E("1", "0"), E("1/2", "1/2"), E("0", "1")})));
    EXPECT_FALSE(least_positive_is_one(FGGroup({E("1", "0"), E("1/2", "1"), E("0", "1")})));
    EXPECT_TRUE(least_positive_is_one(FGGroup({E("1", "0"), E("1/2", "1/2")})));
    EXPECT_EQ(code_of([] { least_positive_is_one(FGGroup({E("2", "0")})); }), ErrorCode::MISSING_ONE);
}

TEST(SubgroupIndex, Examples) {
    FGGroup H({E("1", "0"), E("0", "1/2")});
    EXPECT_EQ(subgroup_index(Z1r(), H), Int(2));
    EXPECT_EQ(subgroup_index(Z1r(), Z1r()), Int(1));
    EXPECT_EQ(code_of([] { subgroup_index(FGGroup({E("1", "0")}), Z1r()); }), ErrorCode::INFINITE_INDEX);
    EXPECT_EQ(code_of([&] { subgroup_index(H, Z1r()); }), ErrorCode::NOT_SUBGROUP);
    EXPECT_EQ(subgroup_index(FGGroup({E("4", "0")}), FGGroup({E("2/3", "0")})), Int(6));
}

TEST(SubgroupIndex, MultiplicativeRandom) {
    std::mt19937_64 rng(13);
    for (int t = 0; t < 100; ++t) {
        auto rnd = [&] { return Rat(static_cast<long>(rng() % 9) - 4) / Rat(1 + static_cast<long>(rng() % 4)); };
        GroupElem u(rnd(), Rat(1 + static_cast<long>(rng() % 3))), w(Rat(1) + rnd() * rnd(), Rat(0));
        if (u.a() * Rat(0) != Rat(0) || w.a().is_zero()) continue;
        FGGroup H({u, w});
        long k1 = 1 + static_cast<long>(rng() % 4), k2 = 1 + static_cast<long>(rng() % 4);
        FGGroup G1({u * Rat(k1), w});
        FGGroup G2({u * Rat(k1), w * Rat(k2)});
        EXPECT_EQ(subgroup_index(G1, H) * subgroup_index(G2, G1), subgroup_index(G2, H));
        EXPECT_EQ(subgroup_index(G2, H), Int(k1 * k2));
    }
}
