#include <gtest/gtest.h>

#include <random>

#include "vlab/closure/closure.hpp"

using namespace vlab;

namespace {

GroupElem E(const char* a, const char* b) { return GroupElem(Rat::parse(a), Rat::parse(b)); }
MonomialElem M(const char* s) { return MonomialElem::parse(s); }

template <class F>
ErrorCode code_of(F&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::INVALID_ARGUMENT;
}

bool same_group(const FGGroup& a, const FGGroup& b) {
    for (const auto& g : a.gens())
        if (!b.contains(g)) return false;
    for (const auto& g : b.gens())
        if (!a.contains(g)) return false;
    return true;
}

} // namespace

TEST(Monomial, ParseAndPrint) {
    EXPECT_EQ(M("p^2*t*b1^-1").exponents, (std::vector<long>{2, 1, -1}));
    EXPECT_EQ(M("p^2 * t * b1^-1").str(), "p^2*t*b1^-1");
    EXPECT_EQ(M("1").str(), "1");
    EXPECT_TRUE(M("u*t").unit);
    EXPECT_EQ(M("t*t").exponents, (std::vector<long>{0, 2}));
    EXPECT_EQ(code_of([] { M("t^"); }), ErrorCode::PARSE_ERROR);
    EXPECT_EQ(code_of([] { M("q"); }), ErrorCode::PARSE_ERROR);
    EXPECT_EQ(code_of([] { M("b0"); }), ErrorCode::PARSE_ERROR);
}

TEST(FormallyPadic, Examples) {
    auto c0 = formally_padic_check(Stage::initial(3));
    EXPECT_TRUE(c0.all());
    auto c1 = formally_padic_check(Stage::over(3, FGGroup({E("1/2", "0"), E("0", "1")})));
    EXPECT_FALSE(c1.least_positive_one);
    EXPECT_TRUE(c1.residue_is_Fp);
    Stage s = closure_stage(Stage::initial(3), M("t"), 2);
    EXPECT_TRUE(formally_padic_check(s).all());
    EXPECT_TRUE(same_group(s.group.group(), FGGroup({E("1", "0"), E("0", "1/2")})));
    EXPECT_EQ(code_of([] { Stage::over(3, FGGroup({E("2", "0")})); }), ErrorCode::MALFORMED_STAGE);
    Stage bad = s;
    bad.roots.clear();
    EXPECT_EQ(code_of([&] { formally_padic_check(bad); }), ErrorCode::MALFORMED_STAGE);
}

TEST(ClosureStage, Examples) {
    Stage s0 = Stage::initial(5);
    Stage s1 = closure_stage(s0, M("t"), 2);
    EXPECT_EQ(s1.roots.size(), 1u);
    EXPECT_EQ(s1.roots[0].value, E("0", "1/2"));
    EXPECT_EQ(subgroup_index(s0.group.group(), s1.group.group()), Int(2));
    Stage s2 = closure_stage(s1, M("t"), 2);
    EXPECT_EQ(s2.roots.size(), 1u);
    EXPECT_EQ(s2.index, 2);
    Stage s3 = closure_stage(s0, M("p"), 3);
    EXPECT_EQ(s3.roots.size(), 0u);
    EXPECT_EQ(code_of([&] { closure_stage(s0, M("b1"), 2); }), ErrorCode::INVALID_ARGUMENT);
    EXPECT_EQ(code_of([&] { closure_stage(s0, M("t"), 4); }), ErrorCode::NOT_PRIME);
}

TEST(RunClosure, Examples) {
    Stage s0 = Stage::initial(2);
    auto run = run_closure(s0, {{M("t"), 2}, {M("t"), 3}});
    ASSERT_EQ(run.stages.size(), 3u);
    EXPECT_TRUE(same_group(run.stages.back().group.group(), FGGroup({E("1", "0"), E("0", "1/6")})));
    EXPECT_EQ(run.forced, (std::vector<bool>{true, true}));
    for (std::size_t i = 1; i < run.stages.size(); ++i)
        EXPECT_EQ(subgroup_index(run.stages[i - 1].group.group(), run.stages[i].group.group()),
                  Int(run.stages[i].roots.back().q));
    EXPECT_EQ(run_closure(s0, {}).stages.size(), 1u);
    auto twice = run_closure(s0, {{M("t"), 2}, {M("t"), 2}});
    EXPECT_EQ(twice.forced, (std::vector<bool>{true, false}));
}

TEST(RunClosure, RootsOfRoots) {
    // b1 = sqrt(t), then a cube root of p*b1: value (1 + r/2)/3
    auto run = run_closure(Stage::initial(3), {{M("t"), 2}, {M("p*b1"), 3}, {M("b2"), 2}});
    EXPECT_EQ(run.stages.back().roots.size(), 3u);
    EXPECT_EQ(run.stages.back().roots[2].value, E("1/6", "1/12"));
    EXPECT_TRUE(run.stages.back().flags.formally_padic);
}

TEST(RunClosure, InvariantsRandom) {
    std::mt19937_64 rng(17);
    const long primes[] = {2, 3, 5, 7};
    for (int t = 0; t < 40; ++t) {
        Stage s = Stage::initial(primes[rng() % 4]);
        std::vector<std::pair<GroupElem, long>> seen;
        for (int step = 0; step < 6; ++step) {
            MonomialElem a;
            a.exponents.resize(2 + s.roots.size());
            for (auto& e : a.exponents) e = static_cast<long>(rng() % 7) - 3;
            long q = primes[rng() % 4];
            Stage n = closure_stage(s, a, q);
            EXPECT_TRUE(n.flags.formally_padic);
            EXPECT_TRUE(least_positive_is_one(n.group.group()));
            if (n.roots.size() > s.roots.size()) {
                EXPECT_EQ(subgroup_index(s.group.group(), n.group.group()), Int(q));
            }
            // idempotence
            Stage again = closure_stage(n, a, q);
            EXPECT_EQ(again.roots.size(), n.roots.size());
            // divisibility is monotone
            for (const auto& [x, k] : seen) EXPECT_TRUE(n.group.divides(x, k));
            GroupElem x = monomial_value(n, a);
            for (long j = 0; j < q; ++j)
                if (n.group.divides(x + GroupElem(Rat(j)), q)) seen.emplace_back(x + GroupElem(Rat(j)), q);
            s = n;
        }
    }
}
