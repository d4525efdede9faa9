#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <json.hpp>

#include "vlab/cli/cli.hpp"
#include "vlab/io/polytext.hpp"

using namespace vlab;

namespace {

struct Run {
    int code;
    std::string out, err;
};

Run run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json doc(const Run& r) { return nlohmann::json::parse(r.out); }

} // namespace

TEST(PolyText, Examples) {
    auto a = parse_qpoly("x^2 - 2*x - 6");
    EXPECT_EQ(a.coeffs(), (std::vector<Rat>{Rat(-6), Rat(-2), Rat(1)}));
    EXPECT_EQ(parse_qpoly("(x-1)^2 - 7"), a);
    try {
        parse_qpoly("x^^2");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.offset(), 2u);
    }
    EXPECT_EQ(print_qpoly(a), "x^2 - 2*x - 6");
    EXPECT_EQ(parse_qpoly(print_qpoly(parse_qpoly("3/4*x^5 - x/2 + 7"))), parse_qpoly("3/4*x^5 - x/2 + 7"));
}

TEST(Cli, DocumentedExamples) {
    auto e = run({"extensions", "--p", "3", "--poly", "x^2-2*x-6"});
    ASSERT_EQ(e.code, 0);
    auto j = doc(e);
    EXPECT_TRUE(j["certified"].get<bool>());
    ASSERT_EQ(j["extensions"].size(), 2u);
    for (const auto& d : j["extensions"]) {
        EXPECT_EQ(d["e"], 1);
        EXPECT_EQ(d["f"], 1);
    }
    auto d = run({"div", "--gens", "1,0;0,1", "--x", "0,1", "--k", "2"});
    EXPECT_EQ(d.code, 0);
    EXPECT_EQ(doc(d), nlohmann::json::parse(R"({"divides": false})"));
    auto s = run({"simulate", "padic-adversary", "--q", "2", "--m", "0", "--gamma", "0,1/2"});
    EXPECT_EQ(s.code, 0);
    EXPECT_TRUE(doc(s)["contradiction"].get<bool>());
}

TEST(Cli, ExitCodes) {
    auto bad = run({"factor", "--poly", "x^^2"});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(doc(bad)["error"]["code"], "PARSE_ERROR");
    EXPECT_EQ(doc(bad)["error"]["offset"], 2);
    EXPECT_EQ(run({"nonsense"}).code, 2);
    EXPECT_EQ(run({"factor"}).code, 2);
    EXPECT_EQ(run({"factor", "--poly", "x", "--bogus"}).code, 2);
    EXPECT_EQ(run({"--help"}).code, 0);
    auto trig = run({"simulate", "padic-adversary", "--q", "2", "--m", "0", "--gamma", "0,1"});
    EXPECT_EQ(trig.code, 1);
    EXPECT_EQ(doc(trig)["error"]["code"], "TRIGGER_UNMET");
}

TEST(Cli, StagesStream) {
    auto r = run({"padic-close", "--schedule", "t:2; t:3"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        auto j = nlohmann::json::parse(line);
        EXPECT_EQ(j["index"], count);
        EXPECT_TRUE(j["flags"]["formally_padic"].get<bool>());
        ++count;
    }
    EXPECT_EQ(count, 3);
}

TEST(Cli, SeedDoesNotChangeResults) {
    auto a = run({"factor", "--poly", "x^8 - 1"});
    setenv("VALUATION_LAB_SEED", "12345", 1);
    auto b = run({"factor", "--poly", "x^8 - 1"});
    unsetenv("VALUATION_LAB_SEED");
    auto c = run({"--seed", "99", "factor", "--poly", "x^8 - 1"});
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.out, c.out);
    EXPECT_EQ(doc(a)["factors"].size(), 4u);
}

TEST(Cli, Limits) {
    auto r = run({"--max-depth", "1", "factor", "--poly", "x", "--field", "s: x^2 - 2; t: x^2 - 3"});
    EXPECT_EQ(r.code, 1);
    EXPECT_EQ(doc(r)["error"]["code"], "TOWER_DEPTH");
    auto h = run({"--precision-cap", "4", "hensel-lift", "--poly", "x^2-2", "--a", "3", "--p", "7", "--N", "5"});
    EXPECT_EQ(doc(h)["error"]["code"], "PRECISION_OVERFLOW");
}
