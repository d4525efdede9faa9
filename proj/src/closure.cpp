#include "vlab/closure/closure.hpp"

#include <cctype>

namespace vlab {

namespace {

[[noreturn]] void bad_monomial(std::size_t at, const std::string& what) { throw ParseError(at, what); }

void recompute_flags(Stage& s) {
    PadicCheck c = formally_padic_check(s);
    s.flags = {c.all(), c.residue_is_Fp, c.least_positive_one};
}

} // namespace

MonomialElem MonomialElem::parse(const std::string& src) {
    MonomialElem m;
    std::size_t i = 0;
    auto skip = [&] {
        while (i < src.size() && std::isspace(static_cast<unsigned char>(src[i]))) ++i;
    };
    auto integer = [&](bool allow_sign) {
        skip();
        std::size_t start = i;
        if (allow_sign && i < src.size() && (src[i] == '-' || src[i] == '+')) ++i;
        std::size_t digits = i;
        while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) ++i;
        if (i == digits) bad_monomial(start, "expected an integer");
        return std::stol(src.substr(start, i - start));
    };
    skip();
    if (i == src.size()) bad_monomial(i, "empty monomial");
    while (true) {
        skip();
        const std::size_t at = i;
        long slot = -1;
        if (i < src.size() && src[i] == '1' && (i + 1 == src.size() || !std::isdigit(static_cast<unsigned char>(src[i + 1])))) {
            ++i;
        } else if (i < src.size() && src[i] == 'u') {
            ++i;
            m.unit = true;
        } else if (i < src.size() && src[i] == 'p') {
            ++i;
            slot = 0;
        } else if (i < src.size() && src[i] == 't') {
            ++i;
            slot = 1;
        } else if (i < src.size() && src[i] == 'b') {
            ++i;
            long k = integer(false);
            if (k < 1) bad_monomial(at, "root indices start at 1");
            slot = 1 + k;
        } else {
            bad_monomial(at, "expected p, t, b<k>, u or 1");
        }
        long e = 1;
        skip();
        if (i < src.size() && src[i] == '^') {
            if (slot < 0) bad_monomial(i, "exponent on a unit");
            ++i;
            e = integer(true);
        }
        if (slot >= 0) {
            if (m.exponents.size() <= static_cast<std::size_t>(slot)) m.exponents.resize(slot + 1, 0);
            m.exponents[slot] += e;
        }
        skip();
        if (i == src.size()) break;
        if (src[i] != '*') bad_monomial(i, "expected '*'");
        ++i;
    }
    while (!m.exponents.empty() && m.exponents.back() == 0) m.exponents.pop_back();
    return m;
}

std::string MonomialElem::str() const {
    std::string out;
    auto put = [&](const std::string& f) { out += (out.empty() ? "" : "*") + f; };
    if (unit) put("u");
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] == 0) continue;
        std::string name = i == 0 ? "p" : i == 1 ? "t" : "b" + std::to_string(i - 1);
        put(exponents[i] == 1 ? name : name + "^" + std::to_string(exponents[i]));
    }
    return out.empty() ? "1" : out;
}

Stage Stage::initial(std::uint64_t p) { return over(p, FGGroup({GroupElem(Rat(1)), GroupElem(Rat(0), Rat(1))})); }

Stage Stage::over(std::uint64_t p, const FGGroup& g) {
    if (!is_prime(p)) fail(ErrorCode::NOT_PRIME, std::to_string(p) + " is not prime");
    Stage s;
    s.p = p;
    s.group = DivGroup(g);
    if (!g.contains(GroupElem(Rat(1)))) fail(ErrorCode::MALFORMED_STAGE, "the group does not contain v(p) = 1");
    recompute_flags(s);
    return s;
}

GroupElem monomial_value(const Stage& s, const MonomialElem& a) {
    if (a.exponents.size() > 2 + s.roots.size())
        fail(ErrorCode::INVALID_ARGUMENT, "monomial " + a.str() + " refers to a root not yet adjoined");
    GroupElem v(Rat(0));
    for (std::size_t i = 0; i < a.exponents.size(); ++i) {
        if (a.exponents[i] == 0) continue;
        const GroupElem g = i == 0 ? GroupElem(Rat(1)) : i == 1 ? GroupElem(Rat(0), Rat(1)) : s.roots[i - 2].value;
        v = v + g * Rat(a.exponents[i]);
    }
    return v;
}

PadicCheck formally_padic_check(const Stage& s) {
    if (s.group.depth() != s.roots.size())
        fail(ErrorCode::MALFORMED_STAGE, "group levels do not match the root records");
    PadicCheck c;
    c.extends_padic = s.group.group().contains(GroupElem(Rat(1)));
    if (!c.extends_padic) fail(ErrorCode::MALFORMED_STAGE, "the group does not contain v(p) = 1");
    // walk the levels from the top: level k adjoins root k
    c.residue_is_Fp = true;
    const DivGroup* level = &s.group;
    for (std::size_t k = s.roots.size(); k-- > 0;) {
        const RootRecord& rec = s.roots[k];
        if (!is_prime(static_cast<std::uint64_t>(rec.q)) || rec.offset < 0 || rec.offset >= rec.q)
            fail(ErrorCode::MALFORMED_STAGE, "root record " + std::to_string(k + 1) + " is malformed");
        if (!(level->root() == rec.value)) fail(ErrorCode::MALFORMED_STAGE, "root value does not match its level");
        const DivGroup& below = *level->parent();
        // e = [new : old] = q forces f = 1
        if (subgroup_index(below.group(), level->group()) != Int(rec.q)) c.residue_is_Fp = false;
        level = &below;
    }
    c.least_positive_one = least_positive_is_one(s.group.group());
    return c;
}

Stage closure_stage(const Stage& s, const MonomialElem& a, long q) {
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) fail(ErrorCode::NOT_PRIME, std::to_string(q) + " is not prime");
    const GroupElem x = monomial_value(s, a);
    Stage next = s;
    ++next.index;
    for (long j = 0; j < q; ++j)
        if (s.group.divides(x + GroupElem(Rat(j)), q)) return next;
    next.group = extend_div(s.group, x, q);
    next.roots.push_back({a, q, 0, x * (Rat(1) / Rat(q))});
    recompute_flags(next);
    if (!next.flags.formally_padic)
        fail(ErrorCode::NOT_FORMALLY_PADIC, "stage " + std::to_string(next.index) + " is not formally p-adic");
    return next;
}

ClosureRun run_closure(const Stage& s0, const std::vector<std::pair<MonomialElem, long>>& schedule) {
    ClosureRun run;
    run.stages.push_back(s0);
    for (const auto& [a, q] : schedule) {
        Stage next = closure_stage(run.stages.back(), a, q);
        run.forced.push_back(next.roots.size() > run.stages.back().roots.size());
        run.stages.push_back(std::move(next));
    }
    return run;
}

} // namespace vlab
