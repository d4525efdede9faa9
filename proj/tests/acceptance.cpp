// Acceptance suite: one PASS/FAIL line per criterion with its time budget.

#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

#include "vlab/closure/closure.hpp"
#include "vlab/ext/extensions.hpp"
#include "vlab/hensel/hensel.hpp"
#include "vlab/io/polytext.hpp"
#include "vlab/sim/diagsim.hpp"

using namespace vlab;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
    void check(bool cond, const std::string& what) {
        if (!cond && ok) detail = what;
        ok = ok && cond;
    }
};

int failures = 0;

void criterion(int n, const std::string& name, double limit_s, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o.ok = false;
        o.detail = std::string("exception: ") + e.what();
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = limit_s <= 0 || s <= limit_s;
    const bool pass = o.ok && in_time;
    if (!pass) ++failures;
    std::ostringstream line;
    line << "criterion " << n << " [" << name << "]: " << (pass ? "PASS" : "FAIL");
    line.setf(std::ios::fixed);
    line.precision(2);
    line << " (" << s << " s";
    if (limit_s > 0) line << " / limit " << limit_s << " s";
    line << ")";
    if (!o.detail.empty()) line << " " << o.detail;
    if (!in_time) line << " over time budget";
    std::cout << line.str() << std::endl;
}

// exponent of p in a nonzero rational, by repeated division
long ord_p(const Rat& x, long p) {
    auto ord = [&](Int n) {
        long k = 0;
        n = abs(n);
        while (n % p == 0) {
            n /= p;
            ++k;
        }
        return k;
    };
    return ord(x.num()) - ord(x.den());
}

QPoly qpoly(const std::vector<long>& c) {
    std::vector<Rat> v;
    for (long x : c) v.emplace_back(x);
    return QPoly(RationalField{}, std::move(v));
}

// integer span membership in Q^2, by 2x2 Euclidean reduction of scaled rows
bool span_contains(const std::vector<std::array<Rat, 2>>& gens, const std::array<Rat, 2>& x) {
    Int d = 1;
    auto lcm_in = [&](const Rat& r) { mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), r.den().get_mpz_t()); };
    for (const auto& g : gens) lcm_in(g[0]), lcm_in(g[1]);
    lcm_in(x[0]);
    lcm_in(x[1]);
    std::vector<std::array<Int, 2>> rows;
    for (const auto& g : gens) rows.push_back({(g[0] * Rat(d)).num(), (g[1] * Rat(d)).num()});
    std::array<Int, 2> t{(x[0] * Rat(d)).num(), (x[1] * Rat(d)).num()};
    // echelonize: column 0 first
    for (int col = 0; col < 2; ++col) {
        std::array<Int, 2> piv{0, 0};
        for (auto& r : rows) {
            // gcd-combine r into piv on this column
            while (r[col] != 0) {
                Int qq = piv[col] / r[col];
                piv[0] -= qq * r[0];
                piv[1] -= qq * r[1];
                std::swap(r, piv);
            }
        }
        if (piv[col] != 0) {
            if (t[col] % piv[col] != 0) return false;
            Int qq = t[col] / piv[col];
            t[0] -= qq * piv[0];
            t[1] -= qq * piv[1];
        } else if (t[col] != 0) {
            return false;
        }
    }
    return t[0] == 0 && t[1] == 0;
}

Outcome fundamental_equality() {
    Outcome o;
    std::mt19937_64 rng(1001);
    const std::uint64_t primes[] = {2, 3, 5, 7};
    int done = 0;
    while (done < 100) {
        const int deg = 1 + static_cast<int>(rng() % 4);
        std::vector<long> c(deg + 1);
        for (auto& x : c) x = static_cast<long>(rng() % 41) - 20;
        c.back() = 1;
        QPoly f = qpoly(c);
        if (!is_irreducible_over_q(f)) continue;
        const std::uint64_t p = primes[rng() % 4];
        Valuation v = Valuation::padic(p);
        auto rep = extensions_of(v, to_tower_poly(f, v.field()));
        int sum = 0;
        for (const auto& d : rep.extensions) sum += d.e * d.f;
        o.check(rep.certified && sum == deg, print_qpoly(f) + " at " + std::to_string(p) + ": sum " + std::to_string(sum));
        ++done;
    }
    return o;
}

Outcome extension_count_flip() {
    Outcome o;
    auto in = sim_no_comp_ext(3, {{1}, 1});
    auto out = sim_no_comp_ext(3, {{}, 1});
    o.check(in.probes.size() == 1 && in.probes[0].degree == 2 && in.assignment.at(0).second == 7, "setup");
    o.check(in.probes[0].count == 2, "member: " + std::to_string(in.probes[0].count) + " extensions");
    o.check(out.probes[0].count == 1, "non-member: " + std::to_string(out.probes[0].count) + " extensions");
    return o;
}

Outcome henselization_desk() {
    Outcome o;
    auto f = parse_qpoly("x^2 - 2*x - 6");
    o.check(henselization_membership(f, 3, 0) && henselization_membership(f, 3, 1), "x^2 - 2x - 6 at 3");
    o.check(!henselization_membership(parse_qpoly("x^2 - 2"), 2, 0), "x^2 - 2 at 2");
    o.check(!henselization_membership(parse_qpoly("x^2 + 1"), 3, 0), "x^2 + 1 at 3");
    return o;
}

Outcome hensel_lifting() {
    Outcome o;
    auto w = hensel_lift({parse_qpoly("x^2 - 2"), Rat(3), 7, 2});
    o.check(w.root.representative() == 10, "worked value " + w.root.representative().get_str());
    std::mt19937_64 rng(2002);
    const long primes[] = {2, 3, 5, 7, 11};
    int done = 0;
    while (done < 50) {
        const long p = primes[rng() % 5];
        const int deg = 2 + static_cast<int>(rng() % 4);
        std::vector<long> c(deg + 1);
        for (auto& x : c) x = static_cast<long>(rng() % 21) - 10;
        c.back() = 1;
        const long a = static_cast<long>(rng() % 30);
        // make f(a) = p^k exactly
        QPoly f = qpoly(c);
        const long k = 1 + static_cast<long>(rng() % 8);
        Rat shift = Rat(pow_int(Int(p), static_cast<unsigned long>(k))) - eval(f, Rat(a));
        c[0] += shift.num().get_si();
        f = qpoly(c);
        const Rat fpa = eval(derivative(f), Rat(a));
        if (fpa.is_zero()) continue;
        const long delta = ord_p(fpa, p);
        if (!(k > 2 * delta)) continue;
        const long N = delta + 1 + static_cast<long>(rng() % 40);
        auto r = hensel_lift({f, Rat(a), static_cast<std::uint64_t>(p), N});
        const Int b = r.root.representative();
        const Int pN = pow_int(Int(p), static_cast<unsigned long>(N));
        // direct Horner evaluation over the integers
        Int fb = 0;
        for (int i = deg; i >= 0; --i) fb = fb * b + c[i];
        o.check(fb % pN == 0, "f(b) mod p^N for " + print_qpoly(f));
        o.check(ord_p(Rat(Int(b - a)), p) > delta || b == a, "v(b - a) > v(f'(a)) for " + print_qpoly(f));
        for (std::size_t i = 0; i + 1 < r.trace.size(); ++i)
            o.check(r.trace[i + 1].defect >= r.trace[i].defect * Rat(2) - r.derivative_value * Rat(2),
                    "quadratic defect growth for " + print_qpoly(f));
        ++done;
    }
    return o;
}

Outcome div_equivalence() {
    Outcome o;
    std::mt19937_64 rng(3003);
    int divisible = 0;
    auto small = [&](long lo, long hi) { return lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)); };
    for (int t = 0; t < 200; ++t) {
        std::vector<std::array<Rat, 2>> gens;
        std::vector<GroupElem> ge;
        const int ng = static_cast<int>(small(1, 3));
        for (int i = 0; i < ng; ++i) {
            Rat a = Rat(small(-8, 8)) / Rat(small(1, 5)), b = Rat(small(-3, 3)) / Rat(small(1, 4));
            gens.push_back({a, b});
            ge.emplace_back(a, b);
        }
        DivGroup H{FGGroup(ge)};
        const int levels = static_cast<int>(small(1, 3));
        for (int l = 0; l < levels; ++l) {
            GroupElem b(Rat(0));
            for (const auto& g : H.group().gens()) b = b + g * Rat(small(-3, 3));
            const long n = small(1, 12);
            H = extend_div(H, b, n);
            gens.push_back({b.a() / Rat(n), b.b() / Rat(n)});
        }
        GroupElem x(Rat(0));
        for (const auto& g : H.group().gens()) x = x + g * Rat(small(-5, 5));
        const long k = small(1, 36);
        const bool lemma = H.divides(x, k);
        const bool oracle = span_contains(gens, {x.a() / Rat(k), x.b() / Rat(k)});
        o.check(lemma == oracle, "x = " + x.str() + ", k = " + std::to_string(k));
        divisible += lemma;
    }
    if (o.ok) o.detail = std::to_string(divisible) + " of 200 divisible";
    return o;
}

Outcome closure_suite() {
    Outcome o;
    auto t = MonomialElem::parse("t");
    auto run = run_closure(Stage::initial(2), {{t, 2}, {t, 3}});
    o.check(run.stages.size() == 3, "stage count");
    const auto& g = run.stages.back().group.group();
    std::vector<std::array<Rat, 2>> gens;
    for (const auto& x : g.gens()) gens.push_back({x.a(), x.b()});
    std::vector<std::array<Rat, 2>> target{{Rat(1), Rat(0)}, {Rat(0), Rat(1) / Rat(6)}};
    bool equal = true;
    for (const auto& x : target) equal = equal && span_contains(gens, x);
    for (const auto& x : gens) equal = equal && span_contains(target, x);
    o.check(equal, "final group differs from Z<1, r/6>");
    const long qs[] = {2, 3};
    for (std::size_t i = 1; i < run.stages.size(); ++i)
        o.check(subgroup_index(run.stages[i - 1].group.group(), run.stages[i].group.group()) == qs[i - 1],
                "index at stage " + std::to_string(i));
    for (const auto& s : run.stages) {
        o.check(formally_padic_check(s).all(), "formally p-adic at stage " + std::to_string(s.index));
        o.check(least_positive_is_one(s.group.group()), "least positive element at stage " + std::to_string(s.index));
    }
    return o;
}

Outcome adversary() {
    Outcome o;
    for (long q : {2, 3, 5})
        for (long m = 0; m < q; ++m) {
            auto r = sim_padic_adversary(2, q, m, GroupElem(Rat(m) / Rat(q), Rat(1) / Rat(q)));
            o.check(r.witness == GroupElem(Rat(1)) && !r.target_formally_padic,
                    "q = " + std::to_string(q) + ", m = " + std::to_string(m));
        }
    return o;
}

Outcome hensel_set_oracle() {
    Outcome o;
    std::mt19937_64 rng(4004);
    int members = 0;
    const long primes[] = {2, 3, 5, 7};
    for (int t = 0; t < 100; ++t) {
        const long p = primes[rng() % 4];
        const int deg = 1 + static_cast<int>(rng() % 4);
        std::vector<long> c(deg + 1);
        for (int i = 0; i < deg; ++i) {
            long x = static_cast<long>(rng() % 15) - 7;
            // bias toward the shape: lower coefficients divisible by p, a_{n-1} a unit
            if (rng() % 4 != 0) x = (i == deg - 1) ? (x % p == 0 ? x + 1 : x) : x * p;
            c[i] = x;
        }
        c[deg] = 1;
        QPoly f = qpoly(c);
        bool shape = c[deg - 1] % p != 0;
        for (int i = 0; i + 2 <= deg; ++i) shape = shape && c[i] % p == 0;
        Valuation v = Valuation::padic(static_cast<std::uint64_t>(p));
        KPoly g = to_tower_poly(f, v.field());
        auto fac = factor_over_field(g);
        const bool irreducible = fac.factors.size() == 1 && fac.factors[0].second == 1;
        const bool got = hensel_set_membership(v, g).member;
        o.check(got == (shape && irreducible), print_qpoly(f) + " at " + std::to_string(p));
        members += got;
    }
    if (o.ok) o.detail = std::to_string(members) + " of 100 in the set";
    return o;
}

Outcome weak_approx_suite() {
    Outcome o;
    std::mt19937_64 rng(5005);
    const long primes[] = {2, 3, 5, 7, 11};
    for (int t = 0; t < 25; ++t) {
        const int k = 2 + static_cast<int>(rng() % 2);
        std::vector<long> ps;
        while (static_cast<int>(ps.size()) < k) {
            long p = primes[rng() % 5];
            if (std::find(ps.begin(), ps.end(), p) == ps.end()) ps.push_back(p);
        }
        std::vector<Valuation> vs;
        std::vector<AlgElem> targets;
        std::vector<Rat> tr;
        TowerField q = FieldTower::rationals()->top();
        for (long p : ps) {
            long den = 1 + static_cast<long>(rng() % 6);
            while (den % p == 0) ++den;
            Rat x = Rat(static_cast<long>(rng() % 21) - 10) / Rat(den);
            tr.push_back(x);
            targets.push_back(q.from_rat(x));
            vs.push_back(Valuation::padic(static_cast<std::uint64_t>(p)));
        }
        AlgElem a = weak_approximation(vs, targets);
        const Rat ar = a.c.at(0);
        for (std::size_t i = 0; i < ps.size(); ++i) {
            o.check(ar.is_zero() || ord_p(ar, ps[i]) >= 0, "w(a) >= 0 at " + std::to_string(ps[i]));
            const Rat d = ar - tr[i];
            o.check(d.is_zero() || ord_p(d, ps[i]) > 0, "w(a - a_i) > 0 at " + std::to_string(ps[i]));
        }
    }
    return o;
}

std::string run_capture(const std::string& cmd, int& status) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    std::array<char, 4096> buf;
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    status = pclose(pipe);
    return out;
}

Outcome determinism() {
    Outcome o;
    std::ifstream in(VLAB_CORPUS);
    o.check(static_cast<bool>(in), "cannot read the corpus");
    std::string line;
    int cases = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto tab = line.rfind('\t');
        const std::string cmd = std::string("'") + VLAB_CLI + "' " + line.substr(tab + 1) + " 2>/dev/null";
        int s1 = 0, s2 = 0;
        const std::string a = run_capture(cmd, s1);
        const std::string b = run_capture(cmd, s2);
        o.check(a == b && s1 == s2, "differs: " + line.substr(tab + 1));
        ++cases;
    }
    o.check(cases > 0, "empty corpus");
    if (o.ok) o.detail = std::to_string(cases) + " invocations";
    return o;
}

} // namespace

int main() {
    criterion(1, "fundamental equality certification", 60, fundamental_equality);
    criterion(2, "extension-count flip", 5, extension_count_flip);
    criterion(3, "Henselization membership", 5, henselization_desk);
    criterion(4, "Hensel lifting", 10, hensel_lifting);
    criterion(5, "DIV equivalence", 10, div_equivalence);
    criterion(6, "closure stages", 5, closure_suite);
    criterion(7, "adversary contradiction", 2, adversary);
    criterion(8, "Hensel irreducibility set vs oracle", 30, hensel_set_oracle);
    criterion(9, "weak approximation", 5, weak_approx_suite);
    criterion(10, "CLI determinism", 0, determinism);
    std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
    return failures == 0 ? 0 : 1;
}
