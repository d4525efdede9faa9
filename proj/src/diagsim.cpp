#include "vlab/sim/diagsim.hpp"

#include "vlab/io/polytext.hpp"

namespace vlab {

namespace {

void check_odd_prime(std::uint64_t r) {
    if (!is_prime(r) || r == 2) fail(ErrorCode::NOT_PRIME, std::to_string(r) + " is not an odd prime");
}

// x^d - c over k
KPoly binomial(const TowerField& k, std::uint64_t d, const Int& c) {
    std::vector<AlgElem> co(d + 1, k.zero());
    co[0] = k.from_rat(-Rat(c));
    co[d] = k.one();
    return KPoly(k, std::move(co));
}

std::string ef_list(const std::vector<std::pair<int, int>>& ef) {
    std::string s;
    for (const auto& [e, f] : ef) s += (s.empty() ? "" : " ") + std::string("(e=") + std::to_string(e) + ",f=" + std::to_string(f) + ")";
    return s;
}

void add(std::vector<Claim>& claims, bool& verified, std::string claim, bool verdict, std::string witness) {
    verified = verified && verdict;
    claims.push_back({std::move(claim), verdict, std::move(witness)});
}

std::string tower_text(const TowerPtr& K) {
    std::string s = "Q";
    for (const auto& l : describe_tower(K)) s += "(" + l.name + ": " + l.minpoly + ")";
    return s;
}

std::vector<std::pair<long, std::uint64_t>> assign(std::uint64_t r, const OracleApprox& oracle) {
    for (long a : oracle.members)
        if (a < 1) fail(ErrorCode::INVALID_ARGUMENT, "member indices start at 1");
    auto qs = primes_one_mod(r, oracle.members.size());
    std::vector<std::pair<long, std::uint64_t>> out;
    std::size_t i = 0;
    for (long a : oracle.members) out.emplace_back(a, qs[i++]);
    return out;
}

} // namespace

std::uint64_t nth_prime(long a, std::uint64_t r) {
    if (a < 1) fail(ErrorCode::INVALID_ARGUMENT, "prime indices start at 1");
    std::uint64_t p = 1;
    for (long i = 0; i < a; ++i) {
        p = next_prime(p);
        if (p == r) p = next_prime(p);
    }
    return p;
}

std::vector<std::uint64_t> primes_one_mod(std::uint64_t r, std::size_t k) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t q = 2; out.size() < k; q = next_prime(q))
        if (q % r == 1) out.push_back(q);
    return out;
}

NoCompExtReport sim_no_comp_ext(std::uint64_t r, const OracleApprox& oracle, const SimOptions& opt) {
    check_odd_prime(r);
    NoCompExtReport rep;
    rep.r = r;
    rep.assignment = assign(r, oracle);
    long base_degree = 1;
    for (const auto& [a, q] : rep.assignment) base_degree *= static_cast<long>(nth_prime(a, r));
    for (long a = 1; a <= oracle.budget; ++a)
        if (base_degree * static_cast<long>(nth_prime(a, r)) > opt.max_degree)
            fail(ErrorCode::DEGREE_BOUND, "probe " + std::to_string(a) + " needs degree " +
                                              std::to_string(base_degree * nth_prime(a, r)) + " > " +
                                              std::to_string(opt.max_degree));
    Limits limits;
    limits.max_degree = opt.max_degree;
    limits.max_depth = std::max<int>(limits.max_depth, static_cast<int>(rep.assignment.size()) + 1);
    const Int R(std::to_string(r));
    TowerPtr K = FieldTower::rationals();
    for (const auto& [a, q] : rep.assignment)
        K = K->extend("c" + std::to_string(a), binomial(K->top(), nth_prime(a, r), R * Int(std::to_string(q))), limits);
    rep.field = K;
    if (oracle.budget == 0) return rep;
    Valuation v = Valuation::on(K, r, 0);
    add(rep.claims, rep.verified, "v_" + std::to_string(r) + " has a unique extension to K", v.places()->count() == 1,
        tower_text(K));
    ExtensionOptions eo;
    eo.places.limits = limits;
    for (long a = 1; a <= oracle.budget; ++a) {
        ProbeResult pr;
        pr.index = a;
        pr.degree = nth_prime(a, r);
        pr.member = oracle.members.count(a) > 0;
        auto ext = extensions_of(v, binomial(K->top(), pr.degree, R), eo);
        pr.count = ext.extensions.size();
        pr.certificate = ext.certificate;
        for (const auto& d : ext.extensions) pr.ef.emplace_back(d.e, d.f);
        const std::string probe = "x^" + std::to_string(pr.degree) + " - " + std::to_string(r);
        add(rep.claims, rep.verified, "certificate for " + probe + " equals its degree",
            ext.certified && ext.certificate == static_cast<int>(pr.degree), std::to_string(ext.certificate));
        add(rep.claims, rep.verified,
            "index " + std::to_string(a) + (pr.member ? " is a member: " : " is not a member: ") + probe +
                (pr.member ? " has several extensions" : " has one extension"),
            (pr.count > 1) == pr.member, std::to_string(pr.count) + (pr.count == 1 ? " extension " : " extensions ") + ef_list(pr.ef));
        rep.probes.push_back(std::move(pr));
    }
    return rep;
}

SimReport sim_henselization(std::uint64_t r, const OracleApprox& oracle, const SimOptions& opt) {
    check_odd_prime(r);
    SimReport rep;
    auto assignment = assign(r, oracle);
    long degree = 1;
    std::vector<GroupElem> gens{GroupElem(Rat(1))};
    for (const auto& [a, q] : assignment) {
        const std::uint64_t pa = nth_prime(a, r);
        degree *= static_cast<long>(pa);
        gens.emplace_back(Rat(1) / Rat(static_cast<long>(pa)));
    }
    if (degree > opt.max_degree)
        fail(ErrorCode::DEGREE_BOUND, "field degree " + std::to_string(degree) + " > " + std::to_string(opt.max_degree));
    const FGGroup value_group(gens);
    for (const auto& [a, q] : assignment) {
        const std::uint64_t pa = nth_prime(a, r);
        std::vector<Rat> c(pa + 1, Rat(0));
        c[0] = Rat(-static_cast<long>(q));
        c[pa] = Rat(1);
        const QPoly f(RationalField{}, std::move(c));
        std::string claim = std::to_string(q) + "^(1/" + std::to_string(pa) + ") lies in the Henselization of Q at " +
                            std::to_string(r);
        try {
            auto h = hensel_simple_root(f, Int(1), r, opt.precision);
            add(rep.claims, rep.verified, claim, true,
                "root " + h.root.representative().get_str() + " mod " + std::to_string(r) + "^" +
                    std::to_string(opt.precision));
        } catch (const Error& e) {
            add(rep.claims, rep.verified, claim, false, e.what());
        }
    }
    for (long a = 1; a <= oracle.budget; ++a) {
        const std::uint64_t pa = nth_prime(a, r);
        const std::string claim =
            std::to_string(r) + "^(1/" + std::to_string(pa) + ") is not in the Henselization of K";
        if (oracle.members.count(a)) {
            rep.claims.push_back({claim, true, "skipped: in Henselization by construction"});
            continue;
        }
        const GroupElem x(Rat(1) / Rat(static_cast<long>(pa)));
        const bool outside = !group_contains(value_group, x);
        add(rep.claims, rep.verified, claim, outside, "1/" + std::to_string(pa) + (outside ? " is not" : " is") +
                                                          " in the value group of K");
    }
    return rep;
}

AdversaryReport sim_padic_adversary(std::uint64_t p, long q, long m, const GroupElem& gamma) {
    if (!is_prime(p)) fail(ErrorCode::NOT_PRIME, std::to_string(p) + " is not prime");
    if (q < 2 || !is_prime(static_cast<std::uint64_t>(q))) fail(ErrorCode::NOT_PRIME, std::to_string(q) + " is not prime");
    if (m < 0 || m >= q) fail(ErrorCode::INVALID_ARGUMENT, "offset must lie in [0, q)");
    if (gamma.is_infinite() || !(gamma * Rat(q) == GroupElem(Rat(m), Rat(1))))
        fail(ErrorCode::TRIGGER_UNMET, "q * gamma = " + (gamma * Rat(q)).str() + " differs from v(t) + m");
    AdversaryReport rep;
    rep.root_value = GroupElem(Rat(m + 1) / Rat(q), Rat(1) / Rat(q));
    rep.witness = (rep.root_value - gamma) * Rat(q);
    add(rep.claims, rep.verified, "q (v(b) - gamma) = 1", rep.witness == GroupElem(Rat(1)), rep.witness.str());
    const FGGroup target({GroupElem(Rat(1)), GroupElem(Rat(0), Rat(1)), gamma, rep.root_value});
    rep.target_formally_padic = least_positive_is_one(target);
    add(rep.claims, rep.verified, "the target value group has an element strictly between 0 and 1",
        !rep.target_formally_padic, (rep.root_value - gamma).str());
    return rep;
}

} // namespace vlab
