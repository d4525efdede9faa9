#include "vlab/cli/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <functional>
#include <optional>

#include "vlab/io/json.hpp"
#include "vlab/io/polytext.hpp"

namespace vlab {

namespace {

struct Config {
    int max_depth = 6;
    int max_degree = 64;
    long precision_cap = 512;
    int refinement_limit = 8;
    std::optional<std::uint64_t> seed;

    Limits limits() const { return Limits{max_depth, max_degree}; }
    PlaceOptions places() const { return PlaceOptions{refinement_limit, limits()}; }
    std::uint64_t factor_seed() const {
        if (seed) return *seed;
        if (const char* env = std::getenv("VALUATION_LAB_SEED")) return std::stoull(env, nullptr, 0);
        return kDefaultSeed;
    }
};

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        std::string part = s.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
        const auto b = part.find_first_not_of(" \t");
        part = b == std::string::npos ? "" : part.substr(b, part.find_last_not_of(" \t") - b + 1);
        if (!part.empty()) out.push_back(part);
        if (pos == std::string::npos) return out;
        start = pos + 1;
    }
}

TowerPtr field_from(const std::string& text, const Config& cfg) {
    std::vector<LevelSpec> levels;
    for (const auto& part : split(text, ';')) {
        const auto colon = part.find(':');
        if (colon == std::string::npos) throw ParseError(0, "field level '" + part + "' needs the form name: poly");
        auto name = split(part.substr(0, colon), ' ');
        if (name.size() != 1) throw ParseError(0, "bad generator name in '" + part + "'");
        levels.push_back({name[0], part.substr(colon + 1)});
    }
    return build_tower(levels, cfg.limits());
}

long to_long(const std::string& s) {
    std::size_t used = 0;
    long v = std::stol(s, &used);
    if (used != s.size()) throw ParseError(used, "expected an integer, got '" + s + "'");
    return v;
}

Valuation valuation_from(const TowerPtr& K, std::uint64_t p, std::size_t place, const Config& cfg) {
    auto pl = Places::compute(K, p, cfg.places());
    if (place >= pl->count())
        fail(ErrorCode::INDEX_OUT_OF_RANGE, "place " + std::to_string(place) + " out of range (" +
                                                std::to_string(pl->count()) + " primes above " + std::to_string(p) + ")");
    return Valuation(pl, place);
}

void emit(std::ostream& out, const Json& j) { out << j.dump() << "\n"; }

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with valued fields", "vlab"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    app.add_option("--max-depth", cfg.max_depth, "tower depth bound")->capture_default_str();
    app.add_option("--max-degree", cfg.max_degree, "absolute degree bound")->capture_default_str();
    app.add_option("--precision-cap", cfg.precision_cap, "largest p-adic precision N")->capture_default_str();
    app.add_option("--refinement-limit", cfg.refinement_limit, "order-enlargement rounds per degree")
        ->capture_default_str();
    app.add_option("--seed", cfg.seed, "factorization seed (else VALUATION_LAB_SEED)");

    std::function<void()> action;
    auto on = [&](CLI::App* sub, std::function<void()> f) { sub->callback([&action, f] { action = f; }); };

    // shared argument slots
    std::string poly, field, element, gens, x, b, schedule, places_s, targets, poly2, members, gamma;
    std::uint64_t p = 2;
    std::size_t place = 0, over = 0, first = 0, second = 0;
    long N = 8, k = 1, n = 1, budget = 1, q = 2, m = 0, max_candidates = 2000000;
    std::string a_seed, residue;
    std::uint64_t r = 3;

    auto* factor = app.add_subcommand("factor", "factor a polynomial over a tower");
    factor->add_option("--poly", poly)->required();
    factor->add_option("--field", field, "levels 'name: minpoly; ...'");
    on(factor, [&] {
        TowerPtr K = field_from(field, cfg);
        auto f = parse_poly(poly, K->top());
        Json j{{"field", tower_json(K)}, {"poly", print_poly(f)}};
        j.update(factorization_json(factor_over_field(f, cfg.limits(), cfg.factor_seed())));
        emit(out, j);
    });

    auto* minpoly = app.add_subcommand("minpoly", "minimal polynomial of an element");
    minpoly->add_option("--element", element)->required();
    minpoly->add_option("--field", field)->required();
    minpoly->add_option("--over", over, "level of the base field")->capture_default_str();
    on(minpoly, [&] {
        TowerPtr K = field_from(field, cfg);
        AlgElem a = parse_element(element, K->top());
        auto mp = minimal_polynomial(K->top(), a, over);
        emit(out, Json{{"field", tower_json(K)},
                       {"element", print_element(a, K->top())},
                       {"over", over},
                       {"minpoly", print_poly(mp)}});
    });

    auto* newton = app.add_subcommand("newton", "Newton polygon under a p-adic valuation");
    newton->add_option("--poly", poly)->required();
    newton->add_option("--p", p)->required();
    newton->add_option("--field", field);
    newton->add_option("--place", place)->capture_default_str();
    on(newton, [&] {
        TowerPtr K = field_from(field, cfg);
        Valuation v = valuation_from(K, p, place, cfg);
        auto f = parse_poly(poly, K->top());
        Json j{{"p", p}, {"field", tower_json(K)}, {"place", place}, {"poly", print_poly(f)}};
        j.update(newton_json(newton_polygon(f, v)));
        emit(out, j);
    });

    auto* extensions = app.add_subcommand("extensions", "all extensions of a valuation to K(a)");
    extensions->add_option("--poly", poly, "minimal polynomial of a")->required();
    extensions->add_option("--p", p)->required();
    extensions->add_option("--field", field);
    extensions->add_option("--place", place)->capture_default_str();
    on(extensions, [&] {
        TowerPtr K = field_from(field, cfg);
        Valuation v = valuation_from(K, p, place, cfg);
        ExtensionOptions eo;
        eo.places = cfg.places();
        auto rep = extensions_of(v, parse_poly(poly, K->top()), eo);
        Json j{{"poly", print_poly(rep.extensions.empty() ? parse_poly(poly, K->top()) : rep.extensions[0].minpoly)}};
        j.update(extension_report_json(rep, v));
        emit(out, j);
    });

    auto* hlift = app.add_subcommand("hensel-lift", "lift an approximate root to a root mod p^N");
    hlift->add_option("--poly", poly)->required();
    hlift->add_option("--p", p)->required();
    hlift->add_option("--N", N)->capture_default_str();
    auto* seed_opt = hlift->add_option("--a", a_seed, "seed with v(f(a)) > 2 v(f'(a))");
    auto* res_opt = hlift->add_option("--residue", residue, "simple root mod p");
    seed_opt->excludes(res_opt);
    on(hlift, [&] {
        auto f = parse_qpoly(poly);
        HenselOptions ho{cfg.precision_cap};
        HenselResult res;
        if (!residue.empty())
            res = hensel_simple_root(f, Int(std::to_string(to_long(residue))), p, N, ho);
        else if (!a_seed.empty())
            res = hensel_lift(HenselProblem{f, Rat::parse(a_seed), p, N}, ho);
        else
            throw CLI::RequiredError("--a or --residue");
        Json j{{"poly", print_qpoly(f)}, {"p", p}, {"N", N}};
        j.update(hensel_json(res));
        emit(out, j);
    });

    auto* hset = app.add_subcommand("hensel-set", "membership in the Hensel irreducibility set");
    hset->add_option("--poly", poly)->required();
    hset->add_option("--p", p)->required();
    hset->add_option("--field", field);
    hset->add_option("--place", place)->capture_default_str();
    on(hset, [&] {
        TowerPtr K = field_from(field, cfg);
        Valuation v = valuation_from(K, p, place, cfg);
        auto f = parse_poly(poly, K->top());
        Json j{{"poly", print_poly(f)}, {"p", p}, {"field", tower_json(K)}, {"place", place}};
        j.update(hensel_set_json(hensel_set_membership(v, f, cfg.limits())));
        emit(out, j);
    });

    auto* div = app.add_subcommand("div", "does k divide x in the group");
    div->add_option("--gens", gens, "generators 'a,b; a,b'")->required();
    div->add_option("--x", x)->required();
    div->add_option("--k", k)->required();
    on(div, [&] { emit(out, Json{{"divides", div_query(FGGroup(parse_group_elems(gens)), parse_group_elem(x), k)}}); });

    auto* gext = app.add_subcommand("group-extend", "adjoin a with n a = b");
    gext->add_option("--gens", gens)->required();
    gext->add_option("--b", b)->required();
    gext->add_option("--n", n)->required();
    auto* qx = gext->add_option("--x", x, "query element");
    auto* qk = gext->add_option("--k", k, "query divisor");
    qx->needs(qk);
    qk->needs(qx);
    on(gext, [&] {
        DivGroup G(FGGroup(parse_group_elems(gens)));
        DivGroup H = extend_div(G, parse_group_elem(b), n);
        Json j{{"group", group_json(H.group())},
               {"root", value_json(H.root())},
               {"reduced_b", value_json(H.reduced_b())},
               {"reduced_n", H.reduced_n()},
               {"index", subgroup_index(G.group(), H.group()).get_str()}};
        if (!x.empty()) {
            GroupElem xe = parse_group_elem(x);
            j["query"] = Json{{"x", value_json(xe)}, {"k", k}, {"divides", H.divides(xe, k)},
                              {"oracle", H.divides_oracle(xe, k)}};
        }
        emit(out, j);
    });

    std::string base_gens = "1; 0,1";
    auto* pcheck = app.add_subcommand("padic-check", "formally p-adic conditions for a value group");
    pcheck->add_option("--gens", base_gens)->capture_default_str();
    pcheck->add_option("--p", p)->capture_default_str();
    on(pcheck, [&] {
        Stage s = Stage::over(p, FGGroup(parse_group_elems(base_gens)));
        Json j{{"group", group_json(s.group.group())}};
        j.update(padic_check_json(formally_padic_check(s)));
        emit(out, j);
    });

    auto* pclose = app.add_subcommand("padic-close", "run closure stages; one JSON document per stage");
    pclose->add_option("--p", p)->capture_default_str();
    pclose->add_option("--gens", base_gens)->capture_default_str();
    pclose->add_option("--schedule", schedule, "entries 'monomial:q; ...'");
    on(pclose, [&] {
        std::vector<std::pair<MonomialElem, long>> sched;
        for (const auto& e : split(schedule, ';')) {
            const auto colon = e.rfind(':');
            if (colon == std::string::npos) throw ParseError(0, "schedule entry '" + e + "' needs the form monomial:q");
            sched.emplace_back(MonomialElem::parse(e.substr(0, colon)), to_long(e.substr(colon + 1)));
        }
        Stage s = Stage::over(p, FGGroup(parse_group_elems(base_gens)));
        Json j0 = stage_json(s);
        j0["forced"] = false;
        emit(out, j0);
        for (const auto& [a, qq] : sched) {
            Stage nxt = closure_stage(s, a, qq);
            Json j = stage_json(nxt);
            j["forced"] = nxt.roots.size() > s.roots.size();
            emit(out, j);
            s = std::move(nxt);
        }
    });

    auto* wapprox = app.add_subcommand("weak-approx", "simultaneous approximation under several valuations");
    wapprox->add_option("--places", places_s, "valuations 'p' or 'p:i', comma separated")->required();
    wapprox->add_option("--targets", targets, "elements separated by ';'")->required();
    wapprox->add_option("--field", field);
    wapprox->add_option("--max-candidates", max_candidates)->capture_default_str();
    on(wapprox, [&] {
        TowerPtr K = field_from(field, cfg);
        const TowerField top = K->top();
        std::vector<Valuation> vs;
        for (const auto& item : split(places_s, ',')) {
            const auto colon = item.find(':');
            const long pp = to_long(item.substr(0, colon));
            const long idx = colon == std::string::npos ? 0 : to_long(item.substr(colon + 1));
            if (pp < 2 || idx < 0) fail(ErrorCode::INVALID_ARGUMENT, "bad place '" + item + "'");
            vs.push_back(valuation_from(K, static_cast<std::uint64_t>(pp), static_cast<std::size_t>(idx), cfg));
        }
        std::vector<AlgElem> ts;
        for (const auto& t : split(targets, ';')) ts.push_back(parse_element(t, top));
        if (ts.size() != vs.size()) fail(ErrorCode::INVALID_ARGUMENT, "one target per valuation is required");
        AlgElem a = weak_approximation(vs, ts, WeakApproxOptions{max_candidates});
        Json checks = Json::array();
        for (std::size_t i = 0; i < vs.size(); ++i)
            checks.push_back(Json{{"p", vs[i].p()},
                                  {"place", vs[i].index()},
                                  {"target", print_element(ts[i], top)},
                                  {"value", value_json(vs[i].value(a))},
                                  {"distance_value", value_json(vs[i].value(top.sub(a, ts[i])))}});
        emit(out, Json{{"field", tower_json(K)}, {"element", print_element(a, top)}, {"checks", checks}});
    });

    auto* cext = app.add_subcommand("common-ext", "do two extensions admit a common extension");
    cext->add_option("--p", p)->required();
    cext->add_option("--field", field);
    cext->add_option("--place", place)->capture_default_str();
    cext->add_option("--poly1", poly)->required();
    cext->add_option("--poly2", poly2)->required();
    cext->add_option("--first", first, "extension index for poly1")->capture_default_str();
    cext->add_option("--second", second, "extension index for poly2")->capture_default_str();
    on(cext, [&] {
        TowerPtr K = field_from(field, cfg);
        Valuation v = valuation_from(K, p, place, cfg);
        ExtensionOptions eo;
        eo.places = cfg.places();
        auto r1 = extensions_of(v, parse_poly(poly, K->top()), eo);
        auto r2 = extensions_of(v, parse_poly(poly2, K->top()), eo);
        if (first >= r1.extensions.size() || second >= r2.extensions.size())
            fail(ErrorCode::INDEX_OUT_OF_RANGE, "extension index out of range");
        const auto& d1 = r1.extensions[first];
        const auto& d2 = r2.extensions[second];
        emit(out, Json{{"p", p},
                       {"first", Json{{"poly", print_poly(d1.minpoly)}, {"index", first}, {"e", d1.e}, {"f", d1.f}}},
                       {"second", Json{{"poly", print_poly(d2.minpoly)}, {"index", second}, {"e", d2.e}, {"f", d2.f}}},
                       {"exists", common_extension_exists(d1, d2, cfg.places())}});
    });

    auto* sim = app.add_subcommand("simulate", "finite-stage replays of the negative constructions");
    sim->require_subcommand(1);
    auto oracle = [&] {
        OracleApprox o;
        for (const auto& s : split(members, ',')) o.members.insert(to_long(s));
        o.budget = budget;
        return o;
    };
    auto* s1 = sim->add_subcommand("no-comp-ext", "extension counts over K(r^(1/p_a))");
    s1->add_option("--r", r)->capture_default_str();
    s1->add_option("--members", members, "member indices, comma separated");
    s1->add_option("--budget", budget, "probe indices 1..budget")->capture_default_str();
    on(s1, [&] {
        SimOptions so;
        so.max_degree = std::min(16, cfg.max_degree);
        emit(out, no_comp_ext_json(sim_no_comp_ext(r, oracle(), so)));
    });
    auto* s2 = sim->add_subcommand("henselization", "Hensel and value-group witnesses");
    s2->add_option("--r", r)->capture_default_str();
    s2->add_option("--members", members);
    s2->add_option("--budget", budget)->capture_default_str();
    s2->add_option("--N", N, "precision of Hensel witnesses")->capture_default_str();
    on(s2, [&] {
        SimOptions so;
        so.max_degree = std::min(16, cfg.max_degree);
        so.precision = N;
        emit(out, sim_json(sim_henselization(r, oracle(), so)));
    });
    auto* s3 = sim->add_subcommand("padic-adversary", "the adjunction that defeats a claimed embedding");
    s3->add_option("--p", p)->capture_default_str();
    s3->add_option("--q", q)->required();
    s3->add_option("--m", m)->required();
    s3->add_option("--gamma", gamma, "claimed value 'a,b'")->required();
    on(s3, [&] { emit(out, adversary_json(sim_padic_adversary(p, q, m, parse_group_elem(gamma)))); });

    std::vector<const char*> argv{"vlab"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? 0 : 2;
    }
    try {
        action();
    } catch (const Error& e) {
        emit(out, error_json(e));
        err << "vlab: " << to_string(e.code()) << ": " << e.what() << "\n";
        return 1;
    } catch (const CLI::Error& e) {
        err << "vlab: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        Error wrapped(ErrorCode::INVALID_ARGUMENT, e.what());
        emit(out, error_json(wrapped));
        err << "vlab: INVALID_ARGUMENT: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace vlab
