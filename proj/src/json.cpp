#include "vlab/io/json.hpp"

#include "vlab/io/polytext.hpp"

namespace vlab {

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\n");
    if (b == std::string::npos) return "";
    return s.substr(b, s.find_last_not_of(" \t\n") - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string::npos ? std::string::npos : pos - start)));
        if (pos == std::string::npos) return out;
        start = pos + 1;
    }
}

std::string fq_text(const FqElem& a) {
    std::vector<Rat> c;
    for (auto x : a.rep) c.emplace_back(Int(std::to_string(x)));
    return print_qpoly(QPoly(RationalField{}, std::move(c)), "y");
}

Json residue_field_json(const ExtField& F) {
    Json m = Json::array();
    for (auto c : F.modulus()) m.push_back(c);
    return Json{{"p", F.prime()}, {"degree", F.degree()}, {"modulus", m}};
}

} // namespace

Json rat_json(const Rat& x) { return x.str(); }

Json value_json(const Value& v) {
    if (v.is_infinite()) return "inf";
    return Json{{"a", rat_json(v.a())}, {"b", rat_json(v.b())}};
}

Json padic_json(const PadicApprox& x) {
    return Json{{"p", x.p.get_str()}, {"shift", x.shift}, {"unit", x.unit.get_str()}, {"N", x.N},
                {"representative", x.representative().get_str()}};
}

Json tower_json(const TowerPtr& t) {
    Json levels = Json::array();
    for (const auto& l : describe_tower(t)) levels.push_back(Json{{"name", l.name}, {"minpoly", l.minpoly}});
    return levels;
}

std::string fq_poly_text(const Poly<ExtField>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        const FqElem& c = f.coeffs()[i];
        if (f.field().is_zero(c)) continue;
        std::string xm = i == 0 ? "" : i == 1 ? "x" : "x^" + std::to_string(i);
        std::string ct = fq_text(c);
        const bool simple = ct.find_first_of(" y") == std::string::npos;
        std::string term;
        if (xm.empty())
            term = simple ? ct : "(" + ct + ")";
        else if (ct == "1")
            term = xm;
        else
            term = (simple ? ct : "(" + ct + ")") + "*" + xm;
        out += (out.empty() ? "" : " + ") + term;
    }
    return out;
}

Json factorization_json(const Factorization<TowerField>& fac) {
    Json factors = Json::array();
    const TowerField* k = nullptr;
    for (const auto& [g, m] : fac.factors) {
        k = &g.field();
        factors.push_back(Json{{"factor", print_poly(g)}, {"multiplicity", m}});
    }
    Json out;
    out["unit"] = k ? print_element(fac.unit, *k) : fac.unit.c.empty() ? "0" : fac.unit.c[0].str();
    out["factors"] = factors;
    return out;
}

Json newton_json(const NewtonPolygon& np) {
    Json segs = Json::array(), verts = Json::array();
    for (const auto& s : np.segments) segs.push_back(Json{{"slope", rat_json(s.slope)}, {"length", s.length}});
    for (const auto& [i, y] : np.vertices) verts.push_back(Json::array({i, rat_json(y)}));
    return Json{{"segments", segs}, {"vertices", verts}, {"zero_roots", np.zero_roots}};
}

Json extension_report_json(const ExtensionReport& rep, const Valuation& v) {
    Json exts = Json::array();
    for (const auto& d : rep.extensions) {
        Json path = Json::array();
        for (const auto& s : d.path)
            path.push_back(Json{{"slope", rat_json(s.slope)},
                                {"residual_factor", fq_poly_text(s.residual_factor)},
                                {"multiplicity", s.multiplicity}});
        exts.push_back(Json{{"e", d.e},
                            {"f", d.f},
                            {"certified", d.certified},
                            {"path_consistent", d.path_consistent},
                            {"root_value", value_json(d.root_value)},
                            {"path", path},
                            {"residue_field", residue_field_json(d.ext.places()->residue_field(d.ext.index()))}});
    }
    Json seps = Json::array();
    for (const auto& s : rep.separations) {
        const TowerField L = rep.extensions[s.first].ext.field();
        seps.push_back(Json{{"first", s.first},
                            {"second", s.second},
                            {"element", print_element(s.element, L)},
                            {"first_value", value_json(s.first_value)},
                            {"second_value", value_json(s.second_value)}});
    }
    return Json{{"p", v.p()},
                {"field", tower_json(v.tower())},
                {"place", v.index()},
                {"degree", rep.degree},
                {"certificate", rep.certificate},
                {"certified", rep.certified},
                {"extensions", exts},
                {"separations", seps}};
}

Json hensel_json(const HenselResult& r) {
    Json trace = Json::array();
    for (const auto& it : r.trace) trace.push_back(Json{{"approx", rat_json(it.approx)}, {"defect", value_json(it.defect)}});
    return Json{{"root", padic_json(r.root)},
                {"exact", r.exact},
                {"derivative_value", value_json(r.derivative_value)},
                {"trace", trace}};
}

Json hensel_set_json(const HenselSetReport& r) {
    Json vals = Json::array();
    for (const auto& v : r.coefficient_values) vals.push_back(value_json(v));
    Json out{{"member", r.member}};
    out["reason"] = r.reason.empty() ? Json(nullptr) : Json(r.reason);
    out["non_henselian"] = r.non_henselian;
    out["coefficient_values"] = vals;
    return out;
}

Json group_json(const FGGroup& g) {
    Json gens = Json::array(), basis = Json::array();
    for (const auto& x : g.gens()) gens.push_back(value_json(x));
    for (const auto& row : g.basis()) {
        // rows are in coordinates (b, a) over the common denominator
        basis.push_back(value_json(GroupElem(Rat(row[1]) / Rat(g.denominator()), Rat(row[0]) / Rat(g.denominator()))));
    }
    return Json{{"gens", gens}, {"basis", basis}, {"rank", g.rank()}};
}

Json padic_check_json(const PadicCheck& c) {
    return Json{{"extends_padic", c.extends_padic},
                {"residue_is_Fp", c.residue_is_Fp},
                {"least_positive_one", c.least_positive_one},
                {"formally_padic", c.all()}};
}

Json stage_json(const Stage& s) {
    Json roots = Json::array();
    for (const auto& r : s.roots)
        roots.push_back(Json{{"target", r.target.str()}, {"q", r.q}, {"offset", r.offset}, {"value", value_json(r.value)}});
    return Json{{"index", s.index},
                {"p", s.p},
                {"group", group_json(s.group.group())},
                {"roots", roots},
                {"flags", Json{{"formally_padic", s.flags.formally_padic},
                               {"residue_is_Fp", s.flags.residue_is_Fp},
                               {"least_positive_one", s.flags.least_positive_one},
                               {"henselized", s.henselized}}}};
}

Json claims_json(const std::vector<Claim>& claims) {
    Json out = Json::array();
    for (const auto& c : claims) out.push_back(Json{{"claim", c.claim}, {"verdict", c.verdict}, {"witness", c.witness}});
    return out;
}

Json no_comp_ext_json(const NoCompExtReport& r) {
    Json assign = Json::array(), probes = Json::array();
    for (const auto& [a, q] : r.assignment) assign.push_back(Json{{"index", a}, {"q", q}});
    for (const auto& p : r.probes) {
        Json ef = Json::array();
        for (const auto& [e, f] : p.ef) ef.push_back(Json{{"e", e}, {"f", f}});
        probes.push_back(Json{{"index", p.index},
                              {"degree", p.degree},
                              {"member", p.member},
                              {"extensions", p.count},
                              {"certificate", p.certificate},
                              {"ef", ef}});
    }
    return Json{{"simulation", "no-comp-ext"},
                {"r", r.r},
                {"assignment", assign},
                {"field", tower_json(r.field)},
                {"probes", probes},
                {"claims", claims_json(r.claims)},
                {"verified", r.verified}};
}

Json sim_json(const SimReport& r) {
    return Json{{"simulation", "henselization"}, {"claims", claims_json(r.claims)}, {"verified", r.verified}};
}

Json adversary_json(const AdversaryReport& r) {
    return Json{{"simulation", "padic-adversary"},
                {"root_value", value_json(r.root_value)},
                {"witness", value_json(r.witness)},
                {"target_formally_padic", r.target_formally_padic},
                {"contradiction", !r.target_formally_padic},
                {"claims", claims_json(r.claims)},
                {"verified", r.verified}};
}

Json error_json(const Error& e) {
    Json err{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (auto pe = dynamic_cast<const ParseError*>(&e)) err["offset"] = pe->offset();
    return Json{{"error", err}};
}

GroupElem parse_group_elem(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() > 2) throw ParseError(0, "group element '" + s + "' has more than two coordinates");
    Rat a = Rat::parse(parts[0]);
    Rat b = parts.size() == 2 ? Rat::parse(parts[1]) : Rat(0);
    return GroupElem(a, b);
}

std::vector<GroupElem> parse_group_elems(const std::string& s) {
    std::vector<GroupElem> out;
    if (trim(s).empty()) return out;
    for (const auto& part : split(s, ';')) out.push_back(parse_group_elem(part));
    return out;
}

} // namespace vlab
