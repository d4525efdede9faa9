#pragma once

#include <json.hpp>

#include "vlab/closure/closure.hpp"
#include "vlab/ext/extensions.hpp"
#include "vlab/hensel/hensel.hpp"
#include "vlab/sim/diagsim.hpp"

namespace vlab {

using Json = nlohmann::ordered_json;

Json rat_json(const Rat& x);
Json value_json(const Value& v); // {"a", "b"} or "inf"
Json padic_json(const PadicApprox& x);
Json tower_json(const TowerPtr& t);
std::string fq_poly_text(const Poly<ExtField>& f);

Json factorization_json(const Factorization<TowerField>& fac);
Json newton_json(const NewtonPolygon& np);
Json extension_report_json(const ExtensionReport& rep, const Valuation& v);
Json hensel_json(const HenselResult& r);
Json hensel_set_json(const HenselSetReport& r);
Json group_json(const FGGroup& g);
Json padic_check_json(const PadicCheck& c);
Json stage_json(const Stage& s);
Json claims_json(const std::vector<Claim>& claims);
Json no_comp_ext_json(const NoCompExtReport& r);
Json sim_json(const SimReport& r);
Json adversary_json(const AdversaryReport& r);
Json error_json(const Error& e);

/// "a,b" as a + b r; "a" alone means b = 0.
GroupElem parse_group_elem(const std::string& s);
/// Elements separated by ';'.
std::vector<GroupElem> parse_group_elems(const std::string& s);

} // namespace vlab
