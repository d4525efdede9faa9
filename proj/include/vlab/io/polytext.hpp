#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vlab/nf/tower.hpp"

namespace vlab {

/// Parses the polynomial grammar: integers, variable names, + - * / ^ and
/// parentheses, whitespace ignored. Identifiers other than `var` must be
/// generator names of the field's tower (up to its level). Division is only
/// by nonzero constants. Throws ParseError with a byte offset.
Poly<TowerField> parse_poly(std::string_view src, const TowerField& k, const std::string& var = "x");
Poly<RationalField> parse_qpoly(std::string_view src, const std::string& var = "x");

/// Field element in the same grammar without `var`.
AlgElem parse_element(std::string_view src, const TowerField& k);

/// Canonical printers; parse_poly(print_poly(f)) == f.
std::string print_element(const AlgElem& a, const TowerField& k);
std::string print_poly(const Poly<TowerField>& f, const std::string& var = "x");
std::string print_qpoly(const Poly<RationalField>& f, const std::string& var = "x");

struct LevelSpec {
    std::string name;
    std::string minpoly; // in `x` and the earlier generator names
};

/// Builds a tower level by level, verifying each minimal polynomial.
TowerPtr build_tower(const std::vector<LevelSpec>& levels, const Limits& limits = {});
std::vector<LevelSpec> describe_tower(const TowerPtr& tower);

} // namespace vlab
