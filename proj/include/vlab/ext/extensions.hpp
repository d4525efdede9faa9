#pragma once

#include <string>
#include <vector>

#include "vlab/valuation/valuation.hpp"

namespace vlab {

/// One refinement step: the Newton polygon segment (by slope) containing the
/// root, and the irreducible residual factor over the base residue field.
struct PathStep {
    Rat slope;
    Poly<ExtField> residual_factor;
    int multiplicity = 1; // multiplicity of the factor in the residual polynomial
};

struct ExtensionDescriptor {
    Valuation base;
    Poly<TowerField> minpoly; // over the base field, monic irreducible
    Valuation ext;            // on base(a), a a root of minpoly
    std::vector<PathStep> path;
    int e = 0;
    int f = 0;
    bool certified = false;
    bool path_consistent = true; // regular steps reproduce (e, f)
    Value root_value;            // value of the adjoined root
};

struct SeparationRecord {
    std::size_t first, second;
    AlgElem element;
    Value first_value, second_value;
};

struct ExtensionReport {
    std::vector<ExtensionDescriptor> extensions;
    int degree = 0;
    int certificate = 0; // sum of e*f
    bool certified = false;
    std::vector<SeparationRecord> separations;
};

struct ExtensionOptions {
    PlaceOptions places;
    std::string root_name = "a";
};

/// All extensions of v (on K, the top of its tower) to K(a) with g(a) = 0.
ExtensionReport extensions_of(const Valuation& v, const Poly<TowerField>& g, const ExtensionOptions& opt = {});

/// Value at the root-adjoined field of g(a), g over the base field.
Value value_of_element(const Poly<TowerField>& g, const ExtensionDescriptor& d);

/// Restriction test for a descriptor's valuation to a valuation on a subfield.
bool restricts_to(const ExtensionDescriptor& w, const Valuation& v);

/// Tower containing both fields (levels of a shared prefix identified) and an
/// embedding of the second tower's top field into it.
struct Compositum {
    TowerPtr tower;
    std::vector<AlgElem> images; // images of the second tower's generators
};
Compositum compositum(const TowerPtr& first, const TowerPtr& second, const Limits& limits = {});
/// Image of an element of `second`'s top field under the compositum embedding.
AlgElem map_into(const Compositum& c, const TowerPtr& second, const AlgElem& a);

bool common_extension_exists(const Valuation& u, const Valuation& w, const PlaceOptions& opt = {});
bool common_extension_exists(const ExtensionDescriptor& u, const ExtensionDescriptor& w, const PlaceOptions& opt = {});

bool is_immediate(const ExtensionDescriptor& d);

bool henselization_membership(const Poly<RationalField>& g, std::uint64_t p, std::size_t which,
                              const ExtensionOptions& opt = {});

} // namespace vlab
