#pragma once

#include <string>
#include <vector>

#include "vlab/valuation/valuation.hpp"

namespace vlab {

struct HenselOptions {
    long max_precision = 512; // largest N accepted
};

/// f with p-integral rational coefficients, seed a with v(f(a)) > 2 v(f'(a)).
struct HenselProblem {
    Poly<RationalField> f{RationalField{}};
    Rat seed;
    std::uint64_t p = 2;
    long N = 1;
};

struct HenselIteration {
    Rat approx;
    Value defect; // v(f(approx))
};

struct HenselResult {
    PadicApprox root;
    Value derivative_value; // v(f'(seed))
    std::vector<HenselIteration> trace;
    bool exact = false; // an exact rational root was reached
};

HenselResult hensel_lift(const HenselProblem& prob, const HenselOptions& opt = {});

/// Lift of a simple root abar of f mod p to a root mod p^N.
HenselResult hensel_simple_root(const Poly<RationalField>& f, const Int& abar, std::uint64_t p, long N,
                                const HenselOptions& opt = {});
/// Same, for a residue in a prime field F_p presented as an ExtField of degree 1.
HenselResult hensel_simple_root(const Poly<RationalField>& f, const ExtField& F, const FqElem& abar, long N,
                                const HenselOptions& opt = {});

/// p-adic approximation of the integer class b mod p^N.
PadicApprox padic_from_residue(const Int& b, const Int& p, long N);

struct HenselSetReport {
    bool member = false;
    std::string reason; // empty for members
    bool non_henselian = false; // member of degree >= 2: the field is not Henselian
    std::vector<Value> coefficient_values;
};

/// Membership of the monic f in the Hensel irreducibility set of (K, v).
HenselSetReport hensel_set_membership(const Valuation& v, const Poly<TowerField>& f, const Limits& limits = {});

} // namespace vlab
