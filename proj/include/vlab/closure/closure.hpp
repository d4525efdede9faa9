#pragma once

#include <string>
#include <vector>

#include "vlab/group/valuegroup.hpp"

namespace vlab {

/// p^e0 * t^e1 * b_1^e2 * ... times an optional unit. Values: v(p) = 1,
/// v(t) = r, v(b_i) from the i-th root record.
struct MonomialElem {
    std::vector<long> exponents;
    bool unit = false;

    static MonomialElem parse(const std::string& src); // "p^2*t*b1^-1", "u*t", "1"
    std::string str() const;
    friend bool operator==(const MonomialElem&, const MonomialElem&) = default;
};

struct RootRecord {
    MonomialElem target; // b^q = target
    long q = 2;
    long offset = 0;
    GroupElem value; // v(b)
};

struct StageFlags {
    bool formally_padic = false;
    bool residue_is_Fp = false;
    bool least_positive_one = false;
    friend bool operator==(const StageFlags&, const StageFlags&) = default;
};

struct PadicCheck {
    bool extends_padic = false;
    bool residue_is_Fp = false;
    bool least_positive_one = false;
    bool all() const { return extends_padic && residue_is_Fp && least_positive_one; }
};

struct Stage {
    long index = 0;
    std::uint64_t p = 2;
    DivGroup group{FGGroup{}};
    std::vector<RootRecord> roots;
    StageFlags flags;
    bool henselized = true; // the Henselization step leaves the group unchanged

    /// Q(t) with v(t) above every integer: group Z<1, r>.
    static Stage initial(std::uint64_t p);
    /// A stage over an arbitrary base group, without roots.
    static Stage over(std::uint64_t p, const FGGroup& g);
};

GroupElem monomial_value(const Stage& s, const MonomialElem& a);

PadicCheck formally_padic_check(const Stage& s);

/// One step of the closure: adjoin a q-th root of a unless q already divides
/// one of v(a), v(a) + 1, ..., v(a) + q - 1.
Stage closure_stage(const Stage& s, const MonomialElem& a, long q);

struct ClosureRun {
    std::vector<Stage> stages; // stages[0] is the input
    std::vector<bool> forced;  // entry i adjoined a root
};

ClosureRun run_closure(const Stage& s0, const std::vector<std::pair<MonomialElem, long>>& schedule);

} // namespace vlab
