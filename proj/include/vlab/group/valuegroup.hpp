#pragma once

#include <memory>
#include <vector>

#include "vlab/arith/linalg.hpp"
#include "vlab/valuation/value.hpp"

namespace vlab {

/// Elements a*1 + b*r of Q + Q*r; always finite.
using GroupElem = Value;

/// Subgroup of Q + Q*r generated by finitely many elements.
class FGGroup {
public:
    FGGroup() = default;
    explicit FGGroup(std::vector<GroupElem> gens);

    const std::vector<GroupElem>& gens() const { return gens_; }
    /// Common denominator of all generator coordinates.
    const Int& denominator() const { return den_; }
    /// Hermite basis of den * G in coordinates (b, a).
    const IntMatrix& basis() const { return basis_; }
    int rank() const { return static_cast<int>(basis_.size()); }

    bool contains(const GroupElem& x) const;
    FGGroup with(const GroupElem& g) const;

private:
    std::vector<GroupElem> gens_;
    Int den_{1};
    IntMatrix basis_;
};

bool group_contains(const FGGroup& g, const GroupElem& x);

/// Whether x/k lies in G, decided by lattice membership.
bool div_query(const FGGroup& g, const GroupElem& x, long k);

/// No element of G lies strictly between 0 and 1.
bool least_positive_is_one(const FGGroup& g);

/// Lattice index [H : G] for G inside H of equal rank.
Int subgroup_index(const FGGroup& g, const FGGroup& h);

/// A group built from a base lattice by adjoining roots a with n*a = b one at
/// a time; divisibility is answered level by level from the base.
class DivGroup {
public:
    explicit DivGroup(FGGroup base);

    const FGGroup& group() const { return group_; }
    /// Number of adjunctions above the base.
    std::size_t depth() const { return parent_ ? parent_->depth() + 1 : 0; }
    /// The adjoined root, and the reduced (b, n) actually used; n = 1 means no change.
    const GroupElem& root() const { return root_; }
    const GroupElem& reduced_b() const { return b_; }
    long reduced_n() const { return n_; }
    const std::shared_ptr<const DivGroup>& parent() const { return parent_; }

    /// k divides x in this group, by the decomposition x = m a + g.
    bool divides(const GroupElem& x, long k) const;
    /// Same question answered directly on the lattice.
    bool divides_oracle(const GroupElem& x, long k) const { return div_query(group_, x, k); }

    friend DivGroup extend_div(const DivGroup& g, const GroupElem& b, long n);

private:
    DivGroup() = default;
    bool divides_prime(const GroupElem& x, long q) const;

    FGGroup group_;
    std::shared_ptr<const DivGroup> parent_;
    GroupElem b_, root_;
    long n_ = 1;
};

/// H = G<a> with n a = b.
DivGroup extend_div(const DivGroup& g, const GroupElem& b, long n);

} // namespace vlab
