#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "vlab/arith/factor_fp.hpp"
#include "vlab/arith/poly.hpp"
#include "vlab/nf/tower.hpp"

namespace vlab {

using QPoly = Poly<RationalField>;
using KPoly = Poly<TowerField>;

/// Factorization over Q: squarefree decomposition, then modular factorization
/// at a good prime, Hensel lifting to a coefficient bound and recombination.
Factorization<RationalField> factor_over_q(const QPoly& f, std::uint64_t seed = kDefaultSeed);

/// Factorization over any tower level. Level 0 delegates to factor_over_q;
/// higher levels reduce to the level below through norms (Trager).
Factorization<TowerField> factor_over_field(const KPoly& f, const Limits& limits = {},
                                            std::uint64_t seed = kDefaultSeed);

/// Decides membership in the complement of the splitting set.
bool is_irreducible_over(const KPoly& f, const Limits& limits = {});
bool is_irreducible_over_q(const QPoly& f);

/// Minimal polynomial of `a` (an element of `home`) over level `over` of the
/// same tower, returned as a polynomial over that level.
KPoly minimal_polynomial(const TowerField& home, const AlgElem& a, std::size_t over);
QPoly minimal_polynomial_over_q(const TowerField& home, const AlgElem& a);

struct PrimitiveElement {
    AlgElem theta;                 // element of the top level
    QPoly minpoly{RationalField{}}; // over Q, degree = [K : Q]
    std::vector<long> combination; // theta = sum combination[i] * alpha_{i+1}
};

PrimitiveElement primitive_element(const TowerPtr& tower, const Limits& limits = {});

/// Linear coordinates of the top level in the power basis of a primitive element.
class AbsoluteBasis {
public:
    explicit AbsoluteBasis(TowerPtr tower, const Limits& limits = {});

    const TowerPtr& tower() const { return tower_; }
    const PrimitiveElement& primitive() const { return prim_; }
    int degree() const { return tower_->degree(); }

    /// a = sum out[i] theta^i
    std::vector<Rat> to_theta(const AlgElem& a) const;
    AlgElem from_theta(const std::vector<Rat>& coords) const;

private:
    TowerPtr tower_;
    PrimitiveElement prim_;
    std::vector<std::vector<Rat>> to_theta_; // square matrix
    std::vector<std::vector<Rat>> from_theta_;
};

/// Resultant over a field via the Euclidean remainder sequence.
template <Field F>
typename F::Elem resultant(const Poly<F>& a, const Poly<F>& b);

/// Norm from level k to level k-1 of a polynomial over level k.
KPoly norm_down(const KPoly& f);

} // namespace vlab

#include "vlab/nf/resultant_impl.hpp"
