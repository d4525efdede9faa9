#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "vlab/arith/fields.hpp"
#include "vlab/nf/numberfields.hpp"
#include "vlab/valuation/value.hpp"

namespace vlab {

struct PlaceOptions {
    int refinement_limit = 8; // order-enlargement rounds per unit of degree
    Limits limits;
};

/// The primes of a tower's top field above a rational prime p, computed from
/// a p-maximal order. Primes are listed in a fixed order.
class Places {
public:
    static std::shared_ptr<const Places> compute(const TowerPtr& tower, std::uint64_t p,
                                                 const PlaceOptions& opt = {});

    const TowerPtr& tower() const { return tower_; }
    TowerField field() const { return tower_->top(); }
    std::uint64_t p() const { return p_; }
    std::size_t count() const { return primes_.size(); }
    int degree() const { return n_; }
    int order_rounds() const { return rounds_; }

    int e(std::size_t i) const { return primes_.at(i).e; }
    int f(std::size_t i) const { return primes_.at(i).f; }

    /// Exponent of the prime ideal in a (nonzero).
    long ord(std::size_t i, const AlgElem& a) const;
    /// Normalized value, v(p) = 1; infinity for zero.
    Value value(std::size_t i, const AlgElem& a) const;

    /// Residue field of prime i as F_p[y]/(modulus).
    const ExtField& residue_field(std::size_t i) const { return primes_.at(i).residue; }
    /// Reduction of an element of nonnegative value.
    FqElem reduce(std::size_t i, const AlgElem& a) const;
    /// Some element of the valuation ring reducing to r.
    AlgElem lift(std::size_t i, const FqElem& r) const;
    /// Element of value 1/e.
    const AlgElem& uniformizer(std::size_t i) const { return primes_.at(i).uniformizer; }
    /// Z-basis of the prime ideal (within the p-maximal order), as field elements.
    const std::vector<AlgElem>& ideal_basis(std::size_t i) const { return primes_.at(i).ideal; }

    /// Index of the prime whose ideal generators all have positive value under
    /// `value_fn` (a valuation of an extension field restricted here).
    template <class Fn>
    std::optional<std::size_t> match(Fn&& value_fn) const {
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            bool all = true;
            for (const auto& g : primes_[i].ideal)
                if (!(value_fn(g) > Value(Rat(0)))) {
                    all = false;
                    break;
                }
            if (all) return i;
        }
        return std::nullopt;
    }

private:
    struct Prime {
        int e = 0, f = 0;
        std::vector<std::vector<Int>> basis; // order coordinates
        std::vector<Rat> anti;               // power coordinates, value -1
        std::vector<Int> idem;               // order coordinates, 1 mod P, 0 mod the others
        AlgElem uniformizer;
        std::vector<AlgElem> ideal;
        ExtField residue{2, {0, 1}};
        std::vector<std::vector<std::uint64_t>> residue_powers; // z^k reduced, algebra coordinates
        std::vector<Int> residue_gen;                           // order coordinates
    };

    Places() = default;

    // conversions between tower elements, power coordinates (in theta') and order coordinates
    std::vector<Rat> to_power(const AlgElem& a) const;
    AlgElem from_power(const std::vector<Rat>& v) const;
    std::vector<Rat> to_order(const std::vector<Rat>& pw) const;
    std::vector<Rat> from_order(const std::vector<Rat>& oc) const;
    std::vector<Rat> mul_power(const std::vector<Rat>& a, const std::vector<Rat>& b) const;
    bool p_integral(const std::vector<Rat>& oc) const;
    long ord_power(const Prime& P, std::vector<Rat> pw) const;
    std::vector<std::uint64_t> reduce_to_algebra(const Prime& P, std::vector<Rat> pw) const;

    // algebra O/pO
    std::vector<std::uint64_t> amul(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b) const;
    std::vector<std::uint64_t> apow(std::vector<std::uint64_t> a, Int e) const;
    std::vector<std::uint64_t> rad_reduce(std::vector<std::uint64_t> v) const;

    void set_order(std::vector<std::vector<Rat>> w);
    bool enlarge();
    void compute_radical();
    void decompose();

    TowerPtr tower_;
    std::uint64_t p_ = 0;
    int n_ = 0;
    std::shared_ptr<const AbsoluteBasis> abs_;
    Int scale_;                                  // theta' = scale * theta
    std::vector<Rat> hmod_;                      // monic minimal polynomial of theta', low to high
    std::vector<std::vector<Rat>> w_, winv_;     // order basis rows in power coordinates, and inverse
    std::vector<std::vector<std::vector<std::uint64_t>>> table_; // structure constants mod p
    std::vector<std::vector<std::uint64_t>> rad_; // radical of O/pO, reduced echelon rows
    std::vector<std::size_t> rad_pivots_;
    int rounds_ = 0;
    std::vector<Prime> primes_;
};

using PlacesPtr = std::shared_ptr<const Places>;

} // namespace vlab
