#pragma once

#include <memory>
#include <string>
#include <vector>

#include "vlab/arith/fields.hpp"
#include "vlab/arith/poly.hpp"

namespace vlab {

/// Element of a tower level, flattened over the power basis
/// alpha_1^i_1 ... alpha_k^i_k in mixed radix with the lowest level least
/// significant. Level-j elements embed into level k by zero padding.
struct AlgElem {
    std::vector<Rat> c;
    friend bool operator==(const AlgElem&, const AlgElem&) = default;
};

struct Limits {
    int max_depth = 6;
    int max_degree = 64;
};

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

/// Field object for level `level` of a tower; elements are AlgElem of size
/// degree(level).
class TowerField {
public:
    using Elem = AlgElem;

    TowerField(TowerPtr tower, std::size_t level);

    const TowerPtr& tower() const { return tower_; }
    std::size_t level() const { return level_; }
    int degree() const;
    TowerField below() const;

    AlgElem zero() const;
    AlgElem one() const { return from_rat(Rat(1)); }
    AlgElem from_int(long n) const { return from_rat(Rat(n)); }
    AlgElem from_rat(const Rat& r) const;
    /// Generator alpha_i (1 <= i <= level) as an element of this level.
    AlgElem generator(std::size_t i) const;
    /// Zero-pad an element of a lower level.
    AlgElem embed(const AlgElem& lower) const;

    AlgElem add(const AlgElem& a, const AlgElem& b) const;
    AlgElem sub(const AlgElem& a, const AlgElem& b) const;
    AlgElem neg(const AlgElem& a) const;
    AlgElem mul(const AlgElem& a, const AlgElem& b) const;
    AlgElem inv(const AlgElem& a) const;
    AlgElem scale(const AlgElem& a, const Rat& r) const;
    bool is_zero(const AlgElem& a) const;
    bool eq(const AlgElem& a, const AlgElem& b) const { return a.c == b.c; }
    bool less(const AlgElem& a, const AlgElem& b) const;
    bool is_rational(const AlgElem& a) const;
    Int characteristic() const { return 0; }
    std::string describe() const;

    /// Coefficients over the level below (level >= 1): a = sum chunks[i] alpha^i.
    std::vector<AlgElem> split(const AlgElem& a) const;
    AlgElem join(const std::vector<AlgElem>& chunks) const;

    friend bool operator==(const TowerField& a, const TowerField& b);

private:
    TowerPtr tower_;
    std::size_t level_;
};

/// Chain Q = K_0 < K_1 < ... < K_n of simple extensions, each given by a
/// monic minimal polynomial over the level below. Immutable; shared by pointer.
class FieldTower : public std::enable_shared_from_this<FieldTower> {
public:
    struct Level {
        std::string name;
        std::vector<AlgElem> minpoly; // monic, coefficients in the level below
        int degree() const { return static_cast<int>(minpoly.size()) - 1; }
    };

    static std::shared_ptr<const FieldTower> rationals();

    /// Adjoin a root of `minpoly` (over the top level). The polynomial must be
    /// monic-izable and irreducible over the top level; this is verified.
    std::shared_ptr<const FieldTower> extend(const std::string& name, const Poly<TowerField>& minpoly,
                                             const Limits& limits = {}) const;
    /// Same, without the irreducibility check; for callers that already know.
    std::shared_ptr<const FieldTower> extend_unchecked(const std::string& name,
                                                       const Poly<TowerField>& minpoly) const;

    std::size_t depth() const { return levels_.size(); }
    const Level& level(std::size_t i) const { return *levels_.at(i - 1); } // 1-based
    int level_degree(std::size_t i) const { return level(i).degree(); }
    /// Absolute degree [K_i : Q].
    int degree(std::size_t i) const { return dims_.at(i); }
    int degree() const { return dims_.back(); }

    TowerField field(std::size_t level) const;
    TowerField top() const;
    std::shared_ptr<const FieldTower> prefix(std::size_t level) const;

    Poly<TowerField> minpoly(std::size_t i) const;
    std::vector<std::string> names() const;

    /// Same levels (names and minimal polynomials) up to `upto`.
    bool same_prefix(const FieldTower& other, std::size_t upto) const;

private:
    FieldTower() = default;
    std::vector<std::shared_ptr<const Level>> levels_;
    std::vector<int> dims_{1};
};

// Conversions between Q[x] and polynomials over level 0 of a tower.
Poly<TowerField> to_tower_poly(const Poly<RationalField>& f, const TowerField& k);
Poly<RationalField> to_rational_poly(const Poly<TowerField>& f);
// Coefficientwise zero-padding from a lower level.
Poly<TowerField> embed_poly(const Poly<TowerField>& f, const TowerField& upper);

} // namespace vlab
