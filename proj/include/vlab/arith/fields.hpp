#pragma once

#include <concepts>
#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include "vlab/arith/integer.hpp"
#include "vlab/arith/rat.hpp"

namespace vlab {

// A field object carries everything needed to do arithmetic on its element
// type (a modulus, a tower, ...). Elements are plain values; all operations
// go through the field so that elements stay cheap and context-free.
template <class F>
concept Field = std::equality_comparable<F> && requires(const F& k, const typename F::Elem& a, long n) {
    { k.zero() } -> std::same_as<typename F::Elem>;
    { k.one() } -> std::same_as<typename F::Elem>;
    { k.from_int(n) } -> std::same_as<typename F::Elem>;
    { k.add(a, a) } -> std::same_as<typename F::Elem>;
    { k.sub(a, a) } -> std::same_as<typename F::Elem>;
    { k.mul(a, a) } -> std::same_as<typename F::Elem>;
    { k.neg(a) } -> std::same_as<typename F::Elem>;
    { k.inv(a) } -> std::same_as<typename F::Elem>;
    { k.is_zero(a) } -> std::same_as<bool>;
    { k.eq(a, a) } -> std::same_as<bool>;
    { k.less(a, a) } -> std::same_as<bool>;
    { k.characteristic() } -> std::same_as<Int>;
    { k.describe() } -> std::same_as<std::string>;
};

template <class F>
concept FiniteField = Field<F> && requires(const F& k, const typename F::Elem& a, std::mt19937_64& rng) {
    { k.order() } -> std::same_as<Int>;
    { k.pth_root(a) } -> std::same_as<typename F::Elem>;
    { k.random(rng) } -> std::same_as<typename F::Elem>;
    { k.prime() } -> std::same_as<std::uint64_t>;
};

class RationalField {
public:
    using Elem = Rat;

    Rat zero() const { return Rat(0); }
    Rat one() const { return Rat(1); }
    Rat from_int(long n) const { return Rat(n); }
    Rat from_rat(const Rat& r) const { return r; }
    Rat add(const Rat& a, const Rat& b) const { return a + b; }
    Rat sub(const Rat& a, const Rat& b) const { return a - b; }
    Rat mul(const Rat& a, const Rat& b) const { return a * b; }
    Rat neg(const Rat& a) const { return -a; }
    Rat inv(const Rat& a) const { return a.inverse(); }
    bool is_zero(const Rat& a) const { return a.is_zero(); }
    bool eq(const Rat& a, const Rat& b) const { return a == b; }
    bool less(const Rat& a, const Rat& b) const { return a < b; }
    Int characteristic() const { return 0; }
    std::string describe() const { return "Q"; }
    std::string to_string(const Rat& a) const { return a.str(); }

    friend bool operator==(const RationalField&, const RationalField&) { return true; }
};

class PrimeField {
public:
    using Elem = std::uint64_t;

    explicit PrimeField(std::uint64_t p);

    std::uint64_t prime() const { return p_; }
    Elem zero() const { return 0; }
    Elem one() const { return 1 % p_; }
    Elem from_int(long n) const;
    Elem from_int(const Int& n) const;
    // Reduction of a p-integral rational; throws DIVISION_BY_ZERO otherwise.
    Elem from_rat(const Rat& r) const;
    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem mul(Elem a, Elem b) const {
        return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p_);
    }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem inv(Elem a) const;
    Elem pow(Elem a, const Int& e) const;
    bool is_zero(Elem a) const { return a == 0; }
    bool eq(Elem a, Elem b) const { return a == b; }
    bool less(Elem a, Elem b) const { return a < b; }
    Int characteristic() const;
    Int order() const { return characteristic(); }
    Elem pth_root(Elem a) const { return a; }
    Elem random(std::mt19937_64& rng) const { return rng() % p_; }
    std::string describe() const;
    std::string to_string(Elem a) const { return std::to_string(a); }

    friend bool operator==(const PrimeField& a, const PrimeField& b) { return a.p_ == b.p_; }

private:
    std::uint64_t p_;
};

/// Element of F_{p^f}: residue of a polynomial of degree < f over F_p.
struct FqElem {
    std::vector<std::uint64_t> rep; // length f, index i = coefficient of y^i
    friend bool operator==(const FqElem&, const FqElem&) = default;
};

/// F_{p^f} = F_p[y]/(m(y)) for a fixed monic irreducible m of degree f.
class ExtField {
public:
    using Elem = FqElem;

    // modulus: coefficients low to high, monic, irreducible over F_p (verified).
    ExtField(std::uint64_t p, std::vector<std::uint64_t> modulus);
    // Degree-f field with the lexicographically first monic irreducible modulus.
    static ExtField standard(std::uint64_t p, int f);

    std::uint64_t prime() const { return base_.prime(); }
    int degree() const { return static_cast<int>(modulus_->size()) - 1; }
    const std::vector<std::uint64_t>& modulus() const { return *modulus_; }
    const PrimeField& base() const { return base_; }

    Elem zero() const { return FqElem{std::vector<std::uint64_t>(degree(), 0)}; }
    Elem one() const { return from_base(1); }
    Elem from_int(long n) const { return from_base(base_.from_int(n)); }
    Elem from_base(std::uint64_t a) const;
    Elem generator() const; // the class of y
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem inv(const Elem& a) const;
    Elem pow(const Elem& a, const Int& e) const;
    bool is_zero(const Elem& a) const;
    bool eq(const Elem& a, const Elem& b) const { return a.rep == b.rep; }
    bool less(const Elem& a, const Elem& b) const;
    Int characteristic() const { return base_.characteristic(); }
    Int order() const;
    Elem pth_root(const Elem& a) const;
    Elem random(std::mt19937_64& rng) const;
    std::string describe() const;
    std::string to_string(const Elem& a) const;

    friend bool operator==(const ExtField& a, const ExtField& b) {
        return a.base_ == b.base_ && *a.modulus_ == *b.modulus_;
    }

private:
    PrimeField base_;
    std::shared_ptr<const std::vector<std::uint64_t>> modulus_;
};

} // namespace vlab
