#include "vlab/arith/fields.hpp"

#include <sstream>

#include "vlab/arith/factor_fp.hpp"
#include "vlab/arith/poly.hpp"
#include "vlab/error.hpp"

namespace vlab {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
    if (!is_prime(p)) fail(ErrorCode::NOT_PRIME, std::to_string(p) + " is not prime");
    if (p >= (std::uint64_t{1} << 62)) fail(ErrorCode::INVALID_ARGUMENT, "prime too large for F_p arithmetic");
}

PrimeField::Elem PrimeField::from_int(long n) const {
    long r = n % static_cast<long>(p_);
    return static_cast<Elem>(r < 0 ? r + static_cast<long>(p_) : r);
}

PrimeField::Elem PrimeField::from_int(const Int& n) const {
    return to_u64(mod_floor(n, Int(std::to_string(p_))));
}

PrimeField::Elem PrimeField::from_rat(const Rat& r) const {
    Elem d = from_int(r.den());
    if (d == 0) fail(ErrorCode::DIVISION_BY_ZERO, "rational " + r.str() + " is not " + describe() + "-integral");
    return mul(from_int(r.num()), inv(d));
}

PrimeField::Elem PrimeField::inv(Elem a) const {
    if (a == 0) fail(ErrorCode::DIVISION_BY_ZERO, "inverse of zero in " + describe());
    // extended Euclid on signed 128-bit values
    __int128 t = 0, nt = 1, r = p_, nr = a;
    while (nr != 0) {
        __int128 q = r / nr;
        t = std::exchange(nt, t - q * nt);
        r = std::exchange(nr, r - q * nr);
    }
    if (t < 0) t += p_;
    return static_cast<Elem>(t);
}

PrimeField::Elem PrimeField::pow(Elem a, const Int& e) const {
    Elem r = one(), b = a;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mul(r, b);
        k >>= 1;
        if (k > 0) b = mul(b, b);
    }
    return r;
}

Int PrimeField::characteristic() const { return Int(std::to_string(p_)); }

std::string PrimeField::describe() const { return "F_" + std::to_string(p_); }

namespace {

Poly<PrimeField> as_poly(const PrimeField& k, const std::vector<std::uint64_t>& v) {
    return Poly<PrimeField>(k, v);
}

} // namespace

ExtField::ExtField(std::uint64_t p, std::vector<std::uint64_t> modulus) : base_(p) {
    for (auto& c : modulus) c %= p;
    Poly<PrimeField> m(base_, modulus);
    if (m.degree() < 1 || m.lc() != 1) fail(ErrorCode::INVALID_ARGUMENT, "modulus must be monic of degree >= 1");
    if (!is_irreducible(m)) fail(ErrorCode::NOT_IRREDUCIBLE, "modulus is reducible over " + base_.describe());
    modulus_ = std::make_shared<const std::vector<std::uint64_t>>(m.coeffs());
}

ExtField ExtField::standard(std::uint64_t p, int f) {
    if (f < 1) fail(ErrorCode::INVALID_ARGUMENT, "extension degree must be positive");
    PrimeField k(p);
    // Enumerate monic polynomials of degree f in lexicographic order of the
    // lower coefficients (read as base-p digits, constant term least significant).
    std::vector<std::uint64_t> c(f + 1, 0);
    c[f] = 1;
    while (true) {
        if (is_irreducible(Poly<PrimeField>(k, c))) return ExtField(p, c);
        int i = 0;
        while (i < f && ++c[i] == p) c[i++] = 0;
        if (i == f) break;
    }
    fail(ErrorCode::INVALID_ARGUMENT, "no irreducible polynomial found");
}

FqElem ExtField::from_base(std::uint64_t a) const {
    FqElem r = zero();
    if (!r.rep.empty()) r.rep[0] = a % prime();
    return r;
}

FqElem ExtField::generator() const {
    FqElem r = zero();
    if (degree() == 1) {
        r.rep[0] = base_.neg((*modulus_)[0]);
    } else {
        r.rep[1] = 1;
    }
    return r;
}

FqElem ExtField::add(const FqElem& a, const FqElem& b) const {
    FqElem r = a;
    for (std::size_t i = 0; i < r.rep.size(); ++i) r.rep[i] = base_.add(r.rep[i], b.rep[i]);
    return r;
}

FqElem ExtField::sub(const FqElem& a, const FqElem& b) const {
    FqElem r = a;
    for (std::size_t i = 0; i < r.rep.size(); ++i) r.rep[i] = base_.sub(r.rep[i], b.rep[i]);
    return r;
}

FqElem ExtField::neg(const FqElem& a) const {
    FqElem r = a;
    for (auto& c : r.rep) c = base_.neg(c);
    return r;
}

FqElem ExtField::mul(const FqElem& a, const FqElem& b) const {
    const int f = degree();
    std::vector<std::uint64_t> prod(2 * f - 1, 0);
    for (int i = 0; i < f; ++i) {
        if (a.rep[i] == 0) continue;
        for (int j = 0; j < f; ++j) prod[i + j] = base_.add(prod[i + j], base_.mul(a.rep[i], b.rep[j]));
    }
    const auto& m = *modulus_;
    for (int i = 2 * f - 2; i >= f; --i) {
        std::uint64_t t = prod[i];
        if (t == 0) continue;
        for (int j = 0; j <= f; ++j) prod[i - f + j] = base_.sub(prod[i - f + j], base_.mul(t, m[j]));
    }
    prod.resize(f);
    return FqElem{std::move(prod)};
}

FqElem ExtField::inv(const FqElem& a) const {
    if (is_zero(a)) fail(ErrorCode::DIVISION_BY_ZERO, "inverse of zero in " + describe());
    auto [g, s, t] = xgcd(as_poly(base_, a.rep), as_poly(base_, *modulus_));
    (void)t;
    FqElem r = zero();
    for (int i = 0; i <= s.degree(); ++i) r.rep[i] = s.coeffs()[i];
    return r;
}

FqElem ExtField::pow(const FqElem& a, const Int& e) const {
    FqElem r = one(), b = a;
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) r = mul(r, b);
        k >>= 1;
        if (k > 0) b = mul(b, b);
    }
    return r;
}

bool ExtField::is_zero(const FqElem& a) const {
    for (auto c : a.rep)
        if (c) return false;
    return true;
}

bool ExtField::less(const FqElem& a, const FqElem& b) const {
    return std::lexicographical_compare(a.rep.begin(), a.rep.end(), b.rep.begin(), b.rep.end());
}

Int ExtField::order() const { return pow_int(characteristic(), static_cast<unsigned long>(degree())); }

FqElem ExtField::pth_root(const FqElem& a) const {
    // Frobenius has order f, so its inverse is a -> a^(p^(f-1)).
    return pow(a, pow_int(characteristic(), static_cast<unsigned long>(degree() - 1)));
}

FqElem ExtField::random(std::mt19937_64& rng) const {
    FqElem r = zero();
    for (auto& c : r.rep) c = rng() % prime();
    return r;
}

std::string ExtField::describe() const {
    std::ostringstream os;
    os << "F_" << prime() << "^" << degree() << "[";
    for (std::size_t i = 0; i < modulus_->size(); ++i) os << (i ? "," : "") << (*modulus_)[i];
    os << "]";
    return os.str();
}

std::string ExtField::to_string(const FqElem& a) const {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < a.rep.size(); ++i) os << (i ? "," : "") << a.rep[i];
    os << "]";
    return os.str();
}

} // namespace vlab
