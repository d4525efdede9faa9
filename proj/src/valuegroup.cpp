#include "vlab/group/valuegroup.hpp"

#include <numeric>

namespace vlab {

namespace {

void check_finite(const GroupElem& x) {
    if (x.is_infinite()) fail(ErrorCode::INVALID_ARGUMENT, "group elements are finite");
}

Int lcm_den(Int d, const Rat& x) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.den().get_mpz_t());
    return d;
}

// den * x as an integer row (b, a); nullopt when not integral
std::optional<std::vector<Int>> scaled(const GroupElem& x, const Int& den) {
    Rat b = x.b() * Rat(den), a = x.a() * Rat(den);
    if (b.den() != 1 || a.den() != 1) return std::nullopt;
    return std::vector<Int>{b.num(), a.num()};
}

// Product of pivots (rank 2) or content of the single row (rank 1)
Int covolume(const IntMatrix& basis) {
    if (basis.empty()) return 1;
    if (basis.size() == 2) return abs(determinant(basis));
    Int g = 0;
    for (const auto& c : basis[0]) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

} // namespace

FGGroup::FGGroup(std::vector<GroupElem> gens) : gens_(std::move(gens)) {
    for (const auto& g : gens_) {
        check_finite(g);
        den_ = lcm_den(lcm_den(den_, g.a()), g.b());
    }
    IntMatrix rows;
    for (const auto& g : gens_) rows.push_back(*scaled(g, den_));
    basis_ = hnf(std::move(rows), 2);
}

bool FGGroup::contains(const GroupElem& x) const {
    check_finite(x);
    auto v = scaled(x, den_);
    if (!v) return false;
    // reduce against the echelon rows
    std::vector<Int> r = *v;
    for (const auto& row : basis_) {
        std::size_t piv = 0;
        while (row[piv] == 0) ++piv;
        if (r[piv] % row[piv] != 0) return false;
        Int q = r[piv] / row[piv];
        for (std::size_t j = 0; j < 2; ++j) r[j] -= q * row[j];
    }
    return r[0] == 0 && r[1] == 0;
}

FGGroup FGGroup::with(const GroupElem& g) const {
    auto gens = gens_;
    gens.push_back(g);
    return FGGroup(std::move(gens));
}

bool group_contains(const FGGroup& g, const GroupElem& x) { return g.contains(x); }

bool div_query(const FGGroup& g, const GroupElem& x, long k) {
    if (k < 1) fail(ErrorCode::INVALID_ARGUMENT, "divisor must be positive");
    if (!g.contains(x)) fail(ErrorCode::NOT_A_MEMBER, x.str() + " is not in the group");
    return g.contains(x * (Rat(1) / Rat(k)));
}

bool least_positive_is_one(const FGGroup& g) {
    if (!g.contains(Value(Rat(1)))) fail(ErrorCode::MISSING_ONE, "the group does not contain 1");
    // the elements with b = 0 form a cyclic group generated by the last pivot row
    const auto& row = g.basis().back();
    return row[0] == 0 && Int(abs(row[1])) == g.denominator();
}

Int subgroup_index(const FGGroup& g, const FGGroup& h) {
    for (const auto& x : g.gens())
        if (!h.contains(x)) fail(ErrorCode::NOT_SUBGROUP, x.str() + " is not in the larger group");
    if (g.rank() != h.rank()) fail(ErrorCode::INFINITE_INDEX, "ranks differ");
    // covolumes over the common denominator L: cov(L G) = cov(den_G G) * (L / den_G)^rank
    Int L = g.denominator();
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), h.denominator().get_mpz_t());
    const auto rk = static_cast<unsigned long>(g.rank());
    Int cg = covolume(g.basis()) * pow_int(L / g.denominator(), rk);
    Int ch = covolume(h.basis()) * pow_int(L / h.denominator(), rk);
    return cg / ch;
}

DivGroup::DivGroup(FGGroup base) : group_(std::move(base)) {}

bool DivGroup::divides(const GroupElem& x, long k) const {
    if (k < 1) fail(ErrorCode::INVALID_ARGUMENT, "divisor must be positive");
    if (!group_.contains(x)) fail(ErrorCode::NOT_A_MEMBER, x.str() + " is not in the group");
    GroupElem y = x;
    for (const auto& [q, e] : factor_small(static_cast<std::uint64_t>(k)))
        for (int i = 0; i < e; ++i) {
            const long ql = static_cast<long>(q);
            if (!divides_prime(y, ql)) return false;
            y = y * (Rat(1) / Rat(ql));
        }
    return true;
}

bool DivGroup::divides_prime(const GroupElem& x, long q) const {
    if (!parent_) return group_.contains(x * (Rat(1) / Rat(q)));
    const DivGroup& G = *parent_;
    if (n_ == 1) return G.divides_prime(x, q);
    // x = m a + g with 0 <= m < n and g in G
    long m = 0;
    GroupElem g = x;
    while (!G.group().contains(g)) {
        if (++m == n_) fail(ErrorCode::NOT_A_MEMBER, x.str() + " has no decomposition over the base");
        g = g - root_;
    }
    if (n_ % q != 0) return G.divides_prime(b_ * Rat(m) + g * Rat(n_), q);
    if (m % q != 0) return false;
    for (long k = 0; k < q; ++k)
        if (G.divides_prime(g - b_ * Rat(k), q)) return true;
    return false;
}

DivGroup extend_div(const DivGroup& g, const GroupElem& b, long n) {
    if (n < 1) fail(ErrorCode::INVALID_ARGUMENT, "root degree must be positive");
    if (!g.group().contains(b)) fail(ErrorCode::NOT_A_MEMBER, b.str() + " is not in the group");
    DivGroup h;
    h.parent_ = std::make_shared<const DivGroup>(g);
    h.b_ = b;
    h.n_ = n;
    // divide b by prime factors of n while possible: n a = q b' forces (n/q) a = b'
    bool changed = true;
    while (changed && h.n_ > 1) {
        changed = false;
        for (const auto& [q, e] : factor_small(static_cast<std::uint64_t>(h.n_))) {
            const long ql = static_cast<long>(q);
            if (g.divides_prime(h.b_, ql)) {
                h.b_ = h.b_ * (Rat(1) / Rat(ql));
                h.n_ /= ql;
                changed = true;
                break;
            }
        }
    }
    h.root_ = b * (Rat(1) / Rat(n));
    h.group_ = h.n_ == 1 ? g.group() : g.group().with(h.root_);
    return h;
}

} // namespace vlab
