#include "vlab/valuation/places.hpp"

#include <algorithm>
#include <random>

#include "vlab/arith/factor_fp.hpp"
#include "vlab/arith/linalg.hpp"

namespace vlab {

namespace {

using UVec = std::vector<std::uint64_t>;
using RVec = std::vector<Rat>;

std::vector<Int> lift_vec(const UVec& v) {
    std::vector<Int> out;
    for (auto x : v) out.emplace_back(Int(std::to_string(x)));
    return out;
}

UVec unit_vec(int n, int i, std::uint64_t p) {
    UVec v(n, 0);
    v[i] = 1 % p;
    return v;
}

bool all_zero(const UVec& v) {
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

} // namespace

std::shared_ptr<const Places> Places::compute(const TowerPtr& tower, std::uint64_t p, const PlaceOptions& opt) {
    if (!is_prime(p)) fail(ErrorCode::NOT_PRIME, std::to_string(p) + " is not prime");
    std::shared_ptr<Places> pl(new Places());
    pl->tower_ = tower;
    pl->p_ = p;
    pl->n_ = tower->degree();
    pl->abs_ = std::make_shared<AbsoluteBasis>(tower, opt.limits);
    const QPoly& h = pl->abs_->primitive().minpoly;
    Int s = 1;
    for (const auto& c : h.coeffs()) mpz_lcm(s.get_mpz_t(), s.get_mpz_t(), c.den().get_mpz_t());
    pl->scale_ = s;
    const int n = pl->n_;
    pl->hmod_.resize(n + 1);
    for (int i = 0; i <= n; ++i) pl->hmod_[i] = h.coeffs()[i] * Rat(pow_int(s, static_cast<unsigned long>(n - i)));

    std::vector<RVec> w(n, RVec(n, Rat(0)));
    for (int i = 0; i < n; ++i) w[i][i] = Rat(1);
    pl->set_order(std::move(w));
    const int max_rounds = opt.refinement_limit * n;
    while (true) {
        pl->compute_radical();
        if (!pl->enlarge()) break;
        if (++pl->rounds_ > max_rounds)
            fail(ErrorCode::REFINEMENT_LIMIT, "order enlargement did not stabilize within " +
                                                  std::to_string(max_rounds) + " rounds");
    }
    pl->decompose();
    return pl;
}

RVec Places::to_power(const AlgElem& a) const {
    RVec t = abs_->to_theta(a);
    Rat sp(1);
    for (int i = 0; i < n_; ++i) {
        t[i] /= sp;
        sp *= Rat(scale_);
    }
    return t;
}

AlgElem Places::from_power(const RVec& v) const {
    RVec t = v;
    Rat sp(1);
    for (int i = 0; i < n_; ++i) {
        t[i] *= sp;
        sp *= Rat(scale_);
    }
    return abs_->from_theta(t);
}

RVec Places::to_order(const RVec& pw) const {
    RVec out(n_, Rat(0));
    for (int i = 0; i < n_; ++i) {
        if (pw[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j)
            if (!winv_[i][j].is_zero()) out[j] += pw[i] * winv_[i][j];
    }
    return out;
}

RVec Places::from_order(const RVec& oc) const {
    RVec out(n_, Rat(0));
    for (int j = 0; j < n_; ++j) {
        if (oc[j].is_zero()) continue;
        for (int i = 0; i < n_; ++i)
            if (!w_[j][i].is_zero()) out[i] += oc[j] * w_[j][i];
    }
    return out;
}

RVec Places::mul_power(const RVec& a, const RVec& b) const {
    RVec prod(2 * n_ - 1, Rat(0));
    for (int i = 0; i < n_; ++i) {
        if (a[i].is_zero()) continue;
        for (int j = 0; j < n_; ++j)
            if (!b[j].is_zero()) prod[i + j] += a[i] * b[j];
    }
    for (int k = 2 * n_ - 2; k >= n_; --k) {
        if (prod[k].is_zero()) continue;
        Rat c = prod[k];
        for (int i = 0; i < n_; ++i) prod[k - n_ + i] -= c * hmod_[i];
        prod[k] = Rat(0);
    }
    prod.resize(n_);
    return prod;
}

bool Places::p_integral(const RVec& oc) const {
    const Int P(std::to_string(p_));
    for (const auto& c : oc)
        if (mpz_divisible_p(c.den().get_mpz_t(), P.get_mpz_t())) return false;
    return true;
}

void Places::set_order(std::vector<RVec> w) {
    w_ = std::move(w);
    auto inv = inverse(RationalField{}, w_);
    if (!inv) fail(ErrorCode::INVALID_ARGUMENT, "singular order basis");
    winv_ = std::move(*inv);
    PrimeField k(p_);
    table_.assign(n_, std::vector<UVec>(n_));
    for (int i = 0; i < n_; ++i)
        for (int j = i; j < n_; ++j) {
            RVec oc = to_order(mul_power(w_[i], w_[j]));
            UVec v(n_);
            for (int c = 0; c < n_; ++c) {
                if (!oc[c].is_integer()) fail(ErrorCode::INVALID_ARGUMENT, "order basis is not closed under products");
                v[c] = k.from_int(oc[c].num());
            }
            table_[i][j] = v;
            table_[j][i] = v;
        }
}

UVec Places::amul(const UVec& a, const UVec& b) const {
    PrimeField k(p_);
    UVec out(n_, 0);
    for (int i = 0; i < n_; ++i) {
        if (a[i] == 0) continue;
        for (int j = 0; j < n_; ++j) {
            if (b[j] == 0) continue;
            const auto s = k.mul(a[i], b[j]);
            const auto& t = table_[i][j];
            for (int c = 0; c < n_; ++c)
                if (t[c]) out[c] = k.add(out[c], k.mul(s, t[c]));
        }
    }
    return out;
}

UVec Places::apow(UVec a, Int e) const {
    RVec one_pw(n_, Rat(0));
    one_pw[0] = Rat(1);
    RVec one_oc = to_order(one_pw);
    PrimeField k(p_);
    UVec r(n_);
    for (int c = 0; c < n_; ++c) r[c] = k.from_int(one_oc[c].num());
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) r = amul(r, a);
        e >>= 1;
        if (e > 0) a = amul(a, a);
    }
    return r;
}

UVec Places::rad_reduce(UVec v) const {
    PrimeField k(p_);
    for (std::size_t r = 0; r < rad_.size(); ++r) {
        const auto c = v[rad_pivots_[r]];
        if (c == 0) continue;
        for (int j = 0; j < n_; ++j) v[j] = k.sub(v[j], k.mul(c, rad_[r][j]));
    }
    return v;
}

void Places::compute_radical() {
    PrimeField k(p_);
    Int q(std::to_string(p_));
    while (q < n_) q *= Int(std::to_string(p_));
    std::vector<UVec> images;
    for (int i = 0; i < n_; ++i) images.push_back(apow(unit_vec(n_, i, p_), q));
    Matrix<PrimeField> eqs(n_, UVec(n_));
    for (int c = 0; c < n_; ++c)
        for (int i = 0; i < n_; ++i) eqs[c][i] = images[i][c];
    Matrix<PrimeField> ker = kernel(k, eqs, n_);
    rad_pivots_ = ker.empty() ? std::vector<std::size_t>{} : rref(k, ker);
    ker.resize(rad_pivots_.size());
    rad_ = std::move(ker);
}

bool Places::enlarge() {
    PrimeField k(p_);
    const Int P(std::to_string(p_));
    IntMatrix gens;
    for (const auto& r : rad_) gens.push_back(lift_vec(r));
    IntMatrix ib = hnf(gens, n_, P);
    // exact structure constants for products with the ideal basis
    std::vector<RVec> ib_rat;
    for (const auto& row : ib) {
        RVec v;
        for (const auto& x : row) v.emplace_back(x);
        ib_rat.push_back(v);
    }
    auto ib_inv = inverse(RationalField{}, ib_rat);
    if (!ib_inv) fail(ErrorCode::INVALID_ARGUMENT, "radical is not of full rank");
    std::vector<RVec> ib_pw;
    for (const auto& v : ib_rat) ib_pw.push_back(from_order(v));
    Matrix<PrimeField> eqs(static_cast<std::size_t>(n_) * n_, UVec(n_, 0));
    for (int i = 0; i < n_; ++i) {
        for (int b = 0; b < n_; ++b) {
            RVec oc = to_order(mul_power(w_[i], ib_pw[b]));
            for (int c = 0; c < n_; ++c) {
                Rat z(0);
                for (int j = 0; j < n_; ++j)
                    if (!oc[j].is_zero()) z += oc[j] * (*ib_inv)[j][c];
                if (!z.is_integer()) fail(ErrorCode::INVALID_ARGUMENT, "radical is not an ideal");
                eqs[b * n_ + c][i] = k.from_int(z.num());
            }
        }
    }
    auto ker = kernel(k, eqs, n_);
    if (ker.empty()) return false;
    IntMatrix ug;
    for (const auto& v : ker) ug.push_back(lift_vec(v));
    IntMatrix ub = hnf(ug, n_, P);
    std::vector<RVec> w(n_, RVec(n_, Rat(0)));
    for (int r = 0; r < n_; ++r)
        for (int c = 0; c < n_; ++c) {
            if (ub[r][c] == 0) continue;
            Rat coef(ub[r][c], P);
            for (int i = 0; i < n_; ++i) w[r][i] += coef * w_[c][i];
        }
    set_order(std::move(w));
    return true;
}

void Places::decompose() {
    PrimeField k(p_);
    const Int P(std::to_string(p_));
    std::vector<bool> is_piv(n_, false);
    for (auto c : rad_pivots_) is_piv[c] = true;
    std::vector<int> free_cols;
    for (int c = 0; c < n_; ++c)
        if (!is_piv[c]) free_cols.push_back(c);
    const std::size_t m = free_cols.size();
    auto bmul = [&](const UVec& x, const UVec& y) { return rad_reduce(amul(x, y)); };
    UVec one = apow(unit_vec(n_, 0, p_), 0);
    one = rad_reduce(one);

    // Frobenius-fixed subalgebra of O / rad
    Matrix<PrimeField> eqs(m, UVec(m, 0));
    for (std::size_t kk = 0; kk < m; ++kk) {
        UVec b = unit_vec(n_, free_cols[kk], p_);
        UVec img = rad_reduce(apow(b, P));
        for (std::size_t c = 0; c < m; ++c) eqs[c][kk] = k.sub(img[free_cols[c]], b[free_cols[c]]);
    }
    auto fixed = kernel(k, eqs, m);

    // minimal polynomial of z in the algebra with identity e
    auto krylov = [&](const UVec& e, const UVec& z) {
        std::vector<UVec> pw{e};
        while (true) {
            UVec next = bmul(pw.back(), z);
            Matrix<PrimeField> a(n_, UVec(pw.size()));
            for (int r = 0; r < n_; ++r)
                for (std::size_t j = 0; j < pw.size(); ++j) a[r][j] = pw[j][r];
            UVec rhs(n_);
            for (int r = 0; r < n_; ++r) rhs[r] = k.neg(next[r]);
            if (auto sol = solve(k, a, rhs)) {
                UVec c = *sol;
                c.push_back(1);
                return std::make_pair(Poly<PrimeField>(k, c), pw);
            }
            pw.push_back(next);
        }
    };

    std::vector<UVec> idems{one};
    for (const auto& fv : fixed) {
        UVec z(n_, 0);
        for (std::size_t kk = 0; kk < m; ++kk) z[free_cols[kk]] = fv[kk];
        std::vector<UVec> next;
        for (const auto& e : idems) {
            UVec ze = bmul(z, e);
            auto [mu, pw] = krylov(e, ze);
            if (mu.degree() <= 1) {
                next.push_back(e);
                continue;
            }
            std::vector<std::uint64_t> roots;
            for (const auto& [g, mult] : factor_over_fp(mu).factors) roots.push_back(k.neg(g.coeffs()[0]));
            for (auto c : roots) {
                UVec ec = e;
                for (auto c2 : roots) {
                    if (c2 == c) continue;
                    UVec t(n_);
                    const auto inv = k.inv(k.sub(c, c2));
                    for (int j = 0; j < n_; ++j) t[j] = k.mul(k.sub(ze[j], k.mul(c2, e[j])), inv);
                    ec = bmul(ec, t);
                }
                next.push_back(ec);
            }
        }
        idems = std::move(next);
    }

    IntMatrix rad_gens;
    for (const auto& r : rad_) rad_gens.push_back(lift_vec(r));
    std::mt19937_64 rng(kDefaultSeed);
    for (const auto& e : idems) {
        Prime pr;
        std::vector<UVec> eb;
        Matrix<PrimeField> span;
        IntMatrix gens = rad_gens;
        for (int c : free_cols) {
            UVec b = unit_vec(n_, c, p_);
            UVec be = bmul(b, e);
            eb.push_back(be);
            span.push_back(be);
            UVec comp(n_);
            for (int j = 0; j < n_; ++j) comp[j] = k.sub(b[j], be[j]);
            gens.push_back(lift_vec(comp));
        }
        pr.f = static_cast<int>(rank(k, span));
        pr.basis = hnf(gens, n_, P);
        pr.idem = lift_vec(e);

        // anti-uniformizer: x with x * P inside pO
        Matrix<PrimeField> aeq(static_cast<std::size_t>(n_) * n_, UVec(n_, 0));
        std::vector<UVec> pb;
        for (const auto& row : pr.basis) {
            UVec v(n_);
            for (int j = 0; j < n_; ++j) v[j] = k.from_int(row[j]);
            pb.push_back(v);
        }
        for (int i = 0; i < n_; ++i) {
            UVec x = unit_vec(n_, i, p_);
            for (int b = 0; b < n_; ++b) {
                UVec prod = amul(x, pb[b]);
                for (int c = 0; c < n_; ++c) aeq[b * n_ + c][i] = prod[c];
            }
        }
        auto ak = kernel(k, aeq, n_);
        if (ak.empty()) fail(ErrorCode::INVALID_ARGUMENT, "no anti-uniformizer found");
        RVec beta;
        for (auto x : ak.front()) beta.emplace_back(Int(std::to_string(x)));
        pr.anti = from_order(beta);
        for (auto& x : pr.anti) x /= Rat(P);

        RVec ppw(n_, Rat(0));
        ppw[0] = Rat(P);
        pr.e = static_cast<int>(ord_power(pr, ppw));

        for (const auto& row : pr.basis) {
            RVec oc(row.begin(), row.end());
            RVec pw = from_order(oc);
            pr.ideal.push_back(from_power(pw));
            if (pr.uniformizer.c.empty() && ord_power(pr, pw) == 1) pr.uniformizer = from_power(pw);
        }
        if (pr.uniformizer.c.empty()) fail(ErrorCode::INVALID_ARGUMENT, "no uniformizer in the ideal basis");

        // residue field generator
        if (pr.f == 1) {
            pr.residue = ExtField(p_, {0, 1});
            pr.residue_powers = {e};
            pr.residue_gen = lift_vec(e);
        } else {
            auto candidate = [&](std::size_t t) {
                if (t < eb.size()) return eb[t];
                UVec z(n_, 0);
                for (const auto& b : eb) {
                    auto c = rng() % p_;
                    for (int j = 0; j < n_; ++j) z[j] = k.add(z[j], k.mul(c, b[j]));
                }
                return z;
            };
            for (std::size_t t = 0;; ++t) {
                UVec z = candidate(t);
                if (all_zero(z)) continue;
                auto [mu, pw] = krylov(e, z);
                if (mu.degree() != pr.f) continue;
                pr.residue = ExtField(p_, mu.coeffs());
                pr.residue_powers = pw;
                pr.residue_gen = lift_vec(z);
                break;
            }
        }
        primes_.push_back(std::move(pr));
    }
    std::sort(primes_.begin(), primes_.end(), [](const Prime& a, const Prime& b) {
        if (a.e != b.e) return a.e < b.e;
        if (a.f != b.f) return a.f < b.f;
        return a.basis < b.basis;
    });
}

long Places::ord_power(const Prime& P, RVec pw) const {
    long k = 0;
    while (true) {
        pw = mul_power(pw, P.anti);
        if (!p_integral(to_order(pw))) return k;
        ++k;
    }
}

long Places::ord(std::size_t i, const AlgElem& a) const {
    const Prime& P = primes_.at(i);
    if (tower_->top().is_zero(a)) fail(ErrorCode::INVALID_ARGUMENT, "order of zero");
    RVec pw = to_power(a);
    RVec oc = to_order(pw);
    const Int Pp(std::to_string(p_));
    long s = 0;
    for (const auto& c : oc) s = std::max(s, vp_int(c.den(), Pp));
    if (s > 0) {
        Rat f(pow_int(Pp, static_cast<unsigned long>(s)));
        for (auto& x : pw) x *= f;
    }
    return ord_power(P, pw) - s * P.e;
}

Value Places::value(std::size_t i, const AlgElem& a) const {
    if (tower_->top().is_zero(a)) return Value::infinity();
    return Value(Rat(Int(ord(i, a)), Int(primes_.at(i).e)));
}

UVec Places::reduce_to_algebra(const Prime& P, RVec pw) const {
    PrimeField k(p_);
    RVec idem_pw = from_order(RVec(P.idem.begin(), P.idem.end()));
    for (int guard = 0;; ++guard) {
        RVec oc = to_order(pw);
        if (p_integral(oc)) {
            UVec v(n_);
            for (int j = 0; j < n_; ++j) v[j] = k.from_rat(oc[j]);
            return v;
        }
        if (guard > 100000) fail(ErrorCode::INVALID_ARGUMENT, "element is not integral at the prime");
        pw = mul_power(pw, idem_pw);
    }
}

FqElem Places::reduce(std::size_t i, const AlgElem& a) const {
    const Prime& P = primes_.at(i);
    PrimeField k(p_);
    if (tower_->top().is_zero(a)) return P.residue.zero();
    if (ord(i, a) < 0) fail(ErrorCode::NOT_INTEGRAL, "element has negative value");
    UVec v = rad_reduce(reduce_to_algebra(P, to_power(a)));
    UVec idem(n_);
    for (int j = 0; j < n_; ++j) idem[j] = k.from_int(P.idem[j]);
    v = rad_reduce(amul(v, rad_reduce(idem)));
    const std::size_t f = P.residue_powers.size();
    Matrix<PrimeField> a_mat(n_, UVec(f));
    for (int r = 0; r < n_; ++r)
        for (std::size_t j = 0; j < f; ++j) a_mat[r][j] = P.residue_powers[j][r];
    auto sol = solve(k, a_mat, v);
    if (!sol) fail(ErrorCode::INVALID_ARGUMENT, "residue is outside the residue field");
    return FqElem{*sol};
}

AlgElem Places::lift(std::size_t i, const FqElem& r) const {
    const Prime& P = primes_.at(i);
    const TowerField top = tower_->top();
    if (P.f == 1) return top.from_rat(Rat(Int(std::to_string(r.rep.at(0)))));
    RVec z = from_order(RVec(P.residue_gen.begin(), P.residue_gen.end()));
    RVec acc(n_, Rat(0)), pw(n_, Rat(0));
    pw[0] = Rat(1);
    for (std::size_t j = 0; j < r.rep.size(); ++j) {
        if (r.rep[j]) {
            Rat c(Int(std::to_string(r.rep[j])));
            for (int t = 0; t < n_; ++t) acc[t] += c * pw[t];
        }
        pw = mul_power(pw, z);
    }
    return from_power(acc);
}

} // namespace vlab
