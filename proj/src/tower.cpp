#include "vlab/nf/tower.hpp"

#include <algorithm>

#include "vlab/nf/numberfields.hpp"

namespace vlab {

namespace {

using Vec = std::vector<Rat>;

Vec mul_at(const FieldTower& t, std::size_t level, const Vec& a, const Vec& b);

// a += s * b on slices of equal length
void add_scaled_product(const FieldTower& t, std::size_t level, Vec& acc, std::size_t off, const Vec& a,
                        std::size_t aoff, const Vec& b, std::size_t boff, std::size_t len, bool subtract) {
    Vec x(a.begin() + aoff, a.begin() + aoff + len);
    Vec y(b.begin() + boff, b.begin() + boff + len);
    Vec p = mul_at(t, level, x, y);
    for (std::size_t i = 0; i < len; ++i) {
        if (subtract)
            acc[off + i] -= p[i];
        else
            acc[off + i] += p[i];
    }
}

Vec mul_at(const FieldTower& t, std::size_t level, const Vec& a, const Vec& b) {
    if (level == 0) return {a[0] * b[0]};
    const auto& lv = t.level(level);
    const std::size_t d = lv.degree();
    const std::size_t sub = t.degree(level - 1);
    auto chunk_zero = [&](const Vec& v, std::size_t i) {
        for (std::size_t j = 0; j < sub; ++j)
            if (!v[i * sub + j].is_zero()) return false;
        return true;
    };
    Vec prod((2 * d - 1) * sub, Rat(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (chunk_zero(a, i)) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (chunk_zero(b, j)) continue;
            add_scaled_product(t, level - 1, prod, (i + j) * sub, a, i * sub, b, j * sub, sub, false);
        }
    }
    // reduce by the monic minimal polynomial, top chunk first
    Vec m;
    m.reserve((d + 1) * sub);
    for (const auto& c : lv.minpoly) m.insert(m.end(), c.c.begin(), c.c.end());
    for (std::size_t top = 2 * d - 2; top >= d; --top) {
        if (chunk_zero(prod, top)) continue;
        Vec lead(prod.begin() + top * sub, prod.begin() + (top + 1) * sub);
        for (std::size_t j = 0; j < d; ++j) {
            bool mz = true;
            for (std::size_t r = 0; r < sub; ++r)
                if (!m[j * sub + r].is_zero()) mz = false;
            if (mz) continue;
            add_scaled_product(t, level - 1, prod, (top - d + j) * sub, lead, 0, m, j * sub, sub, true);
        }
        std::fill(prod.begin() + top * sub, prod.begin() + (top + 1) * sub, Rat(0));
    }
    prod.resize(d * sub);
    return prod;
}

} // namespace

TowerPtr FieldTower::rationals() {
    static const TowerPtr q(new FieldTower());
    return q;
}

TowerPtr FieldTower::extend(const std::string& name, const Poly<TowerField>& minpoly, const Limits& limits) const {
    if (static_cast<int>(depth()) + 1 > limits.max_depth)
        fail(ErrorCode::TOWER_DEPTH, "tower depth would exceed " + std::to_string(limits.max_depth));
    if (minpoly.degree() < 1) fail(ErrorCode::INVALID_ARGUMENT, "minimal polynomial must have positive degree");
    if (degree() * minpoly.degree() > limits.max_degree)
        fail(ErrorCode::DEGREE_BOUND, "tower degree would exceed " + std::to_string(limits.max_degree));
    if (!(minpoly.field() == top())) fail(ErrorCode::DOMAIN_MISMATCH, "minimal polynomial not over the top level");
    if (!is_irreducible_over(minpoly, limits))
        fail(ErrorCode::NOT_IRREDUCIBLE, "minimal polynomial of " + name + " is reducible");
    return extend_unchecked(name, minpoly);
}

TowerPtr FieldTower::extend_unchecked(const std::string& name, const Poly<TowerField>& minpoly) const {
    Poly<TowerField> m = monic(minpoly);
    auto lv = std::make_shared<Level>();
    lv->name = name;
    lv->minpoly = m.coeffs();
    std::shared_ptr<FieldTower> t(new FieldTower(*this));
    t->levels_.push_back(std::move(lv));
    t->dims_.push_back(degree() * m.degree());
    return t;
}

TowerField FieldTower::field(std::size_t level) const {
    if (level > depth()) fail(ErrorCode::INVALID_ARGUMENT, "tower level out of range");
    return TowerField(shared_from_this(), level);
}

TowerField FieldTower::top() const { return field(depth()); }

TowerPtr FieldTower::prefix(std::size_t level) const {
    if (level > depth()) fail(ErrorCode::INVALID_ARGUMENT, "tower level out of range");
    if (level == depth()) return shared_from_this();
    std::shared_ptr<FieldTower> t(new FieldTower());
    t->levels_.assign(levels_.begin(), levels_.begin() + level);
    t->dims_.assign(dims_.begin(), dims_.begin() + level + 1);
    return t;
}

Poly<TowerField> FieldTower::minpoly(std::size_t i) const {
    return Poly<TowerField>(field(i - 1), level(i).minpoly);
}

std::vector<std::string> FieldTower::names() const {
    std::vector<std::string> out;
    for (const auto& l : levels_) out.push_back(l->name);
    return out;
}

bool FieldTower::same_prefix(const FieldTower& other, std::size_t upto) const {
    if (depth() < upto || other.depth() < upto) return false;
    for (std::size_t i = 0; i < upto; ++i) {
        if (levels_[i] == other.levels_[i]) continue;
        if (levels_[i]->name != other.levels_[i]->name || levels_[i]->minpoly != other.levels_[i]->minpoly)
            return false;
    }
    return true;
}

TowerField::TowerField(TowerPtr tower, std::size_t level) : tower_(std::move(tower)), level_(level) {
    if (level_ > tower_->depth()) fail(ErrorCode::INVALID_ARGUMENT, "tower level out of range");
}

int TowerField::degree() const { return tower_->degree(level_); }

TowerField TowerField::below() const { return TowerField(tower_, level_ - 1); }

bool operator==(const TowerField& a, const TowerField& b) {
    if (a.level_ != b.level_) return false;
    if (a.tower_ == b.tower_) return true;
    return a.tower_->same_prefix(*b.tower_, a.level_);
}

AlgElem TowerField::zero() const { return AlgElem{Vec(degree(), Rat(0))}; }

AlgElem TowerField::from_rat(const Rat& r) const {
    AlgElem e = zero();
    e.c[0] = r;
    return e;
}

AlgElem TowerField::generator(std::size_t i) const {
    if (i == 0 || i > level_) fail(ErrorCode::INVALID_ARGUMENT, "generator index out of range");
    AlgElem e = zero();
    const auto& lv = tower_->level(i);
    const int stride = tower_->degree(i - 1);
    if (lv.degree() == 1) {
        // alpha is the root of x + c, i.e. -c, an element of the level below
        AlgElem c = lv.minpoly[0];
        for (int r = 0; r < stride; ++r) e.c[r] = -c.c[r];
    } else {
        e.c[stride] = Rat(1);
    }
    return e;
}

AlgElem TowerField::embed(const AlgElem& lower) const {
    if (static_cast<int>(lower.c.size()) > degree()) fail(ErrorCode::DOMAIN_MISMATCH, "cannot embed from above");
    AlgElem e = zero();
    std::copy(lower.c.begin(), lower.c.end(), e.c.begin());
    return e;
}

AlgElem TowerField::add(const AlgElem& a, const AlgElem& b) const {
    AlgElem r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] += b.c[i];
    return r;
}

AlgElem TowerField::sub(const AlgElem& a, const AlgElem& b) const {
    AlgElem r = a;
    for (std::size_t i = 0; i < r.c.size(); ++i) r.c[i] -= b.c[i];
    return r;
}

AlgElem TowerField::neg(const AlgElem& a) const {
    AlgElem r = a;
    for (auto& x : r.c) x = -x;
    return r;
}

AlgElem TowerField::scale(const AlgElem& a, const Rat& s) const {
    AlgElem r = a;
    for (auto& x : r.c) x *= s;
    return r;
}

AlgElem TowerField::mul(const AlgElem& a, const AlgElem& b) const {
    return AlgElem{mul_at(*tower_, level_, a.c, b.c)};
}

AlgElem TowerField::inv(const AlgElem& a) const {
    if (is_zero(a)) fail(ErrorCode::DIVISION_BY_ZERO, "inverse of zero in " + describe());
    if (level_ == 0) return AlgElem{{a.c[0].inverse()}};
    TowerField lower = below();
    Poly<TowerField> pa(lower, split(a));
    auto [g, s, t] = xgcd(pa, tower_->minpoly(level_));
    (void)t;
    if (g.degree() != 0) fail(ErrorCode::DIVISION_BY_ZERO, "element is a zero divisor (reducible minimal polynomial)");
    std::vector<AlgElem> chunks = s.coeffs();
    chunks.resize(tower_->level_degree(level_), lower.zero());
    return join(chunks);
}

bool TowerField::is_zero(const AlgElem& a) const {
    return std::all_of(a.c.begin(), a.c.end(), [](const Rat& r) { return r.is_zero(); });
}

bool TowerField::is_rational(const AlgElem& a) const {
    return std::all_of(a.c.begin() + 1, a.c.end(), [](const Rat& r) { return r.is_zero(); });
}

bool TowerField::less(const AlgElem& a, const AlgElem& b) const {
    return std::lexicographical_compare(a.c.begin(), a.c.end(), b.c.begin(), b.c.end());
}

std::string TowerField::describe() const {
    std::string s = "Q";
    for (std::size_t i = 1; i <= level_; ++i) s += (i == 1 ? "(" : ",") + tower_->level(i).name;
    if (level_ > 0) s += ")";
    return s;
}

std::vector<AlgElem> TowerField::split(const AlgElem& a) const {
    if (level_ == 0) fail(ErrorCode::INVALID_ARGUMENT, "cannot split a rational");
    const int d = tower_->level_degree(level_);
    const int sub = tower_->degree(level_ - 1);
    std::vector<AlgElem> out;
    for (int i = 0; i < d; ++i) out.push_back(AlgElem{Vec(a.c.begin() + i * sub, a.c.begin() + (i + 1) * sub)});
    return out;
}

AlgElem TowerField::join(const std::vector<AlgElem>& chunks) const {
    AlgElem r;
    r.c.reserve(degree());
    for (const auto& ch : chunks) r.c.insert(r.c.end(), ch.c.begin(), ch.c.end());
    if (static_cast<int>(r.c.size()) != degree()) fail(ErrorCode::INVALID_ARGUMENT, "wrong number of chunks");
    return r;
}

Poly<TowerField> to_tower_poly(const Poly<RationalField>& f, const TowerField& k) {
    std::vector<AlgElem> v;
    for (const auto& c : f.coeffs()) v.push_back(k.from_rat(c));
    return Poly<TowerField>(k, std::move(v));
}

Poly<RationalField> to_rational_poly(const Poly<TowerField>& f) {
    std::vector<Rat> v;
    for (const auto& c : f.coeffs()) {
        if (!f.field().is_rational(c)) fail(ErrorCode::DOMAIN_MISMATCH, "polynomial has irrational coefficients");
        v.push_back(c.c[0]);
    }
    return Poly<RationalField>(RationalField{}, std::move(v));
}

Poly<TowerField> embed_poly(const Poly<TowerField>& f, const TowerField& upper) {
    std::vector<AlgElem> v;
    for (const auto& c : f.coeffs()) v.push_back(upper.embed(c));
    return Poly<TowerField>(upper, std::move(v));
}

} // namespace vlab
