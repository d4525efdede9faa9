#include "vlab/io/polytext.hpp"

#include <cctype>

#include "vlab/nf/numberfields.hpp"

namespace vlab {

namespace {

using KPoly = Poly<TowerField>;

constexpr unsigned long kMaxExponent = 4096;

class Parser {
public:
    Parser(std::string_view src, const TowerField& k, const std::string& var, bool allow_var)
        : src_(src), k_(k), var_(var), allow_var_(allow_var) {}

    KPoly run() {
        skip();
        if (pos_ == src_.size()) throw ParseError(pos_, "empty expression");
        KPoly r = expr();
        skip();
        if (pos_ != src_.size()) throw ParseError(pos_, std::string("unexpected '") + src_[pos_] + "'");
        return r;
    }

private:
    void skip() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }
    bool eat(char c) {
        skip();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    KPoly expr() {
        KPoly r = term();
        while (true) {
            if (eat('+'))
                r = r + term();
            else if (eat('-'))
                r = r - term();
            else
                return r;
        }
    }

    KPoly term() {
        KPoly r = unary();
        while (true) {
            skip();
            const std::size_t at = pos_;
            if (eat('*')) {
                r = r * unary();
            } else if (eat('/')) {
                KPoly d = unary();
                if (d.degree() != 0) throw ParseError(at, d.is_zero() ? "division by zero" : "division by a non-constant");
                r = r.scaled(k_.inv(d.lc()));
            } else {
                return r;
            }
        }
    }

    KPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    KPoly power() {
        KPoly base = atom();
        if (!eat('^')) return base;
        skip();
        const std::size_t at = pos_;
        std::string digits;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits.push_back(src_[pos_++]);
        if (digits.empty()) throw ParseError(at, "expected a nonnegative integer exponent");
        if (digits.size() > 6 || std::stoul(digits) > kMaxExponent) throw ParseError(at, "exponent too large");
        return pow(base, std::stoul(digits));
    }

    KPoly atom() {
        skip();
        const std::size_t at = pos_;
        if (pos_ == src_.size()) throw ParseError(at, "unexpected end of input");
        const char c = src_[pos_];
        if (c == '(') {
            ++pos_;
            KPoly r = expr();
            if (!eat(')')) throw ParseError(pos_, "expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) digits.push_back(src_[pos_++]);
            return KPoly::constant(k_, k_.from_rat(Rat(Int(digits))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string id;
            while (pos_ < src_.size() &&
                   (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '_'))
                id.push_back(src_[pos_++]);
            if (allow_var_ && id == var_) return KPoly::x(k_);
            for (std::size_t i = 1; i <= k_.level(); ++i)
                if (k_.tower()->level(i).name == id) return KPoly::constant(k_, k_.generator(i));
            throw ParseError(at, "unknown variable '" + id + "'");
        }
        throw ParseError(at, std::string("unexpected '") + c + "'");
    }

    std::string_view src_;
    const TowerField& k_;
    const std::string& var_;
    bool allow_var_;
    std::size_t pos_ = 0;
};

std::string monomial_name(const TowerField& k, std::size_t index) {
    std::string out;
    // mixed radix digits, lowest level least significant; print highest level first
    std::vector<std::pair<std::string, std::size_t>> parts;
    for (std::size_t i = 1; i <= k.level(); ++i) {
        const std::size_t d = k.tower()->level_degree(i);
        const std::size_t e = index % d;
        index /= d;
        if (e > 0) parts.emplace_back(k.tower()->level(i).name, e);
    }
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += "*";
        out += parts[i].first;
        if (parts[i].second > 1) out += "^" + std::to_string(parts[i].second);
    }
    return out;
}

// sum of signed terms "c*m" with the leading sign separated
std::string join_terms(const std::vector<std::pair<Rat, std::string>>& terms) {
    if (terms.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
        const auto& [c, m] = terms[i];
        const bool neg = c.sign() < 0;
        const Rat a = c.abs();
        if (i == 0)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (m.empty())
            out += a.str();
        else if (a == Rat(1))
            out += m;
        else
            out += a.str() + "*" + m;
    }
    return out;
}

} // namespace

KPoly parse_poly(std::string_view src, const TowerField& k, const std::string& var) {
    return Parser(src, k, var, true).run();
}

Poly<RationalField> parse_qpoly(std::string_view src, const std::string& var) {
    return to_rational_poly(parse_poly(src, FieldTower::rationals()->top(), var));
}

AlgElem parse_element(std::string_view src, const TowerField& k) {
    static const std::string none;
    KPoly p = Parser(src, k, none, false).run();
    return p.is_zero() ? k.zero() : p.lc();
}

std::string print_element(const AlgElem& a, const TowerField& k) {
    std::vector<std::pair<Rat, std::string>> terms;
    for (std::size_t i = a.c.size(); i-- > 0;)
        if (!a.c[i].is_zero()) terms.emplace_back(a.c[i], monomial_name(k, i));
    return join_terms(terms);
}

std::string print_poly(const KPoly& f, const std::string& var) {
    const TowerField& k = f.field();
    if (f.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (int i = f.degree(); i >= 0; --i) {
        const AlgElem& c = f.coeffs()[i];
        if (k.is_zero(c)) continue;
        std::string xm = i == 0 ? "" : i == 1 ? var : var + "^" + std::to_string(i);
        std::size_t nz = 0;
        for (const auto& r : c.c) nz += !r.is_zero();
        if (k.is_rational(c) || nz == 1) {
            // single monomial coefficient: fold its sign into the joining operator
            std::size_t idx = 0;
            while (c.c[idx].is_zero()) ++idx;
            Rat q = c.c[idx];
            std::string m = monomial_name(k, idx);
            std::string body;
            const Rat a = q.abs();
            if (m.empty() && xm.empty())
                body = a.str();
            else if (a == Rat(1))
                body = m.empty() ? xm : xm.empty() ? m : m + "*" + xm;
            else
                body = a.str() + "*" + (m.empty() ? xm : xm.empty() ? m : m + "*" + xm);
            if (first)
                out += (q.sign() < 0 ? "-" : "") + body;
            else
                out += (q.sign() < 0 ? " - " : " + ") + body;
        } else {
            std::string body = "(" + print_element(c, k) + ")" + (xm.empty() ? "" : "*" + xm);
            out += (first ? "" : " + ") + body;
        }
        first = false;
    }
    return out;
}

std::string print_qpoly(const Poly<RationalField>& f, const std::string& var) {
    return print_poly(to_tower_poly(f, FieldTower::rationals()->top()), var);
}

TowerPtr build_tower(const std::vector<LevelSpec>& levels, const Limits& limits) {
    TowerPtr t = FieldTower::rationals();
    for (const auto& lv : levels) {
        if (lv.name.empty() || lv.name == "x") fail(ErrorCode::INVALID_ARGUMENT, "invalid generator name '" + lv.name + "'");
        for (const auto& n : t->names())
            if (n == lv.name) fail(ErrorCode::INVALID_ARGUMENT, "duplicate generator name '" + lv.name + "'");
        t = t->extend(lv.name, parse_poly(lv.minpoly, t->top()), limits);
    }
    return t;
}

std::vector<LevelSpec> describe_tower(const TowerPtr& tower) {
    std::vector<LevelSpec> out;
    for (std::size_t i = 1; i <= tower->depth(); ++i) out.push_back({tower->level(i).name, print_poly(tower->minpoly(i))});
    return out;
}

} // namespace vlab
