#include "vlab/arith/rat.hpp"

#include <cctype>

#include "vlab/error.hpp"

namespace vlab {

Rat::Rat(const Int& num, const Int& den) {
    if (den == 0) fail(ErrorCode::DIVISION_BY_ZERO, "rational with zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rat Rat::parse(std::string_view text) {
    auto bad = [&] { fail(ErrorCode::INVALID_ARGUMENT, "malformed rational '" + std::string(text) + "'"); };
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) bad();
    auto slash = s.find('/');
    auto is_int = [](const std::string& t) {
        std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    std::string n = s.substr(0, slash);
    std::string d = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!is_int(n) || !is_int(d) || d[0] == '-' || d[0] == '+') bad();
    if (n[0] == '+') n.erase(0, 1);
    return Rat(Int(n), Int(d));
}

Rat Rat::inverse() const {
    if (is_zero()) fail(ErrorCode::DIVISION_BY_ZERO, "inverse of zero");
    return Rat(mpq_class(1 / q_));
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) fail(ErrorCode::DIVISION_BY_ZERO, "division by zero");
    q_ /= o.q_;
    return *this;
}

long vp_rat(const Rat& x, const Int& p) {
    if (x.is_zero()) fail(ErrorCode::INVALID_ARGUMENT, "valuation of zero is infinite");
    return vp_int(x.num(), p) - vp_int(x.den(), p);
}

Rat pow(const Rat& base, long exp) {
    if (exp < 0) return pow(base.inverse(), -exp);
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exp));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exp));
    return Rat(n, d);
}

} // namespace vlab
