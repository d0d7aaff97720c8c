#include "reebcalc/rational.hpp"

#include <cctype>
#include <ostream>

#include "reebcalc/errors.hpp"

namespace reebcalc {

namespace {

bool is_integer_literal(const std::string& s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

// mpz_set_str rejects a leading '+'
std::string strip_plus(const std::string& s) {
    return (!s.empty() && s[0] == '+') ? s.substr(1) : s;
}

}  // namespace

Rational::Rational(long long num, long long den)
    : Rational(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))) {}

Rational::Rational(const mpz_class& num, const mpz_class& den) : v_(0) {
    if (den == 0) throw InvariantError("rational with zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    v_ = q;
}

Rational Rational::parse(const std::string& text) {
    if (text.find('.') != std::string::npos ||
        text.find('e') != std::string::npos || text.find('E') != std::string::npos)
        throw ParseError("decimal literal '" + text +
                         "' rejected: rationals must be exact \"p\" or \"p/q\" "
                         "(pass a decimal tolerance to opt in)");
    auto slash = text.find('/');
    std::string num = slash == std::string::npos ? text : text.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den))
        throw ParseError("malformed rational literal '" + text + "'");
    mpz_class n(strip_plus(num)), d(strip_plus(den));
    if (d == 0) throw ParseError("zero denominator in '" + text + "'");
    return Rational(n, d);
}

Rational Rational::parse_decimal(const std::string& text) {
    auto dot = text.find('.');
    if (dot == std::string::npos) return parse(text);
    std::string head = text.substr(0, dot);
    std::string tail = text.substr(dot + 1);
    if (head.empty() || head == "-" || head == "+") head += "0";
    if (!is_integer_literal(head) || tail.empty() || !is_integer_literal(tail) ||
        tail[0] == '-' || tail[0] == '+')
        throw ParseError("malformed decimal literal '" + text + "'");
    bool negative = head[0] == '-';
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, tail.size());
    mpz_class whole(strip_plus(head));
    mpz_class frac(tail);
    mpz_class num = whole * scale + (negative ? -frac : frac);
    return Rational(num, scale);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw InvariantError("division by zero rational");
    return Rational(mpq_class(a.v_ / b.v_));
}

mpz_class Rational::floor() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

mpz_class Rational::ceil() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num_mpz_t(), v_.get_den_mpz_t());
    return q;
}

mpz_class Rational::nearest_tie_low() const {
    // floor((2n + d) / 2d), stepping back when the tie is exact.
    mpz_class num2 = 2 * numerator() + denominator();
    mpz_class den2 = 2 * denominator();
    mpz_class q, r;
    mpz_fdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num2.get_mpz_t(), den2.get_mpz_t());
    if (r == 0) q -= 1;
    return q;
}

Rational Rational::abs() const {
    return sign() < 0 ? -*this : *this;
}

Rational Rational::reciprocal() const {
    if (v_ == 0) throw InvariantError("reciprocal of zero");
    return Rational(denominator(), numerator());
}

std::string Rational::str() const {
    if (is_integer()) return numerator().get_str();
    return numerator().get_str() + "/" + denominator().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

Rational gcd(const Rational& a, const Rational& b) {
    mpz_class num, den;
    mpz_gcd(num.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_lcm(den.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(num, den);
}

Rational lcm(const Rational& a, const Rational& b) {
    if (a.is_zero() || b.is_zero()) throw InvariantError("lcm of zero rational");
    mpz_class num, den;
    mpz_lcm(num.get_mpz_t(), a.numerator().get_mpz_t(), b.numerator().get_mpz_t());
    mpz_gcd(den.get_mpz_t(), a.denominator().get_mpz_t(), b.denominator().get_mpz_t());
    return Rational(num, den);
}

}  // namespace reebcalc
