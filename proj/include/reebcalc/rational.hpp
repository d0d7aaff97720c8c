#pragma once

#include <gmpxx.h>

#include <compare>
#include <iosfwd>
#include <string>

namespace reebcalc {

// Exact rational number, always in lowest terms with positive denominator.
// All arithmetic is exact; there is no floating-point anywhere in the core.
// Thin wrapper over GMP's mpq so that the domain surface (floor, nearest
// integer, "p/q" parsing) is ours and testable in isolation.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}  // NOLINT(implicit)
    Rational(long long num, long long den);
    Rational(const mpz_class& num, const mpz_class& den);

    // Accepts "p", "-p", "p/q" with arbitrary-precision integers. Rejects
    // decimal strings ("2.5") — see parse_decimal for the opt-in path.
    static Rational parse(const std::string& text);
    // Accepts everything parse() does plus decimal literals, converted
    // exactly (e.g. "2.5" -> 5/2).
    static Rational parse_decimal(const std::string& text);

    const mpz_class numerator() const { return v_.get_num(); }
    const mpz_class denominator() const { return v_.get_den(); }

    bool is_integer() const { return v_.get_den() == 1; }
    bool is_zero() const { return v_ == 0; }
    int sign() const { return sgn(v_); }

    // Largest integer <= *this.
    mpz_class floor() const;
    // Smallest integer >= *this.
    mpz_class ceil() const;
    // Integer nearest to *this; exact ties (fraction 1/2) round down, so the
    // result is deterministic and, at a tie, the smaller candidate.
    mpz_class nearest_tie_low() const;

    Rational abs() const;
    Rational reciprocal() const;

    // "p" when the denominator is 1, otherwise "p/q".
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
    friend Rational operator/(const Rational& a, const Rational& b);
    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    mpq_class v_;
};

Rational gcd(const Rational& a, const Rational& b);
// Least positive rational L with L/a and L/b both integral ("rational lcm").
Rational lcm(const Rational& a, const Rational& b);

}  // namespace reebcalc
