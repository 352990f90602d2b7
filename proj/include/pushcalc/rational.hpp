#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pushcalc {

using Integer = mpz_class;

/// Exact rational scalar over arbitrary-precision integers.
///
/// Always stored in lowest terms with positive denominator; every operation
/// is exact. This is the coefficient field for all rings in the engine.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(static_cast<long>(n)) {}
    explicit Rational(const Integer& n) : q_(n) {}

    Rational(const Integer& num, const Integer& den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    const Integer num() const { return q_.get_num(); }
    const Integer den() const { return q_.get_den(); }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    int sign() const { return sgn(q_); }

    Rational operator-() const { return Rational(mpq_class(-q_)); }
    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// "p/q", with "/q" omitted when the denominator is 1. Round-trips exactly
    /// for integers of any size.
    std::string str() const { return q_.get_str(); }

    /// Parses "p" or "p/q". Accepts ASCII '-' and U+2212 for the minus sign.
    static Rational parse(const std::string& text);

private:
    explicit Rational(mpq_class q) : q_(std::move(q)) {}
    mpq_class q_;
};

/// n! for n >= 0.
Integer factorial(unsigned long n);

/// Generalized binomial coefficient with integer upper index:
/// 0 for k < 0, otherwise n(n-1)...(n-k+1)/k!, an exact integer for every
/// integer n (negative upper indices included).
Integer generalized_binomial(long long n, long long k);

/// (-1)^e for any integer e, by parity.
inline long pow_sign(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace pushcalc
