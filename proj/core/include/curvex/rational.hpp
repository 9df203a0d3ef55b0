#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

namespace curvex {

using BigInt = mpz_class;

/// BigInt from a 64-bit integer (the gmpxx constructors stop at long).
inline BigInt to_bigint(long long v) { return BigInt(static_cast<long>(v)); }

/// n! as a big integer.
BigInt factorial(unsigned long n);

/// Exact rational number. Always stored reduced (gcd(num, den) = 1) with a
/// positive denominator; every arithmetic result is canonical again.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long value) : v_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(const BigInt& value) : v_(value) {}
    Rational(const BigInt& num, const BigInt& den);
    Rational(long num, long den);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }

    /// Renders as "p/q", or just "p" when the value is an integer.
    std::string str() const;

    double to_double() const { return v_.get_d(); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) != 0; }
    friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

private:
    explicit Rational(mpq_class q) : v_(std::move(q)) {}

    mpq_class v_;
};

}  // namespace curvex
