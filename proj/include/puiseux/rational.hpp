#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>

namespace puiseux {

using Integer = mpz_class;

/// Exact rational number. Always stored canonically: gcd(|num|, den) = 1,
/// den > 0. Backed by GMP.
class Rational {
  public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}  // NOLINT: implicit by design
    Rational(long n) : v_(static_cast<signed long>(n)) {}
    Rational(const Integer& n) : v_(n) {}
    Rational(const Integer& num, const Integer& den);
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    /// Parses "p", "-p", or "p/q" (q > 0 after normalization).
    static Rational parse(const std::string& text);

    const Integer& num() const { return v_.get_num(); }
    const Integer& den() const { return v_.get_den(); }
    const mpq_class& raw() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    /// "p" for integers, "p/q" otherwise.
    std::string str() const;

    double to_double() const { return v_.get_d(); }

    /// Largest integer <= value.
    Integer floor() const;

  private:
    mpq_class v_;
};

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Least common multiple of the denominators of a range of rationals.
template <typename It>
Integer common_denominator(It first, It last) {
    Integer m = 1;
    for (; first != last; ++first) m = lcm(m, first->den());
    return m;
}

}  // namespace puiseux
