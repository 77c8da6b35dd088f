#pragma once

#include <string>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Element a + b*sqrt(d) of the real quadratic field Q(sqrt(d)).
/// d is a square-free integer > 1; pure rationals carry b = 0 and are
/// compatible with any radicand.
class QuadExt {
  public:
    QuadExt() : a_(0), b_(0), d_(0) {}
    QuadExt(Rational a) : a_(std::move(a)), b_(0), d_(0) {}  // NOLINT
    QuadExt(Rational a, Rational b, long d);

    static QuadExt sqrt_of(long d) { return QuadExt(0, 1, d); }

    const Rational& rational_part() const { return a_; }
    const Rational& radical_part() const { return b_; }
    /// 0 when the value is purely rational.
    long radicand() const { return d_; }

    bool is_rational() const { return b_.is_zero(); }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }

    /// Exact sign of a + b*sqrt(d): -1, 0 or +1.
    int sign() const;

    QuadExt operator-() const { return QuadExt(-a_, -b_, d_); }
    QuadExt& operator+=(const QuadExt& o);
    QuadExt& operator-=(const QuadExt& o) { return *this += -o; }
    QuadExt& operator*=(const QuadExt& o);

    friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
    friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
    friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }

    friend bool operator==(const QuadExt& x, const QuadExt& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_.is_zero() || x.d_ == y.d_);
    }

    /// "a", "b*sqrt(d)" or "a+b*sqrt(d)".
    std::string str() const;

    double to_double() const;

  private:
    static long merge_radicand(const QuadExt& x, const QuadExt& y);

    Rational a_, b_;
    long d_;
};

int quad_sign(const QuadExt& v);

}  // namespace puiseux
