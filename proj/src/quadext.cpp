#include "puiseux/quadext.hpp"

#include <cmath>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

bool is_square_free(long d) {
    for (long p = 2; p * p <= d; ++p) {
        if (d % (p * p) == 0) return false;
    }
    return true;
}

}  // namespace

QuadExt::QuadExt(Rational a, Rational b, long d) : a_(std::move(a)), b_(std::move(b)), d_(d) {
    if (b_.is_zero()) {
        d_ = 0;
        return;
    }
    if (d_ <= 1 || !is_square_free(d_))
        throw MismatchedRadicand("radicand must be a square-free integer > 1, got " +
                                 std::to_string(d_));
}

long QuadExt::merge_radicand(const QuadExt& x, const QuadExt& y) {
    if (x.b_.is_zero()) return y.d_;
    if (y.b_.is_zero()) return x.d_;
    if (x.d_ != y.d_)
        throw MismatchedRadicand("cannot combine sqrt(" + std::to_string(x.d_) + ") with sqrt(" +
                                 std::to_string(y.d_) + ")");
    return x.d_;
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
    d_ = merge_radicand(*this, o);
    a_ += o.a_;
    b_ += o.b_;
    if (b_.is_zero()) d_ = 0;
    return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
    long d = merge_radicand(*this, o);
    Rational rad(d);
    Rational a = a_ * o.a_ + rad * b_ * o.b_;
    Rational b = a_ * o.b_ + b_ * o.a_;
    a_ = a;
    b_ = b;
    d_ = b_.is_zero() ? 0 : d;
    return *this;
}

int QuadExt::sign() const {
    int sa = a_.sign(), sb = b_.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against d*b^2, the larger magnitude wins.
    Rational lhs = a_ * a_;
    Rational rhs = Rational(d_) * b_ * b_;
    if (lhs == rhs) return 0;
    return lhs > rhs ? sa : sb;
}

std::string QuadExt::str() const {
    if (b_.is_zero()) return a_.str();
    std::string root = b_.str() + "*sqrt(" + std::to_string(d_) + ")";
    if (a_.is_zero()) return root;
    if (b_.sign() > 0) return a_.str() + "+" + root;
    return a_.str() + root;  // b's own minus sign separates the terms
}

double QuadExt::to_double() const {
    if (b_.is_zero()) return a_.to_double();
    return a_.to_double() + b_.to_double() * std::sqrt(static_cast<double>(d_));
}

int quad_sign(const QuadExt& v) { return v.sign(); }

}  // namespace puiseux
