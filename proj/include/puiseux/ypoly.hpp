#pragma once

#include <string>
#include <vector>

#include "puiseux/puiseux_poly.hpp"

namespace puiseux {

/// Polynomial in a distinguished unknown y whose coefficients are Puiseux
/// polynomials in n further variables. coeffs()[j] is the coefficient of
/// y^j; the leading coefficient is nonzero.
class YPoly {
  public:
    YPoly() : arity_(0) {}
    explicit YPoly(int arity) : arity_(arity) {}
    YPoly(int arity, std::vector<PuiseuxPoly> coeffs);

    static YPoly zero(int arity) { return YPoly(arity); }
    static YPoly constant(int arity, const PuiseuxPoly& c);
    /// The unknown itself.
    static YPoly y(int arity);

    int arity() const { return arity_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree in y; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<PuiseuxPoly>& coeffs() const { return coeffs_; }
    PuiseuxPoly coeff(int j) const;
    const PuiseuxPoly& leading() const;

    bool is_constant_in_y() const { return degree() <= 0; }

    YPoly operator-() const;
    YPoly& operator+=(const YPoly& o);
    YPoly& operator-=(const YPoly& o);
    friend YPoly operator+(YPoly a, const YPoly& b) { return a += b; }
    friend YPoly operator-(YPoly a, const YPoly& b) { return a -= b; }
    friend YPoly operator*(const YPoly& a, const YPoly& b);

    YPoly scaled(const Rational& c) const;
    YPoly scaled_poly(const PuiseuxPoly& c) const;

    friend bool operator==(const YPoly& a, const YPoly& b) {
        return a.arity_ == b.arity_ && a.coeffs_ == b.coeffs_;
    }

    YPoly derivative_y() const;

    /// p(x, q + y), expanded exactly.
    YPoly substitute_shift(const PuiseuxPoly& q) const;
    /// p(x, q).
    PuiseuxPoly evaluate_y(const PuiseuxPoly& q) const;
    /// y^deg * p(x, 1/y): coefficient reversal.
    YPoly reversed() const;

    /// View as a Puiseux polynomial in n+1 variables, the last slot holding
    /// the y-degree.
    PuiseuxPoly flatten() const;
    /// Inverse of flatten(): interpret the last slot of f as the y-degree.
    /// Exponents in that slot must be non-negative integers.
    static YPoly from_flat(const PuiseuxPoly& f);

    std::string str(const std::vector<std::string>& vars, const std::string& unknown) const;

  private:
    void trim();
    void check_arity(const YPoly& o) const;

    int arity_;
    std::vector<PuiseuxPoly> coeffs_;
};

YPoly substitute_shift(const YPoly& p, const PuiseuxPoly& q);
PuiseuxPoly evaluate_y(const YPoly& p, const PuiseuxPoly& q);

}  // namespace puiseux
