#pragma once

#include <string>
#include <utility>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Dense univariate polynomial over Q; coeffs[i] is the coefficient of t^i.
class UniPoly {
  public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly constant(const Rational& c) { return UniPoly({c}); }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const;
    const Rational& leading() const { return c_.back(); }

    Rational operator()(const Rational& t) const;

    UniPoly operator-() const;
    friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    UniPoly scaled(const Rational& k) const;
    UniPoly derivative() const;
    /// Quotient and remainder over the field Q.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;
    /// Monic greatest common divisor.
    static UniPoly gcd(UniPoly a, UniPoly b);

    std::string str(const std::string& var = "t") const;

  private:
    void trim();
    std::vector<Rational> c_;
};

struct RootReport {
    std::vector<std::pair<Rational, int>> roots;  // (root, multiplicity)
    UniPoly cofactor;                             // nonconstant iff roots are missing
};

/// All rational roots of f with multiplicities, plus the rational-root-free
/// cofactor when f does not split over Q.
RootReport find_rational_roots(const UniPoly& f);

/// As find_rational_roots, but throws NonRationalRoots when the cofactor is
/// nonconstant.
std::vector<std::pair<Rational, int>> rational_roots(const UniPoly& f);

/// Prime factorization helper used by the rational root search.
std::vector<std::pair<Integer, unsigned>> factor_integer(Integer n);

}  // namespace puiseux
