#pragma once

#include <initializer_list>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "puiseux/rational.hpp"

namespace puiseux {

/// Exponent vector in Q^n. Compared lexicographically, which is the
/// canonical storage order of polynomial terms.
class ExpVec {
  public:
    ExpVec() = default;
    explicit ExpVec(std::size_t n) : e_(n) {}
    explicit ExpVec(std::vector<Rational> e) : e_(std::move(e)) {}
    ExpVec(std::initializer_list<Rational> e) : e_(e) {}

    std::size_t size() const { return e_.size(); }
    const Rational& operator[](std::size_t i) const { return e_[i]; }
    Rational& operator[](std::size_t i) { return e_[i]; }
    const std::vector<Rational>& entries() const { return e_; }

    bool is_zero() const;

    ExpVec operator+(const ExpVec& o) const;
    ExpVec operator-(const ExpVec& o) const;
    ExpVec operator-() const;
    ExpVec scaled(const Rational& c) const;

    /// Appends one coordinate (used to move between n and n+1 dimensional
    /// settings).
    ExpVec extended(const Rational& last) const;
    /// Drops the last coordinate.
    ExpVec truncated() const;

    friend bool operator==(const ExpVec& a, const ExpVec& b) { return a.e_ == b.e_; }
    friend bool operator!=(const ExpVec& a, const ExpVec& b) { return a.e_ != b.e_; }
    friend bool operator<(const ExpVec& a, const ExpVec& b);

    std::string str() const;

  private:
    std::vector<Rational> e_;
};

/// Finite formal sum of terms c * x^alpha with rational exponent vectors
/// alpha and rational coefficients. Zero coefficients are never stored.
class PuiseuxPoly {
  public:
    PuiseuxPoly() : arity_(0) {}
    explicit PuiseuxPoly(int arity) : arity_(arity) {}

    static PuiseuxPoly constant(int arity, const Rational& c);
    static PuiseuxPoly monomial(const ExpVec& alpha, const Rational& c);
    /// The variable x_i as a polynomial of the given arity.
    static PuiseuxPoly variable(int arity, int i);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    std::size_t term_count() const { return terms_.size(); }

    const std::map<ExpVec, Rational>& terms() const { return terms_; }
    std::vector<ExpVec> support() const;

    /// Coefficient of x^alpha (zero when absent).
    Rational coeff(const ExpVec& alpha) const;
    void set_coeff(const ExpVec& alpha, const Rational& c);
    void add_term(const ExpVec& alpha, const Rational& c);

    PuiseuxPoly operator-() const;
    PuiseuxPoly& operator+=(const PuiseuxPoly& o);
    PuiseuxPoly& operator-=(const PuiseuxPoly& o);
    friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
    friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
    friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b);

    PuiseuxPoly scaled(const Rational& c) const;
    PuiseuxPoly shifted(const ExpVec& alpha) const;  // multiply by x^alpha
    PuiseuxPoly pow(unsigned k) const;

    friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    /// Exact substitution of rational values for all variables. Exponents
    /// must be integers (negative allowed when the value is nonzero).
    Rational evaluate(const std::vector<Rational>& point) const;

    /// Reinterprets the polynomial with one extra trailing variable of
    /// exponent zero in every term.
    PuiseuxPoly with_extra_variable() const;

    /// Canonical text form: terms in descending lexicographic exponent
    /// order, reduced rational coefficients.
    std::string str(const std::vector<std::string>& vars) const;
    std::string str() const;  // variables named x1..xn

    /// Exponent-wise minimum over the support (the "corner" monomial).
    ExpVec min_exponents() const;

  private:
    void check_arity(const PuiseuxPoly& o) const;

    int arity_;
    std::map<ExpVec, Rational> terms_;
};

}  // namespace puiseux
