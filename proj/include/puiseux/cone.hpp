#pragma once

#include <optional>
#include <string>
#include <vector>

#include "puiseux/orderspec.hpp"
#include "puiseux/puiseux_poly.hpp"

namespace puiseux {

/// Finitely generated convex cone in Q^n. Generators are kept canonical:
/// primitive integer direction vectors, redundant ones removed, sorted.
class Cone {
  public:
    Cone() = default;
    explicit Cone(std::size_t dim) : dim_(dim) {}
    Cone(std::size_t dim, std::vector<ExpVec> generators);

    static Cone zero(std::size_t dim) { return Cone(dim); }
    static Cone from_points(std::size_t dim, const std::vector<ExpVec>& points);

    std::size_t dim() const { return dim_; }
    const std::vector<ExpVec>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }

    bool contains(const ExpVec& v) const;
    bool is_line_free() const;

    Cone sum(const Cone& other) const;

    friend bool operator==(const Cone& a, const Cone& b) {
        return a.dim_ == b.dim_ && a.gens_ == b.gens_;
    }

    std::string str() const;

  private:
    std::size_t dim_ = 0;
    std::vector<ExpVec> gens_;
};

/// True iff every generator of c is negative or zero under w, which makes
/// every nonzero element of c negative: w lies in the dual cone.
bool dual_contains(const Cone& c, const OrderSpec& w);

/// An order whose first row is a rational vector strictly negative on all
/// generators of c, followed by unit tie-break rows. Throws NotLineFree
/// when c contains a line (the dual has empty interior).
OrderSpec interior_order(const Cone& c);

/// Exact feasibility of A x <= b over Q by Fourier-Motzkin elimination,
/// returning a witness point when feasible.
std::optional<std::vector<Rational>> fm_solve(const std::vector<std::vector<Rational>>& a,
                                              const std::vector<Rational>& b);

/// Scales v to a primitive integer vector preserving direction; zero stays
/// zero.
ExpVec primitive_direction(const ExpVec& v);

}  // namespace puiseux
