#pragma once

#include <optional>

#include "puiseux/puiseux_poly.hpp"
#include "puiseux/ypoly.hpp"

namespace puiseux {

/// Exact division f / g; nullopt when g does not divide f. Works for
/// arbitrary rational (Puiseux) exponents; monomials are units here, only
/// the polynomial structure can obstruct divisibility.
std::optional<PuiseuxPoly> divide_exact(const PuiseuxPoly& f, const PuiseuxPoly& g);

/// Greatest common divisor in the Puiseux polynomial ring, canonical up to
/// the monomial-unit ambiguity: the result's exponents are the pointwise
/// minima of the inputs' monomial parts plus a primitive polynomial part
/// with positive lexicographically-leading coefficient.
PuiseuxPoly gcd(const PuiseuxPoly& f, const PuiseuxPoly& g);

/// Content of p with respect to y: gcd of its coefficients, sign-normalized
/// so that the lexicographically smallest term is positive.
PuiseuxPoly content(const YPoly& p);

/// p divided by its content. Returns p itself when the content is constant.
YPoly primitive_part(const YPoly& p);

/// Product of the distinct irreducible factors of p (all variables,
/// including y). Returns p itself when p is already square-free.
YPoly squarefree_part(const YPoly& p);

/// True when gcd(p, dp/dy) is constant in y, i.e. p has no repeated factor
/// involving y.
bool squarefree_in_y(const YPoly& p);

/// gcd of two YPolys as polynomials in all n+1 variables.
YPoly gcd(const YPoly& f, const YPoly& g);

/// Rescales by a rational unit so all coefficients are integers with no
/// common factor and the leading y-coefficient is lex-positive.
YPoly scale_to_integer_primitive(const YPoly& p);

/// Resultant of f and g with respect to y, via the subresultant PRS with
/// exact coefficient divisions.
PuiseuxPoly resultant_y(const YPoly& f, const YPoly& g);

/// Partial derivative with respect to variable slot v.
PuiseuxPoly derivative(const PuiseuxPoly& f, int v);

}  // namespace puiseux
