#pragma once

#include <optional>
#include <string>

#include "puiseux/encoding.hpp"

namespace puiseux {

enum class Verdict { Equal, NotEqual, Unknown };

/// Machine-checkable evidence behind an Equal verdict: a common order
/// compatible with both support bounds plus the shared branch both
/// encodings were matched to. The sum-cone block is attached whenever the
/// bounds' cones have a line-free sum.
struct EqualityCertificate {
    enum class OrderSource { first_order, second_order, interior_of_sum };
    OrderSource source = OrderSource::interior_of_sum;
    OrderSpec common_order;
    Cone cone1, cone2;
    bool sum_line_free = false;
    Cone sum_cone;
    PuiseuxPoly shared_truncation;
};

struct EqualityVerdict {
    Verdict value = Verdict::Unknown;
    // NotEqual: the first exponent whose certain coefficients differ.
    std::optional<ExpVec> witness_exponent;
    Rational witness_coeff1, witness_coeff2;
    std::optional<EqualityCertificate> certificate;
    std::string explanation;

    bool equal() const { return value == Verdict::Equal; }
};

/// Decides whether two encodings represent the same series; sound
/// three-valued semi-decision with `budget` refinement rounds.
EqualityVerdict equal(const SeriesEncoding& a, const SeriesEncoding& b, int budget = 8);

/// Coefficient of x^alpha in the encoded series when the truncation and
/// bound determine it; nullopt when alpha lies in the uncertain region.
std::optional<Rational> certain_coeff(const SeriesEncoding& enc, const ExpVec& alpha);

}  // namespace puiseux
