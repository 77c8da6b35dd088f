#pragma once

#include <optional>
#include <string>
#include <vector>

#include "puiseux/encoding.hpp"
#include "puiseux/equality.hpp"

namespace puiseux {

/// Annihilator of sums of roots: the square-free primitive part of
/// Res_u(p1(x,u), p2(x, y-u)).
YPoly annihilator_sum(const YPoly& p1, const YPoly& p2);

/// Annihilator of products of roots: the square-free primitive part of
/// Res_u(p1(x,u), u^deg(p2) p2(x, y/u)), with a zero root of p2 split off
/// first.
YPoly annihilator_product(const YPoly& p1, const YPoly& p2);

/// Annihilator of reciprocals: y^deg p(x, 1/y), normalized. Throws
/// ZeroRoot when y divides p.
YPoly annihilator_reciprocal(const YPoly& p);

enum class CombineOp { add, mul, reciprocal };

/// Why a candidate root of the combined annihilator was ruled out.
struct CandidateRejection {
    PuiseuxPoly truncation;   // the candidate's distinguishing prefix
    OrderSpec order;          // the order it was expanded under
    ExpVec at;                // exponent where certain coefficients differ
    Rational combined_coeff;  // the sum/product's coefficient there
    Rational candidate_coeff;
    bool support_miss = false;  // certainly-zero by the candidate's bound
    std::string note;
};

struct ArithmeticResult {
    enum class Status { Combined, NotAlgebraicEvidence, Unknown } status = Status::Unknown;
    std::optional<SeriesEncoding> encoding;
    std::vector<CandidateRejection> rejections;
    std::string diagnostic;
};

/// Combines two encodings under the caller-supplied order W. When both
/// cone bounds are compatible with W the unique matching root of the
/// combined annihilator is returned; otherwise the routine attempts to
/// reject every candidate root, yielding NotAlgebraicEvidence or Unknown.
ArithmeticResult combine(const SeriesEncoding& enc1, const SeriesEncoding& enc2, CombineOp op,
                         const OrderSpec& w, int budget = 8);

/// Encoding of -phi (same annihilator family, negated truncation).
SeriesEncoding negate_encoding(const SeriesEncoding& enc);

}  // namespace puiseux
