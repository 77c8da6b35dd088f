#pragma once

#include <string>
#include <vector>

#include "puiseux/expand.hpp"
#include "puiseux/orderspec.hpp"
#include "puiseux/ypoly.hpp"

namespace puiseux {

/// Finite encoding of an algebraic series: a square-free primitive
/// annihilator with integer coefficients, a total order, and the leading
/// truncation that pins down exactly one series root, together with the
/// support bound produced by the expansion.
struct SeriesEncoding {
    YPoly annihilator;
    OrderSpec order;
    PuiseuxPoly truncation;
    ConeBound bound;
    std::vector<std::string> vars;
    std::string unknown = "y";

    bool is_zero_series() const { return truncation.is_zero(); }

    friend bool operator==(const SeriesEncoding& a, const SeriesEncoding& b) {
        return a.annihilator == b.annihilator && a.order == b.order &&
               a.truncation == b.truncation && a.bound == b.bound && a.vars == b.vars &&
               a.unknown == b.unknown;
    }
};

/// Normalizes p (square-free, primitive, integer coefficients, positive
/// leading coefficient) as stored in encodings.
YPoly normalize_annihilator(const YPoly& p);

/// Encodings of all series roots spawned by the admissible edge e of NP(p)
/// under w, with at least k truncation terms each. The edge refers to the
/// Newton polytope of p as given; the stored annihilator is normalized and
/// the expansion runs on it.
std::vector<SeriesEncoding> encode(const YPoly& p, const Edge& e, const OrderSpec& w, int k,
                                   std::vector<std::string> vars = {},
                                   std::string unknown = "y");

/// Same series, truncation extended to at least k terms, fresh bound.
SeriesEncoding refine(const SeriesEncoding& enc, int k, int budget = 64);

/// Structural and semantic validity: normalized annihilator, total order,
/// and exactly one expansion branch extending the truncation.
bool validate(const SeriesEncoding& enc);

/// The canonical encoding of the zero series (annihilator y).
SeriesEncoding zero_encoding(std::size_t n, const OrderSpec& w,
                             std::vector<std::string> vars = {}, std::string unknown = "y");

std::string to_json(const SeriesEncoding& enc, int indent = 2);
SeriesEncoding encoding_from_json(const std::string& text);

}  // namespace puiseux
