#pragma once

#include <string>
#include <vector>

#include "puiseux/cone.hpp"
#include "puiseux/orderspec.hpp"
#include "puiseux/polytope.hpp"
#include "puiseux/unipoly.hpp"
#include "puiseux/ypoly.hpp"

namespace puiseux {

/// Certificate supp(phi) <= {exceptional} u (anchor + cone).
struct ConeBound {
    std::vector<ExpVec> exceptional;
    ExpVec anchor;
    Cone cone;

    bool covers(const ExpVec& alpha) const;
    /// True when alpha could be an omitted support element (inside
    /// anchor + cone but not the anchor itself and not exceptional).
    bool uncertain(const ExpVec& alpha, const std::vector<ExpVec>& known) const;

    friend bool operator==(const ConeBound& a, const ConeBound& b) {
        return a.exceptional == b.exceptional && a.anchor == b.anchor && a.cone == b.cone;
    }

    std::string str() const;
};

/// One series branch produced by the expansion: the accumulated truncation,
/// its support bound, whether the truncation is an exact polynomial root,
/// and how many series solutions still share this prefix.
struct ExpansionBranch {
    PuiseuxPoly truncation;
    ConeBound bound;
    bool finished = false;
    int multiplicity = 1;
};

struct ExpansionResult {
    std::vector<ExpansionBranch> branches;
};

/// Edge polynomial p_e(t): terms of p on the segment e, graded by the
/// last-coordinate offset from the minor vertex.
UniPoly edge_polynomial(const YPoly& p, const Edge& e);

/// The unique maximal chain of admissible, w-compatible edges of NP(p)
/// that starts at the lowest y-level `start_level` and ends with its major
/// (but not minor) vertex on the affine line through `ref`.
std::vector<Edge> edge_path(const YPoly& p, const Edge& ref, const OrderSpec& w, int start_level);

/// Newton-Puiseux expansion from an admissible edge e of NP(p) under the
/// order w: every branch carries at least k terms and branches are pairwise
/// distinguished. p must be square-free in y and non-constant in y.
ExpansionResult expand(const YPoly& p, const Edge& e, const OrderSpec& w, int k, int budget = 64);

/// Expands until each branch provably carries every support element
/// not below `cutoff` under w.
ExpansionResult expand_to_order(const YPoly& p, const Edge& e, const OrderSpec& w,
                                const ExpVec& cutoff, int budget = 64);

}  // namespace puiseux
