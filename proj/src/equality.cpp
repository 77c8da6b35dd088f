#include "puiseux/equality.hpp"

#include <algorithm>
#include <set>

#include "puiseux/errors.hpp"
#include "puiseux/poly_algebra.hpp"

namespace puiseux {

namespace {

std::optional<Rational> certain_coeff_raw(const PuiseuxPoly& q, const ConeBound& bound,
                                          bool zero_series, const ExpVec& alpha) {
    if (zero_series) return Rational(0);
    auto it = q.terms().find(alpha);
    if (it != q.terms().end()) return it->second;
    if (bound.uncertain(alpha, {})) return std::nullopt;
    return Rational(0);
}

struct BranchView {
    const PuiseuxPoly* trunc;
    const ConeBound* bound;
};

std::optional<Rational> branch_coeff(const BranchView& b, const ExpVec& alpha) {
    return certain_coeff_raw(*b.trunc, *b.bound, false, alpha);
}

// Probe the union of both supports for a certain disagreement.
std::optional<std::tuple<ExpVec, Rational, Rational>> find_mismatch(const SeriesEncoding& a,
                                                                    const SeriesEncoding& b) {
    std::set<ExpVec> probes;
    for (const auto& [e, c] : a.truncation.terms()) probes.insert(e);
    for (const auto& [e, c] : b.truncation.terms()) probes.insert(e);
    for (const auto& alpha : probes) {
        auto ca = certain_coeff(a, alpha);
        auto cb = certain_coeff(b, alpha);
        if (ca && cb && *ca != *cb) return std::make_tuple(alpha, *ca, *cb);
    }
    return std::nullopt;
}

// W-sorted trailing exponent of a nonempty truncation.
ExpVec trail_under(const PuiseuxPoly& q, const OrderSpec& w) { return ord_w(q, w); }

// Conclusive Proposition-1 match of the series behind `enc` against the
// shortest distinguishing branches of the shared annihilator expanded
// under `w`. Returns the branch truncation when exactly determined.
std::optional<PuiseuxPoly> match_under(const SeriesEncoding& enc, const OrderSpec& w,
                                       const YPoly& shared) {
    if (!dual_contains(enc.bound.cone, w)) return std::nullopt;
    ExpVec lead = lexp_w(enc.truncation, w);
    NewtonPolytope np = newton_polytope(shared);
    std::optional<Edge> use;
    for (const auto& e : np.admissible_edges()) {
        if (!(-slope(e) == lead)) continue;
        if (!dual_contains(barrier_cone(np.points(), e), w)) continue;
        use = e;
        break;
    }
    if (!use) return std::nullopt;
    ExpansionResult res = expand(shared, *use, w, 0);
    std::optional<PuiseuxPoly> match;
    for (const auto& b : res.branches) {
        BranchView bv{&b.truncation, &b.bound};
        bool excluded = false;
        std::set<ExpVec> probes;
        for (const auto& [e, c] : b.truncation.terms()) probes.insert(e);
        for (const auto& [e, c] : enc.truncation.terms()) probes.insert(e);
        for (const auto& alpha : probes) {
            auto cb = branch_coeff(bv, alpha);
            auto ce = certain_coeff(enc, alpha);
            if (cb && ce && *cb != *ce) {
                excluded = true;
                break;
            }
        }
        if (excluded) continue;
        // Conclusive only when the whole branch truncation is visible in
        // the encoding's certain region and the encoding's horizon reaches
        // the branch anchor under w (a zero cone is certain everywhere).
        bool conclusive = !b.truncation.is_zero();
        for (const auto& [e, c] : b.truncation.terms())
            if (!certain_coeff(enc, e)) conclusive = false;
        bool horizon_ok = enc.bound.cone.is_zero() ||
                          w.leq(enc.bound.anchor, trail_under(b.truncation, w));
        if (conclusive && !horizon_ok) conclusive = false;
        if (!conclusive) continue;
        if (match) throw Error("two branches conclusively match one series");
        match = b.truncation;
    }
    return match;
}

}  // namespace

std::optional<Rational> certain_coeff(const SeriesEncoding& enc, const ExpVec& alpha) {
    return certain_coeff_raw(enc.truncation, enc.bound, enc.is_zero_series(), alpha);
}

EqualityVerdict equal(const SeriesEncoding& a, const SeriesEncoding& b, int budget) {
    if (a.vars.size() != b.vars.size())
        throw ArityMismatch("encodings over different variable sets");

    EqualityVerdict v;
    if (a.annihilator == b.annihilator && a.order == b.order && a.truncation == b.truncation) {
        v.value = Verdict::Equal;
        v.explanation = "identical encodings";
        EqualityCertificate cert;
        cert.source = EqualityCertificate::OrderSource::first_order;
        cert.common_order = a.order;
        cert.cone1 = a.bound.cone;
        cert.cone2 = b.bound.cone;
        Cone sum = a.bound.cone.sum(b.bound.cone);
        if (sum.is_line_free()) {
            cert.sum_line_free = true;
            cert.sum_cone = sum;
        }
        cert.shared_truncation = a.truncation;
        v.certificate = cert;
        return v;
    }
    if (a.is_zero_series() && b.is_zero_series()) {
        v.value = Verdict::Equal;
        v.explanation = "both encode the zero series";
        EqualityCertificate cert;
        cert.source = EqualityCertificate::OrderSource::first_order;
        cert.common_order = a.order;
        cert.sum_line_free = true;
        v.certificate = cert;
        return v;
    }

    // Shared annihilator: equal series must share a root, so coprime
    // annihilators decide immediately.
    YPoly shared = a.annihilator;
    if (!(a.annihilator == b.annihilator)) {
        YPoly g = gcd(a.annihilator, b.annihilator);
        if (g.degree() <= 0) {
            v.value = Verdict::NotEqual;
            v.explanation = "annihilators share no factor involving the unknown";
            return v;
        }
        shared = normalize_annihilator(a.annihilator * b.annihilator);
    }

    SeriesEncoding ea = a, eb = b;
    for (int round = 0; round <= budget; ++round) {
        if (auto mism = find_mismatch(ea, eb)) {
            v.value = Verdict::NotEqual;
            auto [alpha, c1, c2] = *mism;
            v.witness_exponent = alpha;
            v.witness_coeff1 = c1;
            v.witness_coeff2 = c2;
            v.explanation = "coefficients differ at " + alpha.str() + ": " + c1.str() + " vs " +
                            c2.str();
            return v;
        }
        if (!ea.is_zero_series() && !eb.is_zero_series()) {
            // Candidate common orders, cheapest first.
            std::vector<std::pair<EqualityCertificate::OrderSource, OrderSpec>> cands;
            if (dual_contains(eb.bound.cone, ea.order))
                cands.emplace_back(EqualityCertificate::OrderSource::first_order, ea.order);
            if (dual_contains(ea.bound.cone, eb.order))
                cands.emplace_back(EqualityCertificate::OrderSource::second_order, eb.order);
            Cone sum = ea.bound.cone.sum(eb.bound.cone);
            bool sum_free = sum.is_line_free();
            if (sum_free)
                cands.emplace_back(EqualityCertificate::OrderSource::interior_of_sum,
                                   interior_order(sum));
            for (const auto& [src, w] : cands) {
                auto m1 = match_under(ea, w, shared);
                if (!m1) continue;
                auto m2 = match_under(eb, w, shared);
                if (!m2) continue;
                if (*m1 == *m2) {
                    v.value = Verdict::Equal;
                    EqualityCertificate cert;
                    cert.source = src;
                    cert.common_order = w;
                    cert.cone1 = ea.bound.cone;
                    cert.cone2 = eb.bound.cone;
                    cert.sum_line_free = sum_free;
                    if (sum_free) cert.sum_cone = sum;
                    cert.shared_truncation = *m1;
                    v.certificate = cert;
                    v.explanation = "both match the same expansion branch under a common order";
                    return v;
                }
                // Conclusively matched to different roots.
                v.value = Verdict::NotEqual;
                for (const auto& [e1, c1] : reorder_terms(*m1 - *m2, w)) {
                    v.witness_exponent = e1;
                    v.witness_coeff1 = m1->coeff(e1);
                    v.witness_coeff2 = m2->coeff(e1);
                    break;
                }
                v.explanation = "matched to distinct expansion branches";
                return v;
            }
        }
        if (round == budget) break;
        ea = refine(ea, static_cast<int>(ea.truncation.term_count()) + 1);
        eb = refine(eb, static_cast<int>(eb.truncation.term_count()) + 1);
    }
    v.value = Verdict::Unknown;
    v.explanation = "budget of " + std::to_string(budget) + " refinement rounds exhausted";
    return v;
}

}  // namespace puiseux
