#include "puiseux/expand.hpp"

#include <algorithm>

#include "puiseux/errors.hpp"
#include "puiseux/poly_algebra.hpp"

namespace puiseux {

bool ConeBound::covers(const ExpVec& alpha) const {
    for (const auto& e : exceptional)
        if (e == alpha) return true;
    return cone.contains(alpha - anchor);
}

bool ConeBound::uncertain(const ExpVec& alpha, const std::vector<ExpVec>& known) const {
    for (const auto& e : known)
        if (e == alpha) return false;
    if (alpha == anchor) return false;
    for (const auto& e : exceptional)
        if (e == alpha) return false;
    return cone.contains(alpha - anchor);
}

std::string ConeBound::str() const {
    std::string s = "{";
    for (std::size_t i = 0; i < exceptional.size(); ++i) {
        if (i) s += ",";
        s += exceptional[i].str();
    }
    return s + "} u (" + anchor.str() + " + " + cone.str() + ")";
}

UniPoly edge_polynomial(const YPoly& p, const Edge& e) {
    if (!e.admissible()) throw NotAdmissible("edge polynomial needs an admissible edge");
    const ExpVec& lo = e.minor();
    const ExpVec& hi = e.major();
    std::size_t last = lo.size() - 1;
    PuiseuxPoly flat = p.flatten();
    std::vector<Rational> coeffs;
    for (const auto& [exp, c] : flat.terms()) {
        if (!e.line_contains(exp)) continue;
        Rational offset = exp[last] - lo[last];
        if (offset.sign() < 0 || exp[last] > hi[last]) continue;  // outside the segment
        if (!offset.is_integer()) throw Error("non-integer edge grading");
        std::size_t k = offset.num().get_ui();
        if (coeffs.size() <= k) coeffs.resize(k + 1, Rational(0));
        coeffs[k] += c;
    }
    return UniPoly(std::move(coeffs));
}

namespace {

// The w-compatible chain of admissible edges of NP(p) starting at the
// lowest vertex of the given level, walked upward edge by edge. step(e)
// decides whether to take the next edge; the walk ends when it declines.
template <typename Step>
std::vector<Edge> walk_chain(const YPoly& p, const OrderSpec& w, int start_level, Step step) {
    NewtonPolytope np = newton_polytope(p);
    std::vector<Edge> compatible;
    for (const auto& e : np.admissible_edges())
        if (dual_contains(barrier_cone(np.points(), e), w)) compatible.push_back(e);
    if (compatible.empty()) throw NoCompatiblePath("no admissible edge is compatible with the order");

    std::size_t last = np.points().front().size() - 1;
    Rational level(start_level);

    std::vector<const Edge*> starts;
    for (const auto& e : compatible)
        if (e.minor()[last] == level) starts.push_back(&e);
    if (starts.empty())
        throw NoCompatiblePath("no compatible edge starts at level " + level.str());
    for (const auto* s : starts)
        if (s->minor() != starts.front()->minor())
            throw NoCompatiblePath("ambiguous chain start at level " + level.str());
    if (starts.size() > 1) throw NoCompatiblePath("ambiguous chain start at level " + level.str());

    std::vector<Edge> path;
    const Edge* cur = starts.front();
    while (step(*cur, path)) {
        path.push_back(*cur);
        const ExpVec& top = cur->major();
        const Edge* next = nullptr;
        for (const auto& e : compatible) {
            if (e.minor() == top) {
                if (next) throw NoCompatiblePath("ambiguous chain continuation at " + top.str());
                next = &e;
            }
        }
        if (!next) break;
        cur = next;
    }
    return path;
}

}  // namespace

std::vector<Edge> edge_path(const YPoly& p, const Edge& ref, const OrderSpec& w, int start_level) {
    bool reached = false;
    auto path = walk_chain(p, w, start_level, [&](const Edge& e, const std::vector<Edge>&) {
        if (reached) return false;
        if (ref.line_contains(e.major()) && !ref.line_contains(e.minor())) reached = true;
        return true;
    });
    if (!reached)
        throw NoCompatiblePath("chain does not reach the reference line");
    return path;
}

namespace {

struct WorkBranch {
    PuiseuxPoly truncation;
    Edge last_edge;
    int multiplicity = 1;
    bool finished = false;
    YPoly shifted;  // p(x, truncation + y)
};

ExpVec minus_slope(const Edge& e) { return -slope(e); }

// Terms of the truncation sorted decreasing under w: alpha_1 .. alpha_N.
std::vector<ExpVec> sorted_exponents(const PuiseuxPoly& q, const OrderSpec& w) {
    std::vector<ExpVec> exps = q.support();
    std::sort(exps.begin(), exps.end(), [&](const ExpVec& a, const ExpVec& b) { return w.less(b, a); });
    return exps;
}

ConeBound make_bound(const WorkBranch& b, const OrderSpec& w, const Edge& original_edge,
                     std::size_t n) {
    ConeBound bound;
    if (b.truncation.is_zero()) {
        bound.anchor = minus_slope(original_edge);
        bound.cone = Cone::zero(n);
        return bound;
    }
    auto exps = sorted_exponents(b.truncation, w);
    bound.anchor = exps.back();
    bound.exceptional.assign(exps.begin(), exps.end() - 1);
    if (b.finished) {
        bound.cone = Cone::zero(n);
    } else {
        bound.cone = barrier_cone(b.shifted.flatten().support(), b.last_edge);
    }
    return bound;
}

bool tie_break_less(const ExpansionBranch& a, const ExpansionBranch& b) {
    return a.truncation.terms() < b.truncation.terms();
}

}  // namespace

ExpansionResult expand(const YPoly& p, const Edge& e, const OrderSpec& w, int k, int budget) {
    if (p.is_zero() || p.is_constant_in_y())
        throw ZeroPolynomial("expansion needs a polynomial of positive y-degree");
    if (static_cast<std::size_t>(p.arity()) != w.arity())
        throw ArityMismatch("order arity does not match the polynomial");
    if (!squarefree_in_y(p)) throw Error("expansion input must be square-free");
    if (!e.admissible()) throw NotAdmissible("expansion needs an admissible edge");
    if (!dual_contains(barrier_cone(p, e), w))
        throw NoCompatiblePath("order is not in the dual of the edge's barrier cone");

    std::size_t n = static_cast<std::size_t>(p.arity());
    std::size_t last = n;
    int target = static_cast<int>((e.major()[last] - e.minor()[last]).num().get_si());

    std::vector<WorkBranch> work;
    {
        UniPoly pe = edge_polynomial(p, e);
        ExpVec lead = minus_slope(e);
        for (const auto& [c, mult] : rational_roots(pe)) {
            if (c.is_zero()) continue;  // the minor vertex carries no term
            WorkBranch b;
            b.truncation = PuiseuxPoly::monomial(lead, c);
            b.last_edge = e;
            b.multiplicity = mult;
            b.shifted = p.substitute_shift(b.truncation);
            work.push_back(std::move(b));
        }
        int total = 0;
        for (const auto& b : work) total += b.multiplicity;
        if (total != target)
            throw Error("edge polynomial roots do not account for the edge span");
    }

    auto needs_refinement = [&](const WorkBranch& b) {
        if (b.finished) return false;
        return b.multiplicity > 1 || static_cast<int>(b.truncation.term_count()) < k;
    };

    int rounds = 0;
    while (std::any_of(work.begin(), work.end(), needs_refinement)) {
        if (++rounds > budget)
            throw BudgetExceeded("expansion did not separate within " + std::to_string(budget) +
                                 " rounds");
        std::vector<WorkBranch> next;
        for (auto& b : work) {
            if (!needs_refinement(b)) {
                next.push_back(std::move(b));
                continue;
            }
            int remaining = b.multiplicity;
            int start_level = 0;
            if (b.shifted.coeff(0).is_zero()) {
                // Exact root: p(x, truncation) = 0.
                WorkBranch done = b;
                done.multiplicity = 1;
                done.finished = true;
                next.push_back(done);
                remaining -= 1;
                start_level = 1;
            }
            if (remaining == 0) continue;
            // Take compatible chain edges while their slope stays below the
            // branch's trailing exponent; exactly `remaining` solutions
            // extend this prefix, and they occupy the bottom of the chain.
            ExpVec prev_min = ord_w(b.truncation, w);
            std::size_t last_slot = static_cast<std::size_t>(p.arity());
            int covered = 0;
            auto path = walk_chain(
                b.shifted, w, start_level, [&](const Edge& pe, const std::vector<Edge>&) {
                    if (covered >= remaining) return false;
                    if (!w.less(minus_slope(pe), prev_min)) return false;
                    covered += static_cast<int>(
                        (pe.major()[last_slot] - pe.minor()[last_slot]).num().get_si());
                    return true;
                });
            if (covered != remaining)
                throw Error("branch multiplicity mismatch along the edge path");
            int produced = 0;
            for (const auto& pe : path) {
                UniPoly poly = edge_polynomial(b.shifted, pe);
                ExpVec lead = minus_slope(pe);
                if (!w.less(lead, prev_min))
                    throw Error("path term does not decrease under the order");
                for (const auto& [c, mult] : rational_roots(poly)) {
                    if (c.is_zero()) continue;
                    WorkBranch child;
                    child.truncation = b.truncation;
                    child.truncation.add_term(lead, c);
                    child.last_edge = pe;
                    child.multiplicity = mult;
                    child.shifted = p.substitute_shift(child.truncation);
                    produced += mult;
                    next.push_back(std::move(child));
                }
            }
            if (produced != remaining)
                throw Error("branch multiplicity mismatch along the edge path");
        }
        work = std::move(next);
    }

    ExpansionResult out;
    for (auto& b : work) {
        if (!b.finished && b.shifted.coeff(0).is_zero()) b.finished = true;
        ExpansionBranch eb;
        eb.truncation = b.truncation;
        eb.finished = b.finished;
        eb.multiplicity = b.multiplicity;
        eb.bound = make_bound(b, w, e, n);
        out.branches.push_back(std::move(eb));
    }
    std::sort(out.branches.begin(), out.branches.end(), tie_break_less);
    return out;
}

ExpansionResult expand_to_order(const YPoly& p, const Edge& e, const OrderSpec& w,
                                const ExpVec& cutoff, int budget) {
    ExpVec lead = minus_slope(e);
    if (w.less(lead, cutoff)) {
        // Nothing above the cutoff: an empty truncation bounded at the
        // leading exponent.
        ExpansionResult out;
        ExpansionBranch b;
        b.truncation = PuiseuxPoly(static_cast<int>(w.arity()));
        b.bound.anchor = lead;
        b.bound.cone = barrier_cone(p, e);
        std::size_t last = lead.size();
        b.multiplicity =
            static_cast<int>((e.major()[last] - e.minor()[last]).num().get_si());
        out.branches.push_back(std::move(b));
        return out;
    }
    for (int k = 1;; ++k) {
        if (k > budget) throw BudgetExceeded("cutoff not certified within the budget");
        ExpansionResult res = expand(p, e, w, k, budget);
        bool done = true;
        for (const auto& b : res.branches) {
            if (b.finished) continue;
            if (!w.leq(b.bound.anchor, cutoff)) done = false;
        }
        if (done) return res;
    }
}

}  // namespace puiseux
