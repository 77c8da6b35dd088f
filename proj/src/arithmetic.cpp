#include "puiseux/arithmetic.hpp"

#include <algorithm>
#include <set>

#include "puiseux/errors.hpp"
#include "puiseux/poly_algebra.hpp"
#include "puiseux/polytope.hpp"

namespace puiseux {

namespace {

// Binomial coefficients up to degree d.
std::vector<std::vector<Integer>> binomials(int d) {
    std::vector<std::vector<Integer>> b(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        b[j].resize(static_cast<std::size_t>(j) + 1);
        b[j][0] = 1;
        b[j][static_cast<std::size_t>(j)] = 1;
        for (int i = 1; i < j; ++i) b[j][i] = b[j - 1][i - 1] + b[j - 1][i];
    }
    return b;
}

// p with coefficients lifted into arity n+1 (a fresh trailing variable).
YPoly lift_coeffs(const YPoly& p) {
    std::vector<PuiseuxPoly> cs;
    cs.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) cs.push_back(c.with_extra_variable());
    return YPoly(p.arity() + 1, std::move(cs));
}

// p2(x, Y - u) as a polynomial in u whose coefficients live in (x, Y).
YPoly substitute_y_minus_u(const YPoly& p2) {
    int n = p2.arity();
    int d = p2.degree();
    auto binom = binomials(d);
    PuiseuxPoly yvar = PuiseuxPoly::variable(n + 1, n);
    std::vector<PuiseuxPoly> ypow{PuiseuxPoly::constant(n + 1, 1)};
    for (int j = 1; j <= d; ++j) ypow.push_back(ypow.back() * yvar);
    std::vector<PuiseuxPoly> out(static_cast<std::size_t>(d) + 1, PuiseuxPoly(n + 1));
    for (int j = 0; j <= d; ++j) {
        PuiseuxPoly cj = p2.coeff(j).with_extra_variable();
        if (cj.is_zero()) continue;
        for (int i = 0; i <= j; ++i) {
            Rational sign((i % 2) ? -1 : 1);
            PuiseuxPoly term = cj.scaled(Rational(binom[j][i]) * sign) * ypow[static_cast<std::size_t>(j - i)];
            out[static_cast<std::size_t>(i)] += term;
        }
    }
    return YPoly(n + 1, std::move(out));
}

// u^deg(p2) * p2(x, Y/u) as a polynomial in u.
YPoly substitute_y_over_u(const YPoly& p2) {
    int n = p2.arity();
    int d = p2.degree();
    PuiseuxPoly yvar = PuiseuxPoly::variable(n + 1, n);
    std::vector<PuiseuxPoly> ypow{PuiseuxPoly::constant(n + 1, 1)};
    for (int j = 1; j <= d; ++j) ypow.push_back(ypow.back() * yvar);
    std::vector<PuiseuxPoly> out(static_cast<std::size_t>(d) + 1, PuiseuxPoly(n + 1));
    for (int j = 0; j <= d; ++j) {
        PuiseuxPoly cj = p2.coeff(j).with_extra_variable();
        if (cj.is_zero()) continue;
        out[static_cast<std::size_t>(d - j)] += cj * ypow[static_cast<std::size_t>(j)];
    }
    return YPoly(n + 1, std::move(out));
}

YPoly strip_zero_root(const YPoly& p, bool& had_zero_root) {
    had_zero_root = p.coeff(0).is_zero();
    if (!had_zero_root) return p;
    std::vector<PuiseuxPoly> cs(p.coeffs().begin() + 1, p.coeffs().end());
    return YPoly(p.arity(), std::move(cs));
}

void check_inputs(const YPoly& p1, const YPoly& p2) {
    if (p1.is_zero() || p2.is_zero()) throw ZeroPolynomial("annihilator arithmetic on zero");
    if (p1.is_constant_in_y() || p2.is_constant_in_y())
        throw ZeroPolynomial("annihilator arithmetic needs positive y-degree");
    if (p1.arity() != p2.arity()) throw ArityMismatch("annihilator arity mismatch");
}

}  // namespace

YPoly annihilator_sum(const YPoly& p1, const YPoly& p2) {
    check_inputs(p1, p2);
    YPoly a = lift_coeffs(p1);
    YPoly b = substitute_y_minus_u(p2);
    PuiseuxPoly res = resultant_y(a, b);
    YPoly out = YPoly::from_flat(res);
    if (out.is_zero()) throw Error("sum resultant vanished identically");
    return normalize_annihilator(out);
}

YPoly annihilator_product(const YPoly& p1, const YPoly& p2) {
    check_inputs(p1, p2);
    bool zero_root = false;
    YPoly core = strip_zero_root(p2, zero_root);
    YPoly out(p1.arity());
    if (core.is_constant_in_y()) {
        // p2 = c * y: the only root is zero.
        out = YPoly::y(p1.arity());
    } else {
        YPoly a = lift_coeffs(p1);
        YPoly b = substitute_y_over_u(core);
        PuiseuxPoly res = resultant_y(a, b);
        out = YPoly::from_flat(res);
        if (out.is_zero()) throw Error("product resultant vanished identically");
        if (zero_root) out = out * YPoly::y(p1.arity());
    }
    return normalize_annihilator(out);
}

YPoly annihilator_reciprocal(const YPoly& p) {
    if (p.is_zero() || p.is_constant_in_y())
        throw ZeroPolynomial("reciprocal needs positive y-degree");
    if (p.coeff(0).is_zero()) throw ZeroRoot("y divides the annihilator; a zero root has no reciprocal");
    return normalize_annihilator(p.reversed());
}

SeriesEncoding negate_encoding(const SeriesEncoding& enc) {
    SeriesEncoding out = enc;
    // p(x, -y), renormalized.
    std::vector<PuiseuxPoly> cs;
    for (std::size_t j = 0; j < enc.annihilator.coeffs().size(); ++j) {
        PuiseuxPoly c = enc.annihilator.coeffs()[j];
        cs.push_back((j % 2) ? -c : c);
    }
    out.annihilator = normalize_annihilator(YPoly(enc.annihilator.arity(), std::move(cs)));
    out.truncation = -enc.truncation;
    return out;
}

namespace {

struct Candidate {
    SeriesEncoding enc;
    bool rejected = false;
    CandidateRejection rejection;
};

// Coefficient of the sum at alpha when both inputs are certain there.
std::optional<Rational> sum_coeff(const SeriesEncoding& a, const SeriesEncoding& b,
                                  const ExpVec& alpha) {
    auto ca = certain_coeff(a, alpha);
    auto cb = certain_coeff(b, alpha);
    if (!ca || !cb) return std::nullopt;
    return *ca + *cb;
}

// Truncation of the encoded series to exponents not below cutoff under w;
// nullopt when the bound cannot certify completeness there.
std::optional<PuiseuxPoly> truncate_to(const SeriesEncoding& enc, const OrderSpec& w,
                                       const ExpVec& cutoff) {
    if (enc.is_zero_series()) return PuiseuxPoly(enc.truncation.arity());
    if (!dual_contains(enc.bound.cone, w)) return std::nullopt;
    if (!w.leq(enc.bound.anchor, cutoff)) return std::nullopt;  // uncertain region may reach cutoff
    PuiseuxPoly out(enc.truncation.arity());
    for (const auto& [e, c] : enc.truncation.terms())
        if (w.leq(cutoff, e)) out.add_term(e, c);
    return out;
}

void reject(Candidate& cand, const ExpVec& at, const Rational& combined, const Rational& cc,
            const std::string& note) {
    cand.rejected = true;
    cand.rejection.truncation = cand.enc.truncation;
    cand.rejection.order = cand.enc.order;
    cand.rejection.at = at;
    cand.rejection.combined_coeff = combined;
    cand.rejection.candidate_coeff = cc;
    cand.rejection.support_miss = cand.enc.truncation.terms().find(at) == cand.enc.truncation.terms().end();
    cand.rejection.note = note;
}

}  // namespace

ArithmeticResult combine(const SeriesEncoding& enc1, const SeriesEncoding& enc2, CombineOp op,
                         const OrderSpec& w, int budget) {
    ArithmeticResult result;
    std::size_t n = enc1.vars.size();

    // Degenerate inputs first.
    if (op == CombineOp::reciprocal) {
        if (enc1.is_zero_series()) throw ZeroRoot("reciprocal of the zero series");
    } else {
        if (enc2.vars.size() != n) throw ArityMismatch("combine over different variable sets");
        if (op == CombineOp::add && enc1.is_zero_series()) {
            result.status = ArithmeticResult::Status::Combined;
            result.encoding = enc2;
            return result;
        }
        if (op == CombineOp::add && enc2.is_zero_series()) {
            result.status = ArithmeticResult::Status::Combined;
            result.encoding = enc1;
            return result;
        }
        if (op == CombineOp::mul && (enc1.is_zero_series() || enc2.is_zero_series())) {
            result.status = ArithmeticResult::Status::Combined;
            result.encoding = zero_encoding(n, w, enc1.vars, enc1.unknown);
            return result;
        }
    }

    YPoly hat(static_cast<int>(n));
    switch (op) {
        case CombineOp::add:
            hat = annihilator_sum(enc1.annihilator, enc2.annihilator);
            break;
        case CombineOp::mul:
            hat = annihilator_product(enc1.annihilator, enc2.annihilator);
            break;
        case CombineOp::reciprocal:
            hat = annihilator_reciprocal(enc1.annihilator);
            break;
    }

    bool compat1 = dual_contains(enc1.bound.cone, w);
    bool compat2 = op == CombineOp::reciprocal ? true : dual_contains(enc2.bound.cone, w);
    bool constructive = compat1 && compat2;
    if (!constructive)
        result.diagnostic =
            "cone bounds are provably incompatible with the supplied order; "
            "attempting to reject every candidate root";

    // Candidate encodings, one per branch of every admissible edge. In
    // constructive mode only w-compatible edges matter; otherwise each edge
    // is expanded under an interior order of its own barrier cone.
    std::vector<Candidate> candidates;
    bool zero_candidate = hat.coeff(0).is_zero();
    {
        NewtonPolytope np = newton_polytope(hat);
        for (const auto& e : np.admissible_edges()) {
            Cone barrier = barrier_cone(np.points(), e);
            OrderSpec order = w;
            if (constructive) {
                if (!dual_contains(barrier, w)) continue;
            } else {
                order = interior_order(barrier);
            }
            try {
                for (auto& enc : encode(hat, e, order, 0, enc1.vars, enc1.unknown)) {
                    Candidate c;
                    c.enc = std::move(enc);
                    candidates.push_back(std::move(c));
                }
            } catch (const NonRationalRoots& err) {
                Candidate c;
                c.enc.order = order;
                c.enc.truncation = PuiseuxPoly(static_cast<int>(n));
                c.rejected = true;
                c.rejection.order = order;
                c.rejection.note =
                    std::string("edge roots are irrational, the combination has rational "
                                "coefficients (") +
                    err.what() + ")";
                candidates.push_back(std::move(c));
            }
        }
    }

    SeriesEncoding a = enc1, b = enc2;
    if (op == CombineOp::reciprocal) b = enc1;

    for (int round = 0; round <= budget; ++round) {
        // --- probe-based rejection ---
        for (auto& cand : candidates) {
            if (cand.rejected || cand.enc.truncation.is_zero()) continue;
            std::set<ExpVec> probes;
            for (const auto& [e, c] : cand.enc.truncation.terms()) probes.insert(e);
            if (op == CombineOp::add) {
                for (const auto& [e, c] : a.truncation.terms()) probes.insert(e);
                for (const auto& [e, c] : b.truncation.terms()) probes.insert(e);
                for (const auto& alpha : probes) {
                    auto combined = sum_coeff(a, b, alpha);
                    auto cc = certain_coeff(cand.enc, alpha);
                    if (combined && cc && *combined != *cc) {
                        reject(cand, alpha, *combined, *cc, "certain coefficients differ");
                        break;
                    }
                }
            } else {
                // Product / reciprocal comparisons live behind the
                // threshold rule and need the common order.
                ExpVec tau = ord_w(cand.enc.truncation, w);
                std::optional<PuiseuxPoly> t1, t2;
                if (op == CombineOp::mul) {
                    if (!dual_contains(a.bound.cone, w) || !dual_contains(b.bound.cone, w))
                        continue;
                    ExpVec la = lexp_w(a.truncation, w), lb = lexp_w(b.truncation, w);
                    t1 = truncate_to(a, w, tau - lb);
                    t2 = truncate_to(b, w, tau - la);
                } else {
                    // reciprocal: the formal inverse of the truncation
                    // agrees with 1/phi on exponents above anchor - 2*lexp.
                    if (!dual_contains(a.bound.cone, w)) continue;
                    ExpVec la = lexp_w(a.truncation, w);
                    ExpVec horizon = a.bound.anchor - la - la;
                    if (w.less(tau, horizon)) continue;  // not enough certainty yet
                    const PuiseuxPoly& q = a.truncation;
                    Rational lc = q.coeff(la);
                    PuiseuxPoly tail = q - PuiseuxPoly::monomial(la, lc);
                    PuiseuxPoly inv_head = PuiseuxPoly::monomial(-la, Rational(1) / lc);
                    PuiseuxPoly ratio = tail * inv_head;  // every term strictly below 0
                    // 1/(head + tail) = inv_head * sum_k (-ratio)^k, kept above tau
                    PuiseuxPoly acc = inv_head;
                    PuiseuxPoly power = PuiseuxPoly::constant(static_cast<int>(n), 1);
                    ExpVec floor_exp = tau + la;
                    for (int k = 1; !ratio.is_zero(); ++k) {
                        power = power * ratio;
                        // terms of the power below tau + lexp never contribute again
                        PuiseuxPoly pruned(power.arity());
                        for (const auto& [e, c] : power.terms())
                            if (w.leq(floor_exp, e)) pruned.add_term(e, c);
                        power = std::move(pruned);
                        if (power.is_zero()) break;
                        PuiseuxPoly contrib =
                            power.scaled(Rational((k % 2) ? -1 : 1)) * inv_head;
                        for (const auto& [e, c] : contrib.terms())
                            if (w.leq(tau, e)) acc.add_term(e, c);
                    }
                    PuiseuxPoly kept(acc.arity());
                    for (const auto& [e, c] : acc.terms())
                        if (w.leq(tau, e)) kept.add_term(e, c);
                    t1 = kept;
                    t2 = PuiseuxPoly::constant(static_cast<int>(n), 1);
                }
                if (!t1 || !t2) continue;
                PuiseuxPoly prod = *t1 * *t2;
                // combined terms at or above tau are exact
                std::set<ExpVec> region;
                for (const auto& [e, c] : cand.enc.truncation.terms())
                    if (w.leq(tau, e)) region.insert(e);
                for (const auto& [e, c] : prod.terms())
                    if (w.leq(tau, e)) region.insert(e);
                for (const auto& alpha : region) {
                    Rational pc = prod.coeff(alpha);
                    Rational cc = cand.enc.truncation.coeff(alpha);
                    if (pc != cc) {
                        reject(cand, alpha, pc, cc, "threshold comparison differs");
                        break;
                    }
                }
            }
        }

        // --- zero-series candidate (sums only) ---
        std::optional<bool> zero_matches;
        if (zero_candidate && op == CombineOp::add) {
            EqualityVerdict v = equal(negate_encoding(a), b, budget);
            if (v.value == Verdict::Equal) zero_matches = true;
            if (v.value == Verdict::NotEqual) zero_matches = false;
        }
        if (zero_candidate && op == CombineOp::add && zero_matches && *zero_matches) {
            result.status = ArithmeticResult::Status::Combined;
            result.encoding = zero_encoding(n, w, enc1.vars, enc1.unknown);
            return result;
        }

        // --- conclusive acceptance of a unique surviving candidate ---
        std::vector<Candidate*> alive;
        for (auto& cand : candidates)
            if (!cand.rejected) alive.push_back(&cand);
        bool zero_alive = zero_candidate && op == CombineOp::add && !zero_matches.has_value();
        if (alive.empty() && !zero_alive) {
            result.status = ArithmeticResult::Status::NotAlgebraicEvidence;
            if (zero_candidate && op == CombineOp::add && zero_matches && !*zero_matches) {
                CandidateRejection zr;
                zr.order = w;
                zr.note = "zero root: the inputs are not negatives of each other";
                result.rejections.push_back(zr);
            }
            for (const auto& cand : candidates) result.rejections.push_back(cand.rejection);
            return result;
        }
        if (constructive && alive.size() == 1 && !zero_alive) {
            Candidate* cand = alive.front();
            bool conclusive = false;
            ExpVec tau = cand->enc.truncation.is_zero() ? ExpVec(n)
                                                        : ord_w(cand->enc.truncation, w);
            if (op == CombineOp::add) {
                auto t1 = truncate_to(a, w, tau);
                auto t2 = truncate_to(b, w, tau);
                if (t1 && t2) {
                    PuiseuxPoly s = *t1 + *t2;
                    PuiseuxPoly restricted(static_cast<int>(n));
                    for (const auto& [e, c] : s.terms())
                        if (w.leq(tau, e)) restricted.add_term(e, c);
                    conclusive = restricted == cand->enc.truncation;
                }
            } else if (op == CombineOp::mul) {
                ExpVec la = lexp_w(a.truncation, w), lb = lexp_w(b.truncation, w);
                auto t1 = truncate_to(a, w, tau - lb);
                auto t2 = truncate_to(b, w, tau - la);
                if (t1 && t2) {
                    PuiseuxPoly prod = *t1 * *t2;
                    PuiseuxPoly restricted(static_cast<int>(n));
                    for (const auto& [e, c] : prod.terms())
                        if (w.leq(tau, e)) restricted.add_term(e, c);
                    conclusive = restricted == cand->enc.truncation;
                }
            } else {
                // reciprocal: accepted once the survivor matched through the
                // threshold comparison at this depth
                ExpVec la = lexp_w(a.truncation, w);
                ExpVec horizon = a.bound.anchor - la - la;
                conclusive = w.leq(horizon, tau);
            }
            if (conclusive) {
                result.status = ArithmeticResult::Status::Combined;
                result.encoding = cand->enc;
                for (const auto& c : candidates)
                    if (c.rejected) result.rejections.push_back(c.rejection);
                return result;
            }
        }

        if (round == budget) break;
        // --- refine everything and try again ---
        a = refine(a, static_cast<int>(a.truncation.term_count()) + 1);
        if (op != CombineOp::reciprocal)
            b = refine(b, static_cast<int>(b.truncation.term_count()) + 1);
        for (auto& cand : candidates) {
            if (cand.rejected || cand.enc.truncation.is_zero()) continue;
            cand.enc = refine(cand.enc, static_cast<int>(cand.enc.truncation.term_count()) + 1);
        }
    }

    result.status = ArithmeticResult::Status::Unknown;
    if (result.diagnostic.empty())
        result.diagnostic = "could not isolate or reject candidates within the budget";
    return result;
}

}  // namespace puiseux
