#include "puiseux/support.hpp"

#include <algorithm>
#include <map>

#include "puiseux/errors.hpp"
#include "puiseux/polytope.hpp"

namespace puiseux {

namespace {

// C~ = cone generated by the branch bound's cone and the differences
// alpha_i - alpha_1; supp(phi) <= alpha_1 + C~, and C~ is line-free since
// it is compatible with the branch order.
Cone vertex_cone(const ExpansionBranch& b, const OrderSpec& w) {
    std::vector<ExpVec> gens = b.bound.cone.generators();
    auto terms = reorder_terms(b.truncation, w);
    if (!terms.empty()) {
        const ExpVec& head = terms.front().first;
        for (std::size_t i = 1; i < terms.size(); ++i) gens.push_back(terms[i].first - head);
        gens.push_back(b.bound.anchor - head);
    }
    Cone c(static_cast<std::size_t>(b.truncation.arity()), std::move(gens));
    if (!c.is_line_free()) throw NotLineFree("vertex cone is not line-free");
    return c;
}

}  // namespace

SupportHull hull_vertices(const SeriesEncoding& enc, int budget) {
    const YPoly& p = enc.annihilator;
    NewtonPolytope np = newton_polytope(p);
    std::map<ExpVec, SupportVertex> found;

    for (const auto& e : np.admissible_edges()) {
        ExpVec v = -slope(e);
        Cone barrier = barrier_cone(np.points(), e);
        OrderSpec we = interior_order(barrier);
        bool met_unknown = false;
        std::optional<Cone> cone_for_vertex;
        try {
            ExpansionResult res = expand(p, e, we, 0);
            for (const auto& b : res.branches) {
                SeriesEncoding cand;
                cand.annihilator = p;
                cand.order = we;
                cand.truncation = b.truncation;
                cand.bound = b.bound;
                cand.vars = enc.vars;
                cand.unknown = enc.unknown;
                EqualityVerdict verdict = equal(enc, cand, budget);
                if (verdict.value == Verdict::Equal) {
                    cone_for_vertex = vertex_cone(b, we);
                    break;
                }
                if (verdict.value == Verdict::Unknown) met_unknown = true;
            }
        } catch (const NonRationalRoots&) {
            met_unknown = true;  // a non-rational branch cannot be ruled out structurally
        }
        if (!cone_for_vertex && !met_unknown) continue;

        auto it = found.find(v);
        if (it == found.end()) {
            SupportVertex sv;
            sv.vertex = v;
            sv.verified = cone_for_vertex.has_value();
            sv.cone = cone_for_vertex ? *cone_for_vertex : barrier;
            sv.edge_count = 1;
            found.emplace(v, std::move(sv));
        } else {
            if (cone_for_vertex && !it->second.verified) {
                it->second.verified = true;
                it->second.cone = *cone_for_vertex;
            }
            ++it->second.edge_count;
        }
    }

    SupportHull hull;
    for (auto& [v, sv] : found) hull.vertices.push_back(std::move(sv));
    return hull;
}

std::vector<std::vector<ExpVec>> bounded_faces(const SupportHull& hull) {
    std::vector<std::vector<ExpVec>> faces;
    if (hull.vertices.empty()) return faces;
    std::size_t n = hull.vertices.front().vertex.size();
    if (n > 2) throw UnsupportedDimension("bounded faces computed for n <= 2 only");
    for (const auto& sv : hull.vertices) {
        if (!sv.verified) throw Error("bounded faces need every vertex verified");
        faces.push_back({sv.vertex});
    }
    if (n == 1) {
        if (hull.vertices.size() == 2)
            faces.push_back({hull.vertices[0].vertex, hull.vertices[1].vertex});
        return faces;
    }
    for (std::size_t i = 0; i < hull.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < hull.vertices.size(); ++j) {
            const auto& a = hull.vertices[i];
            const auto& b = hull.vertices[j];
            ExpVec d = b.vertex - a.vertex;
            ExpVec nu{-d[1], d[0]};
            for (int side : {1, -1}) {
                Rational s(side);
                auto val = [&](const ExpVec& u) {
                    return (nu[0] * u[0] + nu[1] * u[1]) * s;
                };
                bool ok = true;
                for (const auto& g : a.cone.generators())
                    if (val(g).sign() > 0) ok = false;
                for (const auto& g : b.cone.generators())
                    if (val(g).sign() > 0) ok = false;
                for (const auto& other : hull.vertices) {
                    if (other.vertex == a.vertex || other.vertex == b.vertex) continue;
                    if (val(other.vertex - a.vertex).sign() > 0) ok = false;
                }
                if (ok) {
                    faces.push_back({a.vertex, b.vertex});
                    break;
                }
            }
        }
    }
    return faces;
}

std::vector<RayWitness> minimality_witnesses(const SeriesEncoding& enc, const ConeBound& bound,
                                             int depth) {
    std::vector<RayWitness> report;
    for (const auto& ray : bound.cone.generators()) report.push_back({ray, std::nullopt});
    if (report.empty()) return report;  // zero cone: vacuously witnessed

    auto scan = [&](const PuiseuxPoly& q) {
        for (auto& rw : report) {
            if (rw.witness) continue;
            for (const auto& [exp, c] : q.terms()) {
                ExpVec diff = exp - bound.anchor;
                if (diff.is_zero()) continue;
                // diff = lambda * ray with lambda > 0?
                bool parallel = true;
                bool have_lambda = false;
                Rational lambda(0);
                for (std::size_t i = 0; i < diff.size() && parallel; ++i) {
                    if (rw.ray[i].is_zero()) {
                        if (!diff[i].is_zero()) parallel = false;
                    } else {
                        Rational l = diff[i] / rw.ray[i];
                        if (!have_lambda) {
                            lambda = l;
                            have_lambda = true;
                        } else if (l != lambda) {
                            parallel = false;
                        }
                    }
                }
                if (parallel && lambda.sign() > 0) {
                    rw.witness = exp;
                    break;
                }
            }
        }
    };

    SeriesEncoding cur = enc;
    scan(cur.truncation);
    for (int round = 0; round < depth; ++round) {
        if (std::all_of(report.begin(), report.end(),
                        [](const RayWitness& r) { return r.witness.has_value(); }))
            break;
        if (cur.is_zero_series()) break;
        SeriesEncoding next = refine(cur, static_cast<int>(cur.truncation.term_count()) + 1);
        if (next.truncation == cur.truncation) break;  // exact series exhausted
        cur = std::move(next);
        scan(cur.truncation);
    }
    return report;
}

}  // namespace puiseux
