#include "puiseux/polytope.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "puiseux/errors.hpp"

namespace puiseux {

namespace {

Rational dot(const ExpVec& a, const ExpVec& b) {
    Rational s(0);
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

ExpVec cross(const ExpVec& a, const ExpVec& b) {
    return ExpVec{a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
                  a[0] * b[1] - a[1] * b[0]};
}

Rational cross2(const ExpVec& o, const ExpVec& a, const ExpVec& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Monotone chain on exact rationals; returns the hull cycle with strictly
// convex corners only.
std::vector<std::size_t> hull_cycle_2d(const std::vector<ExpVec>& pts) {
    std::vector<std::size_t> idx(pts.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        return pts[a][0] < pts[b][0] || (pts[a][0] == pts[b][0] && pts[a][1] < pts[b][1]);
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](std::size_t a, std::size_t b) { return pts[a] == pts[b]; }),
              idx.end());
    if (idx.size() <= 2) return idx;
    std::vector<std::size_t> h(2 * idx.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {  // lower
        while (k >= 2 && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]).sign() <= 0) --k;
        h[k++] = idx[i];
    }
    for (std::size_t i = idx.size() - 1, t = k + 1; i-- > 0;) {  // upper
        while (k >= t && cross2(pts[h[k - 2]], pts[h[k - 1]], pts[idx[i]]).sign() <= 0) --k;
        h[k++] = idx[i];
    }
    h.resize(k - 1);
    return h;
}

std::size_t affine_rank(const std::vector<ExpVec>& pts) {
    if (pts.size() <= 1) return 0;
    std::vector<std::vector<Rational>> m;
    for (std::size_t i = 1; i < pts.size(); ++i) {
        ExpVec d = pts[i] - pts[0];
        m.push_back(d.entries());
    }
    // Gaussian elimination rank.
    std::size_t r = 0, cols = pts[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t p = r;
        while (p < m.size() && m[p][c].is_zero()) ++p;
        if (p == m.size()) continue;
        std::swap(m[r], m[p]);
        for (std::size_t i = r + 1; i < m.size(); ++i) {
            if (m[i][c].is_zero()) continue;
            Rational f = m[i][c] / m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    return r;
}

// Exact coordinates of p in the affine frame (origin, u, v); the points are
// known to lie in the spanned plane.
std::pair<Rational, Rational> plane_coords(const ExpVec& p, const ExpVec& origin, const ExpVec& u,
                                           const ExpVec& v) {
    ExpVec d = p - origin;
    // Solve s*u + t*v = d via two independent equations.
    for (std::size_t i = 0; i < d.size(); ++i) {
        for (std::size_t j = 0; j < d.size(); ++j) {
            if (i == j) continue;
            Rational det = u[i] * v[j] - u[j] * v[i];
            if (det.is_zero()) continue;
            Rational s = (d[i] * v[j] - d[j] * v[i]) / det;
            Rational t = (u[i] * d[j] - u[j] * d[i]) / det;
            return {s, t};
        }
    }
    throw Error("degenerate plane frame");
}

void add_edge(std::set<Edge>& edges, const ExpVec& a, const ExpVec& b) {
    if (a == b) return;
    Edge e = a < b ? Edge{a, b} : Edge{b, a};
    edges.insert(e);
}

}  // namespace

bool Edge::admissible() const { return v1[v1.size() - 1] != v2[v2.size() - 1]; }

const ExpVec& Edge::minor() const {
    if (!admissible()) throw NotAdmissible("edge has constant last coordinate: " + str());
    return v1[v1.size() - 1] < v2[v2.size() - 1] ? v1 : v2;
}

const ExpVec& Edge::major() const {
    if (!admissible()) throw NotAdmissible("edge has constant last coordinate: " + str());
    return v1[v1.size() - 1] < v2[v2.size() - 1] ? v2 : v1;
}

bool Edge::line_contains(const ExpVec& p) const {
    ExpVec d = v2 - v1, q = p - v1;
    // q parallel to d: all 2x2 minors vanish.
    for (std::size_t i = 0; i < d.size(); ++i)
        for (std::size_t j = i + 1; j < d.size(); ++j)
            if (d[i] * q[j] != d[j] * q[i]) return false;
    return true;
}

std::string Edge::str() const { return v1.str() + "-" + v2.str(); }

NewtonPolytope NewtonPolytope::of_points(std::vector<ExpVec> points) {
    if (points.empty()) throw ZeroPolynomial("polytope of empty support");
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::size_t dim = points.front().size();
    if (dim < 1 || dim > 3)
        throw UnsupportedDimension("polytopes supported in dimension 1..3, got " +
                                   std::to_string(dim));

    NewtonPolytope np;
    np.dim_ = dim;
    np.points_ = points;

    if (points.size() == 1) {
        np.vertices_ = points;
        return np;
    }

    std::size_t k = affine_rank(points);
    std::set<Edge> edges;

    if (k == 1) {
        // Segment: extremes along the direction.
        ExpVec d = points[1] - points[0];
        const ExpVec *lo = &points[0], *hi = &points[0];
        Rational lov(0), hiv(0);
        for (const auto& p : points) {
            Rational t = dot(p - points[0], d);
            if (t < lov) {
                lov = t;
                lo = &p;
            }
            if (t > hiv) {
                hiv = t;
                hi = &p;
            }
        }
        np.vertices_ = {*lo, *hi};
        std::sort(np.vertices_.begin(), np.vertices_.end());
        add_edge(edges, *lo, *hi);
        np.edges_.assign(edges.begin(), edges.end());
        return np;
    }

    if (k == 2) {
        // Pick a frame in the plane.
        ExpVec u = points[1] - points[0];
        ExpVec v;
        bool found = false;
        for (std::size_t i = 2; i < points.size() && !found; ++i) {
            v = points[i] - points[0];
            std::vector<ExpVec> probe{points[0], points[1], points[i]};
            if (affine_rank(probe) == 2) found = true;
        }
        if (!found) throw Error("rank-2 set without a plane frame");
        std::vector<ExpVec> flat;
        flat.reserve(points.size());
        for (const auto& p : points) {
            auto [s, t] = plane_coords(p, points[0], u, v);
            flat.push_back(ExpVec{s, t});
        }
        auto cycle = hull_cycle_2d(flat);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            np.vertices_.push_back(points[cycle[i]]);
            if (cycle.size() >= 2) add_edge(edges, points[cycle[i]], points[cycle[(i + 1) % cycle.size()]]);
        }
        std::sort(np.vertices_.begin(), np.vertices_.end());
        np.edges_.assign(edges.begin(), edges.end());
        return np;
    }

    // Full-dimensional in Q^3: enumerate supporting planes through point
    // triples, then take the 2-D hull of every face.
    std::set<ExpVec> vertex_set;
    std::set<std::vector<ExpVec>> seen_faces;
    std::size_t m = points.size();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            for (std::size_t l = j + 1; l < m; ++l) {
                ExpVec nvec = cross(points[j] - points[i], points[l] - points[i]);
                if (nvec.is_zero()) continue;
                int lo = 0, hi = 0;
                for (const auto& p : points) {
                    int s = dot(nvec, p - points[i]).sign();
                    if (s < 0) lo = 1;
                    if (s > 0) hi = 1;
                    if (lo && hi) break;
                }
                if (lo && hi) continue;  // not supporting
                std::vector<ExpVec> face;
                for (const auto& p : points)
                    if (dot(nvec, p - points[i]).sign() == 0) face.push_back(p);
                std::sort(face.begin(), face.end());
                if (!seen_faces.insert(face).second) continue;
                // 2-D hull of the face in its own plane.
                ExpVec u = face[1] - face[0];
                ExpVec v;
                bool found = false;
                for (std::size_t t = 2; t < face.size() && !found; ++t) {
                    std::vector<ExpVec> probe{face[0], face[1], face[t]};
                    if (affine_rank(probe) == 2) {
                        v = face[t] - face[0];
                        found = true;
                    }
                }
                if (!found) continue;  // collinear "face" comes from edge triples
                std::vector<ExpVec> flat;
                for (const auto& p : face) {
                    auto [s, t] = plane_coords(p, face[0], u, v);
                    flat.push_back(ExpVec{s, t});
                }
                auto cycle = hull_cycle_2d(flat);
                for (std::size_t a = 0; a < cycle.size(); ++a) {
                    vertex_set.insert(face[cycle[a]]);
                    add_edge(edges, face[cycle[a]], face[cycle[(a + 1) % cycle.size()]]);
                }
            }
        }
    }
    np.vertices_.assign(vertex_set.begin(), vertex_set.end());
    np.edges_.assign(edges.begin(), edges.end());
    return np;
}

NewtonPolytope NewtonPolytope::of(const YPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial("polytope of zero polynomial");
    return of_points(p.flatten().support());
}

NewtonPolytope newton_polytope(const YPoly& p) { return NewtonPolytope::of(p); }

std::vector<Edge> NewtonPolytope::admissible_edges() const {
    std::vector<Edge> out;
    for (const auto& e : edges_)
        if (e.admissible()) out.push_back(e);
    return out;
}

ExpVec slope(const Edge& e) {
    const ExpVec& lo = e.minor();
    const ExpVec& hi = e.major();
    std::size_t n = lo.size() - 1;
    Rational dy = hi[n] - lo[n];
    ExpVec s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (hi[i] - lo[i]) / dy;
    return s;
}

Cone barrier_cone(const std::vector<ExpVec>& support, const Edge& e) {
    const ExpVec& lo = e.minor();
    const ExpVec& hi = e.major();
    std::size_t n = lo.size() - 1;
    ExpVec delta = hi - lo;
    const Rational& dz = delta[n];
    std::vector<ExpVec> gens;
    for (const auto& s : support) {
        // Project along the edge direction onto the last-coordinate-zero
        // hyperplane, relative to the projected edge.
        Rational t = s[n] / dz;
        ExpVec g(n);
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i) {
            g[i] = s[i] - t * delta[i] - (lo[i] - (lo[n] / dz) * delta[i]);
            if (!g[i].is_zero()) zero = false;
        }
        if (!zero) gens.push_back(g);
    }
    Cone c(n, std::move(gens));
    if (!c.is_line_free())
        throw NotLineFree("barrier cone of " + e.str() + " is not line-free");
    return c;
}

Cone barrier_cone(const YPoly& p, const Edge& e) {
    if (!e.admissible()) throw NotAdmissible("barrier cone needs an admissible edge");
    return barrier_cone(p.flatten().support(), e);
}

}  // namespace puiseux
