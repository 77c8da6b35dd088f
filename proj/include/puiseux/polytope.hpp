#pragma once

#include <string>
#include <vector>

#include "puiseux/cone.hpp"
#include "puiseux/puiseux_poly.hpp"
#include "puiseux/ypoly.hpp"

namespace puiseux {

/// Edge of a Newton polytope in Q^(n+1). Admissible edges have endpoints
/// with different last (y-degree) coordinates; minor() and major() are the
/// endpoints of smaller and larger last coordinate.
struct Edge {
    ExpVec v1, v2;  // lexicographically sorted endpoints

    bool admissible() const;
    const ExpVec& minor() const;
    const ExpVec& major() const;

    /// True when p lies on the affine line through the edge.
    bool line_contains(const ExpVec& p) const;

    friend bool operator==(const Edge& a, const Edge& b) { return a.v1 == b.v1 && a.v2 == b.v2; }
    friend bool operator<(const Edge& a, const Edge& b) {
        return a.v1 < b.v1 || (a.v1 == b.v1 && a.v2 < b.v2);
    }

    std::string str() const;
};

/// Exact convex hull of a support in Q^(n+1), n+1 <= 3, with the full edge
/// skeleton.
class NewtonPolytope {
  public:
    NewtonPolytope() = default;
    static NewtonPolytope of_points(std::vector<ExpVec> points);
    static NewtonPolytope of(const YPoly& p);

    std::size_t dim() const { return dim_; }
    const std::vector<ExpVec>& points() const { return points_; }
    const std::vector<ExpVec>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }

    std::vector<Edge> admissible_edges() const;

  private:
    std::size_t dim_ = 0;
    std::vector<ExpVec> points_;
    std::vector<ExpVec> vertices_;
    std::vector<Edge> edges_;
};

NewtonPolytope newton_polytope(const YPoly& p);

/// Slope of an admissible edge with respect to its last coordinate.
ExpVec slope(const Edge& e);

/// Barrier cone of the line through e with respect to the support of p:
/// the cone generated by the supports' images under the projection along e,
/// relative to the projected edge, restricted to the first n coordinates.
Cone barrier_cone(const YPoly& p, const Edge& e);
Cone barrier_cone(const std::vector<ExpVec>& support, const Edge& e);

}  // namespace puiseux
