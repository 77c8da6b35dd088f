#pragma once

#include <optional>
#include <vector>

#include "puiseux/equality.hpp"
#include "puiseux/encoding.hpp"

namespace puiseux {

/// Vertex of the convex hull of the encoded series' support: the slope of
/// an originating edge, a line-free cone with supp(phi) <= vertex + cone,
/// and whether the originating-edge test concluded (Equal) or ran out of
/// budget (Unknown).
struct SupportVertex {
    ExpVec vertex;
    Cone cone;
    bool verified = false;
    int edge_count = 0;  // admissible edges mapped onto this vertex
};

struct SupportHull {
    std::vector<SupportVertex> vertices;  // sorted
};

/// Vertices of conv(supp(phi)) via the edge surjection: expand every
/// admissible edge of the annihilator under an interior order of its
/// barrier cone and keep the edges whose branch equals the encoded series.
/// Edges are processed in `jobs` parallel workers when jobs > 1; the merge
/// is deterministic either way.
SupportHull hull_vertices(const SeriesEncoding& enc, int budget = 8, int jobs = 1);

/// Bounded faces for n <= 2: singletons plus the vertex pairs admitting a
/// supporting line with both cones on one closed side and no vertex
/// strictly beyond. Requires every vertex verified.
std::vector<std::vector<ExpVec>> bounded_faces(const SupportHull& hull);

struct RayWitness {
    ExpVec ray;
    std::optional<ExpVec> witness;  // support element on anchor + R>0 * ray
};

/// Searches refinements of enc for support elements on the open rays of
/// the bound's cone, certifying minimality ray by ray.
std::vector<RayWitness> minimality_witnesses(const SeriesEncoding& enc, const ConeBound& bound,
                                             int depth = 16);

}  // namespace puiseux
