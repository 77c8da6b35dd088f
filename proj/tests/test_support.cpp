#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "hull_oracle.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/parse.hpp"
#include "puiseux/support.hpp"
#include "test_util.hpp"

using namespace puiseux;
using testutil::pp;
using testutil::yp;

namespace {

ExpVec ev(std::vector<long> v) {
    ExpVec e(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) e[i] = Rational(v[i]);
    return e;
}

Edge edge(std::vector<long> a, std::vector<long> b) {
    ExpVec va = ev(a), vb = ev(b);
    return va < vb ? Edge{va, vb} : Edge{vb, va};
}

const char* kEq2 = "x + y - (1+x+y)*z";

SeriesEncoding series_of_ratio() {
    // the series of (x+y)/(1+x+y) with small x, y
    auto encs = encode(yp(kEq2), edge({0, 0, 1}, {1, 0, 0}), parse_order("(-1+1/2*sqrt(2),-2)"),
                       0, {"x", "y"}, "z");
    REQUIRE(encs.size() == 1);
    return encs[0];
}

}  // namespace

TEST_CASE("support hull of the rational-function series") {
    SeriesEncoding enc = series_of_ratio();
    SupportHull hull = hull_vertices(enc, 8);
    REQUIRE(hull.vertices.size() == 2);
    CHECK(hull.vertices[0].vertex == ev({0, 1}));
    CHECK(hull.vertices[1].vertex == ev({1, 0}));
    CHECK(hull.vertices[0].verified);
    CHECK(hull.vertices[1].verified);
    CHECK(hull.vertices[1].cone == Cone(2, {ev({1, 0}), ev({-1, 1})}));
    CHECK(hull.vertices[0].cone == Cone(2, {ev({0, 1}), ev({1, -1})}));

    auto faces = bounded_faces(hull);
    // two singletons plus the segment
    REQUIRE(faces.size() == 3);
    CHECK(faces[0] == std::vector<ExpVec>{ev({0, 1})});
    CHECK(faces[1] == std::vector<ExpVec>{ev({1, 0})});
    CHECK((faces[2] == std::vector<ExpVec>{ev({0, 1}), ev({1, 0})} ||
           faces[2] == std::vector<ExpVec>{ev({1, 0}), ev({0, 1})}));
}

TEST_CASE("support hull of a constant-leading expansion") {
    YPoly p = yp(kEq2);
    auto encs = encode(p, edge({0, 1, 0}, {0, 1, 1}), parse_order("(-1+1/2*sqrt(2),1)"), 0,
                       {"x", "y"}, "z");
    REQUIRE(encs.size() == 1);
    SupportHull hull = hull_vertices(encs[0], 8);
    REQUIRE(hull.vertices.size() == 1);
    CHECK(hull.vertices[0].vertex == ev({0, 0}));
    CHECK(hull.vertices[0].verified);
}

TEST_CASE("geometric series: primitive part tightens the bound") {
    YPoly with_content = yp("(1-x)*((1-y)*z - 1)");
    YPoly primitive = primitive_part(with_content);
    CHECK(primitive == yp("(1-y)*z - 1"));

    OrderSpec w = parse_order("(-1,-1)");
    // expansion without removing the content
    NewtonPolytope np1 = newton_polytope(with_content);
    std::optional<Edge> e1;
    for (const auto& e : np1.admissible_edges())
        if (-slope(e) == ev({0, 0}) && dual_contains(barrier_cone(with_content, e), w)) e1 = e;
    REQUIRE(e1.has_value());
    ExpansionResult raw = expand(with_content, *e1, w, 2);
    REQUIRE(raw.branches.size() == 1);
    Cone raw_cone = raw.branches[0].bound.cone;

    NewtonPolytope np2 = newton_polytope(primitive);
    std::optional<Edge> e2;
    for (const auto& e : np2.admissible_edges())
        if (-slope(e) == ev({0, 0}) && dual_contains(barrier_cone(primitive, e), w)) e2 = e;
    REQUIRE(e2.has_value());
    ExpansionResult tight = expand(primitive, *e2, w, 2);
    REQUIRE(tight.branches.size() == 1);
    Cone tight_cone = tight.branches[0].bound.cone;

    CHECK(tight.branches[0].truncation == pp("1 + y"));
    CHECK(tight_cone == Cone(2, {ev({0, 1})}));
    CHECK(raw_cone == Cone(2, {ev({1, 0}), ev({0, 1})}));
    // strict containment
    for (const auto& g : tight_cone.generators()) CHECK(raw_cone.contains(g));
    bool all_inside = true;
    for (const auto& g : raw_cone.generators())
        if (!tight_cone.contains(g)) all_inside = false;
    CHECK_FALSE(all_inside);

    // the hull of the geometric series has the single vertex (0,0) with the
    // y-direction cone
    auto encs = encode(primitive, *e2, w, 0, {"x", "y"}, "z");
    REQUIRE(encs.size() == 1);
    SupportHull hull = hull_vertices(encs[0], 8);
    REQUIRE(hull.vertices.size() == 1);
    CHECK(hull.vertices[0].vertex == ev({0, 0}));
    CHECK(hull.vertices[0].cone == Cone(2, {ev({0, 1})}));
}

TEST_CASE("minimality witnesses of the quadratic example") {
    YPoly p = yp("1 + x + y + (1 + x*y + 2*y)*z + y*z^2");
    OrderSpec w = parse_order("(-1+1/2*sqrt(2),-1)");
    auto encs = encode(p, edge({0, 0, 0}, {0, 0, 1}), w, 0, {"x", "y"}, "z");
    REQUIRE(encs.size() == 1);
    SeriesEncoding enc = refine(encs[0], 3);
    CHECK(enc.truncation == pp("-1 - x + x*y"));
    CHECK(enc.bound.exceptional == std::vector<ExpVec>{ev({0, 0}), ev({1, 0})});
    CHECK(enc.bound.anchor == ev({1, 1}));
    CHECK(enc.bound.cone == Cone(2, {ev({1, 1}), ev({1, 2})}));

    SeriesEncoding deeper = refine(enc, 5);
    CHECK(deeper.truncation == pp("-1 - x + x*y + x^2*y^2 - x^2*y^3"));

    auto report = minimality_witnesses(encs[0], enc.bound, 16);
    REQUIRE(report.size() == 2);
    for (const auto& rw : report) {
        REQUIRE(rw.witness.has_value());
        if (rw.ray == ev({1, 1})) CHECK(*rw.witness == ev({2, 2}));
        if (rw.ray == ev({1, 2})) CHECK(*rw.witness == ev({2, 3}));
    }
}

TEST_CASE("witness search reports NotFound on a loose bound") {
    // the same series bounded by the loose stage-2 cone <(1,1),(0,1)>
    YPoly p = yp("1 + x + y + (1 + x*y + 2*y)*z + y*z^2");
    OrderSpec w = parse_order("(-1+1/2*sqrt(2),-1)");
    auto encs = encode(p, edge({0, 0, 0}, {0, 0, 1}), w, 0, {"x", "y"}, "z");
    SeriesEncoding two = refine(encs[0], 2);
    CHECK(two.bound.anchor == ev({1, 0}));
    CHECK(two.bound.cone == Cone(2, {ev({1, 1}), ev({0, 1})}));
    // loose variant: <(1,0),(0,1)> anchored at the leading exponent; the
    // expansion never meets the ray through (0,1) from (0,0)
    ConeBound loose;
    loose.anchor = ev({0, 0});
    loose.cone = Cone(2, {ev({1, 0}), ev({0, 1})});
    auto report = minimality_witnesses(encs[0], loose, 6);
    bool some_missing = false;
    for (const auto& rw : report)
        if (!rw.witness) some_missing = true;
    CHECK(some_missing);

    // zero cone: vacuously witnessed
    ConeBound zero;
    zero.anchor = ev({0, 0});
    zero.cone = Cone::zero(2);
    CHECK(minimality_witnesses(encs[0], zero, 2).empty());
}

TEST_CASE("hull vertices agree with the brute-force hull of many terms") {
    // geometric series in y: supp = {(0,k)}; hull vertex (0,0)
    YPoly p = yp("(1-y)*z - 1");
    OrderSpec w = parse_order("(-1,-1)");
    NewtonPolytope np = newton_polytope(p);
    std::optional<Edge> e;
    for (const auto& ed : np.admissible_edges())
        if (-slope(ed) == ev({0, 0}) && dual_contains(barrier_cone(p, ed), w)) e = ed;
    auto encs = encode(p, *e, w, 0, {"x", "y"}, "z");
    SeriesEncoding enc = refine(encs[0], 40);
    std::vector<ExpVec> pts = enc.truncation.support();
    auto brute = hulloracle::oracle_vertices(pts);
    // brute-force on a truncation reports the artificial tail vertex too;
    // the true hull vertices are those of the infinite series
    SupportHull hull = hull_vertices(enc, 8);
    REQUIRE(hull.vertices.size() == 1);
    CHECK(hull.vertices[0].vertex == ev({0, 0}));
    CHECK(std::find(brute.begin(), brute.end(), ev({0, 0})) != brute.end());

    // and the series of (x+y)/(1+x+y): vertices (1,0),(0,1) appear among
    // the brute-force vertices of the first terms
    SeriesEncoding enc2 = refine(series_of_ratio(), 30);
    auto brute2 = hulloracle::oracle_vertices(enc2.truncation.support());
    CHECK(std::find(brute2.begin(), brute2.end(), ev({1, 0})) != brute2.end());
    CHECK(std::find(brute2.begin(), brute2.end(), ev({0, 1})) != brute2.end());
    SupportHull hull2 = hull_vertices(enc2, 8);
    std::set<ExpVec> got;
    for (const auto& sv : hull2.vertices) got.insert(sv.vertex);
    CHECK(got == std::set<ExpVec>{ev({1, 0}), ev({0, 1})});
}

TEST_CASE("vertex count bounded by admissible edge count") {
    SeriesEncoding enc = series_of_ratio();
    SupportHull hull = hull_vertices(enc, 8);
    NewtonPolytope np = newton_polytope(enc.annihilator);
    CHECK(hull.vertices.size() <= np.admissible_edges().size());
    // every vertex is the order-maximum of its defining expansion
    for (const auto& sv : hull.vertices) CHECK(sv.verified);
}
