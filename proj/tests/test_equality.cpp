#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "puiseux/equality.hpp"
#include "puiseux/errors.hpp"
#include "puiseux/parse.hpp"
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

const char* kEq1 = "4*x^2*y + (x^2*y + x*y^2 + x*y + y)^2 - z^2";
const char* kEq2 = "x + y - (1+x+y)*z";

SeriesEncoding enc_of(const char* poly, std::vector<long> a, std::vector<long> b,
                      const char* order, int k = 0) {
    auto encs = encode(yp(poly), edge(a, b), parse_order(order), k, {"x", "y"}, "z");
    REQUIRE(encs.size() == 1);
    return encs[0];
}

}  // namespace

TEST_CASE("the two encodings of one series are judged Equal") {
    SeriesEncoding ex = enc_of(kEq2, {0, 0, 1}, {1, 0, 0}, "(-1+1/2*sqrt(2),-2)");
    SeriesEncoding ey = enc_of(kEq2, {0, 0, 1}, {0, 1, 0}, "(-2+1/2*sqrt(2),-1)");
    EqualityVerdict v = equal(ex, ey, 8);
    CHECK(v.value == Verdict::Equal);
    REQUIRE(v.certificate.has_value());
    CHECK(v.certificate->sum_line_free);
    // the certificate order is compatible with both cone bounds
    CHECK(dual_contains(v.certificate->cone1, v.certificate->common_order));
    CHECK(dual_contains(v.certificate->cone2, v.certificate->common_order));
    // symmetric verdict
    CHECK(equal(ey, ex, 8).value == Verdict::Equal);
}

TEST_CASE("opposite branches are judged NotEqual with the leading witness") {
    YPoly p = yp(kEq1);
    auto encs = encode(p, edge({0, 2, 0}, {0, 0, 2}), parse_order("(-sqrt(2),-1)"), 0,
                       {"x", "y"}, "z");
    REQUIRE(encs.size() == 2);
    EqualityVerdict v = equal(encs[0], encs[1], 8);
    CHECK(v.value == Verdict::NotEqual);
    REQUIRE(v.witness_exponent.has_value());
    CHECK(*v.witness_exponent == ev({0, 1}));
    CHECK(((v.witness_coeff1 == Rational(1) && v.witness_coeff2 == Rational(-1)) ||
           (v.witness_coeff1 == Rational(-1) && v.witness_coeff2 == Rational(1))));
    CHECK(equal(encs[1], encs[0], 8).value == Verdict::NotEqual);
}

TEST_CASE("reflexivity") {
    SeriesEncoding ex = enc_of(kEq2, {0, 0, 1}, {1, 0, 0}, "(-1+1/2*sqrt(2),-2)");
    EqualityVerdict v = equal(ex, ex, 8);
    CHECK(v.value == Verdict::Equal);
    CHECK(v.certificate.has_value());
}

TEST_CASE("the different inverse expansions are distinct series") {
    SeriesEncoding big_y = enc_of(kEq2, {0, 1, 0}, {0, 1, 1}, "(-1+1/2*sqrt(2),1)");
    SeriesEncoding big_x = enc_of(kEq2, {1, 0, 0}, {1, 0, 1}, "(1-1/2*sqrt(2),-1)");
    SeriesEncoding small_x = enc_of(kEq2, {0, 0, 1}, {1, 0, 0}, "(-1+1/2*sqrt(2),-2)");
    CHECK(equal(big_y, big_x, 8).value == Verdict::NotEqual);
    CHECK(equal(big_y, small_x, 8).value == Verdict::NotEqual);
    CHECK(equal(big_x, small_x, 8).value == Verdict::NotEqual);
}

TEST_CASE("coprime annihilators decide immediately") {
    SeriesEncoding a = enc_of(kEq2, {0, 0, 1}, {1, 0, 0}, "(-1+1/2*sqrt(2),-2)");
    YPoly q = yp("z - 1");
    NewtonPolytope np = newton_polytope(q);
    auto encs = encode(q, np.edges()[0], parse_order("(-sqrt(2),-1)"), 0, {"x", "y"}, "z");
    EqualityVerdict v = equal(a, encs[0], 8);
    CHECK(v.value == Verdict::NotEqual);
}

TEST_CASE("same series under different annihilators") {
    // phi = 1/(1-y) annihilated by (1-y)z - 1 and by (1-y)^2 z^2 ... use a
    // genuinely different square-free multiple: ((1-y)z - 1)(z - 3)
    YPoly p1 = yp("(1-y)*z - 1");
    YPoly p2 = yp("((1-y)*z - 1)*(z - 3)");
    OrderSpec w = parse_order("(-1,-1)");
    NewtonPolytope np1 = newton_polytope(p1);
    std::optional<Edge> e1;
    for (const auto& e : np1.admissible_edges())
        if (-slope(e) == ev({0, 0}) && dual_contains(barrier_cone(p1, e), w)) e1 = e;
    REQUIRE(e1.has_value());
    auto encs1 = encode(p1, *e1, w, 0, {"x", "y"}, "z");
    REQUIRE(encs1.size() == 1);

    NewtonPolytope np2 = newton_polytope(p2);
    std::vector<SeriesEncoding> all2;
    for (const auto& e : np2.admissible_edges()) {
        if (!(-slope(e) == ev({0, 0}))) continue;
        if (!dual_contains(barrier_cone(p2, e), w)) continue;
        for (auto& enc : encode(p2, e, w, 0, {"x", "y"}, "z")) all2.push_back(enc);
    }
    // two constant-leading roots: 1/(1-y) = 1 + y + ... and the exact root 3
    REQUIRE(all2.size() == 2);
    int equal_count = 0, notequal_count = 0;
    for (const auto& enc2 : all2) {
        EqualityVerdict v = equal(encs1[0], enc2, 8);
        if (v.value == Verdict::Equal) ++equal_count;
        if (v.value == Verdict::NotEqual) ++notequal_count;
    }
    CHECK(equal_count == 1);
    CHECK(notequal_count == 1);
}

TEST_CASE("witness is stable under extra refinement") {
    YPoly p = yp(kEq1);
    auto encs = encode(p, edge({0, 2, 0}, {0, 0, 2}), parse_order("(-sqrt(2),-1)"), 0,
                       {"x", "y"}, "z");
    EqualityVerdict v = equal(encs[0], encs[1], 8);
    REQUIRE(v.witness_exponent.has_value());
    SeriesEncoding r1 = refine(encs[0], 3), r2 = refine(encs[1], 3);
    CHECK(certain_coeff(r1, *v.witness_exponent).value() == v.witness_coeff1);
    CHECK(certain_coeff(r2, *v.witness_exponent).value() == v.witness_coeff2);
}

TEST_CASE("zero series comparisons") {
    OrderSpec w = parse_order("(-sqrt(2),-1)");
    SeriesEncoding z1 = zero_encoding(2, w, {"x", "y"}, "z");
    SeriesEncoding z2 = zero_encoding(2, parse_order("(-1,-2)"), {"x", "y"}, "z");
    CHECK(equal(z1, z2, 2).value == Verdict::Equal);
    SeriesEncoding ex = enc_of(kEq2, {0, 0, 1}, {1, 0, 0}, "(-1+1/2*sqrt(2),-2)");
    CHECK(equal(z1, ex, 4).value == Verdict::NotEqual);
    CHECK(equal(ex, z1, 4).value == Verdict::NotEqual);
}

TEST_CASE("branches of one expansion are pairwise NotEqual") {
    YPoly p = yp("(z - x)*(z - x - x^2)*(z - 2*x)", {"x"});
    OrderSpec w = parse_order("(-1)");
    NewtonPolytope np = newton_polytope(p);
    std::vector<SeriesEncoding> encs;
    for (const auto& e : np.admissible_edges()) {
        if (!dual_contains(barrier_cone(p, e), w)) continue;
        for (auto& enc : encode(p, e, w, 0, {"x"}, "z")) encs.push_back(enc);
    }
    REQUIRE(encs.size() == 3);
    for (std::size_t i = 0; i < encs.size(); ++i)
        for (std::size_t j = i + 1; j < encs.size(); ++j)
            CHECK(equal(encs[i], encs[j], 8).value == Verdict::NotEqual);
}
