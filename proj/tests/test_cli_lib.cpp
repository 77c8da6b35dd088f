#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "puiseux/errors.hpp"
#include "puiseux/parse.hpp"
#include "puiseux/support.hpp"
#include "puiseux/svg.hpp"
#include "test_util.hpp"

using namespace puiseux;
using testutil::pp;
using testutil::yp;

TEST_CASE("expression parsing of the worked inputs") {
    YPoly ex1 = yp("4*x^2*y + (x^2*y + x*y^2 + x*y + y)^2 - z^2");
    CHECK(ex1.degree() == 2);
    CHECK(ex1.coeff(2) == pp("-1"));
    CHECK(ex1.coeff(0).term_count() == 10);

    YPoly ex2 = parse_expression("x + y - (1+x+y)*z", {"x", "y"}, "z");
    CHECK(ex2.degree() == 1);
    CHECK(ex2.coeff(1) == pp("-1 - x - y"));
}

TEST_CASE("parse failure positions") {
    try {
        parse_puiseux("x +", {"x", "y"});
        FAIL("expected a syntax error");
    } catch (const SyntaxError& e) {
        CHECK(e.position == 3);
    }
    CHECK_THROWS_AS(parse_expression("x + w", {"x", "y"}, "z"), UnknownVariable);
    CHECK_THROWS_AS(parse_expression("x + x", {"x"}, "x"), UnknownVariable);
    CHECK_THROWS_AS(parse_puiseux("x/(y)", {"x", "y"}), SyntaxError);
    CHECK_THROWS_AS(parse_puiseux("(x+y)^(1/2)", {"x", "y"}), SyntaxError);
}

TEST_CASE("order spec parsing") {
    CHECK(parse_order("(-sqrt(2),-1)").rows().size() == 1);
    CHECK(parse_order("(-1+1/2*sqrt(2),-2)").radicand() == 2);
    OrderSpec one_over = parse_order("(-1+1/sqrt(2),-2)");
    CHECK(one_over == parse_order("(-1+1/2*sqrt(2),-2)"));  // 1/sqrt(2) = (1/2) sqrt(2)
    OrderSpec multi = parse_order("(-1,-1);(1,0);(0,1)");
    CHECK(multi.rows().size() == 3);
    CHECK(multi.is_total());
    OrderSpec rational_row = parse_order("(-1,-2)");  // completed with tie-breaks
    CHECK(rational_row.rows().size() == 3);
    CHECK_THROWS_AS(parse_order("(-sqrt(2)"), SyntaxError);
}

TEST_CASE("svg output is deterministic and well-formed") {
    auto encs = encode(yp("x + y - (1+x+y)*z"),
                       Edge{ExpVec{Rational(0), Rational(0), Rational(1)},
                            ExpVec{Rational(1), Rational(0), Rational(0)}},
                       parse_order("(-1+1/2*sqrt(2),-2)"), 0, {"x", "y"}, "z");
    REQUIRE(encs.size() == 1);
    SupportHull hull = hull_vertices(encs[0], 8);
    auto faces = bounded_faces(hull);
    std::string a = render_svg(hull, faces);
    std::string b = render_svg(hull, faces);
    CHECK(a == b);
    CHECK(a.rfind("<svg", 0) == 0);
    CHECK(a.find("circle") != std::string::npos);
    CHECK(a.find("wedge") != std::string::npos);
    CHECK(a.find("face") != std::string::npos);

    std::string c = render_svg(encs[0].bound);
    CHECK(c.rfind("<svg", 0) == 0);

    // single dot, zero cone
    SeriesEncoding z = zero_encoding(2, parse_order("(-sqrt(2),-1)"), {"x", "y"}, "z");
    std::string d = render_svg(z.bound);
    CHECK(d.find("circle") != std::string::npos);
    CHECK(d.find("wedge") == std::string::npos);
}
