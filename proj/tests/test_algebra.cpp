#include <doctest.h>

#include "curvecomp/errors.hpp"
#include "curvecomp/poly.hpp"
#include "curvecomp/upoly.hpp"

using namespace curvecomp;

namespace {
MultiPoly P(const char* s, const std::vector<std::string>& v = xyz()) { return parse_poly(s, v); }
}

TEST_CASE("rational parsing and printing") {
    CHECK(to_string(parse_rational("6/4")) == "3/2");
    CHECK(to_string(parse_rational("-10/5")) == "-2");
    CHECK(parse_rational(" 7 ") == 7);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("a/2"), Error);
    Rational q = parse_rational("2/3") + parse_rational("1/6");
    CHECK(to_string(q) == "5/6");
}

TEST_CASE("parser accepts implicit products and prints canonically") {
    CHECK(P("x^2*z - y^3").to_string() == "x^2*z - y^3");
    CHECK(P("xz+y^2").to_string() == "x*z + y^2");
    CHECK(P("(x+y)(x-y)").to_string() == "x^2 - y^2");
    CHECK(P("3/2*x*y").to_string() == "3/2*x*y");
    CHECK(P("x/2").to_string() == "1/2*x");
    CHECK(P("-x + 1").to_string() == "-x + 1");
    CHECK(P("2x^2").to_string() == "2*x^2");
    CHECK(P("0").to_string() == "0");
    CHECK_THROWS_AS(P("x/y"), Error);
    CHECK_THROWS_AS(P("w+1"), Error);
    CHECK_THROWS_AS(P("(x+1"), Error);
}

TEST_CASE("printing round-trips") {
    for (const char* s : {"x^2*z - y^3", "(xz+y^2)*((xz+y^2)*z + 2*x^2*y) - x^5", "1/3*x - 5/7*y*z + 2",
                          "x*y + x*z + y*z"}) {
        MultiPoly p = P(s);
        CHECK(parse_poly(p.to_string()) == p);
    }
}

TEST_CASE("gcd") {
    CHECK(gcd(P("x^2-y^2"), P("x-y")) == P("x-y"));
    MultiPoly F = P("3*x^2*y + 6*z^3");
    CHECK(gcd(F, MultiPoly(xyz())) == primitive_part(F));
    CHECK(gcd(P("x^2*(x*z+2*y^2)"), P("x^3*y")) == P("x^2"));
    CHECK(gcd(P("(x+y)^3*(x-z)"), P("(x+y)*(x-z)^2*(y+2*z)")) == P("(x+y)*(x-z)"));
    CHECK(gcd(P("x^2+y^2"), P("x-y")).is_constant());
    MultiPoly h = P("x*z+y^2");
    CHECK(gcd(h.pow(4) * P("x"), h.pow(3) * P("y")) == h.pow(3));
}

TEST_CASE("primitive part normalizes sign and content") {
    CHECK(primitive_part(P("-4*x + 6*y")) == P("2*x - 3*y"));
    CHECK(primitive_part(P("1/2*x^2 + 1/3*y^2")) == P("3*x^2 + 2*y^2"));
}

TEST_CASE("resultant") {
    CHECK(resultant(P("x-y"), P("x+y"), 0) == P("2*y"));
    CHECK(resultant(P("y^2-x"), P("y"), 1) == P("-x"));
    CHECK_THROWS_AS(resultant(P("0"), P("x"), 0), Error);
    MultiPoly r = resultant(P("x*y+x*z+y*z"), P("x^2-3*x*y-2*x*z-3*y*z"), 0);
    CHECK(r == P("-y*z^3"));
    // the triple contact at [0:1:0] shows up in the y = 1 chart as a triple root z = 0
    UPoly u = UPoly::from_multi(r.evaluate_var(1, 1), 2);
    auto roots = rational_roots(u);
    REQUIRE(roots.size() == 1);
    CHECK(roots[0].first == 0);
    CHECK(roots[0].second == 3);
}

TEST_CASE("exact division") {
    CHECK(exact_divide(P("x^2-y^2"), P("x-y")) == P("x+y"));
    CHECK_THROWS_AS(exact_divide(P("x^2+y^2"), P("x-y")), Error);
    try {
        exact_divide(P("x^2+y^2"), P("x-y"));
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotDivisible);
    }
}

TEST_CASE("substitute") {
    std::map<std::string, MultiPoly> dehom{{"x", P("x")}, {"y", P("y")}, {"z", P("1")}};
    CHECK(substitute(P("x^2*z-y^3"), dehom) == P("x^2-y^3"));
    std::vector<MultiPoly> theta1{P("x^2"), P("x*y"), P("x*z+y^2")};
    CHECK(substitute(P("z"), theta1) == P("x*z+y^2"));
    std::vector<MultiPoly> chart{P("x*y", xy()), P("y", xy())};
    MultiPoly t = substitute(P("x^2-y^3", xy()), chart);
    CHECK(exact_divide(t, P("y^2", xy())) == P("x^2-y", xy()));
}

TEST_CASE("univariate tools") {
    UPoly p = UPoly::from_multi(P("(x-1)^3*(2*x+3)*(x^2+1)"), 0);
    auto sq = squarefree_decomposition(p);
    REQUIRE(sq.size() == 2);
    CHECK(sq[1].second == 3);
    auto roots = rational_roots(p);
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].first == Rational(-3, 2));
    CHECK(roots[0].second == 1);
    CHECK(roots[1].first == 1);
    CHECK(roots[1].second == 3);
    CHECK(deflate_rational_roots(p).degree() == 2);
    UPoly big = UPoly::from_multi(P("(1000*x - 999)*(x+77/13)*x"), 0);
    CHECK(rational_roots(big).size() == 3);
}

TEST_CASE("squarefree test uses all partials") {
    CHECK(is_squarefree(P("x*y")));
    CHECK(is_squarefree(P("x^2*z - y^3")));
    CHECK_FALSE(is_squarefree(P("x^2*y")));
    CHECK_FALSE(is_squarefree(P("(x*z+y^2)^2*x")));
}
