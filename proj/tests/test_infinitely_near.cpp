#include <doctest.h>

#include "curvecomp/errors.hpp"
#include "curvecomp/infinitely_near.hpp"

using namespace curvecomp;

namespace {
PlaneCurve C(const char* s) { return PlaneCurve::parse(s); }
MultiPoly A(const char* s) { return parse_poly(s, xy()); }
const ProjPoint kOrigin(0, 0, 1);
const char* kQuintic = "(xz+y^2)*((xz+y^2)*z + 2*x^2*y) - x^5";

int genus_defect(int d, const std::vector<int>& m) {
    int s = (d - 1) * (d - 2);
    for (int v : m) s -= v * (v - 1);
    return s / 2;
}
}  // namespace

TEST_CASE("blow-up charts of a cusp") {
    BlowupCharts b = blow_up_chart(A("x^2 - y^3"), {0, 0}, 2);
    CHECK(b.chart_x == A("1 - x*y^3"));
    CHECK(b.chart_y == A("x^2 - y"));
    CHECK(b.multiplicity == 2);
    CHECK_THROWS_AS(blow_up_chart(A("x^2 - y^3"), {0, 0}, 3), Error);
}

TEST_CASE("blow-up of a smooth point and a node") {
    BlowupCharts s = blow_up_chart(A("y - x^2 + 1"), {1, 0}, 1);
    REQUIRE(s.cone.rational.size() == 1);
    CHECK(s.cone.rational[0].second == 1);
    BlowupCharts n = blow_up_chart(A("x*y"), {0, 0}, 2);
    CHECK(n.chart_x == A("y"));
    CHECK(n.chart_y == A("x"));
    CHECK(n.cone.rational.size() == 2);
}

TEST_CASE("blow-down inverts every chart") {
    for (const char* s : {"x^2 - y^3", "x*y + x^3 - 2*y^4", "(y - x^2)*(y + x^3)"}) {
        MultiPoly f = A(s);
        int m = f.min_total_degree();
        for (const Direction& d : {Direction::with_slope(0), Direction::with_slope(Rational(-2, 3)), Direction::vert()})
            CHECK(blow_down(strict_transform(f, d, m), d, m) == f);
    }
    MultiPoly g = A("(x-1)^2 - (y-2)^3");
    BlowupCharts b = blow_up_chart(g, {1, 2}, 2);
    CHECK(blow_down(b.chart_y, Direction::vert(), 2, {1, 2}) == g);
    CHECK(blow_down(b.chart_x, Direction::with_slope(0), 2, {1, 2}) == g);
}

TEST_CASE("multiplicity sequences") {
    auto cusp = multiplicity_sequence(C("x^2*z - y^3"), kOrigin);
    CHECK(cusp.entries == std::vector<int>{2});
    CHECK(cusp.branches == 1);
    CHECK_FALSE(cusp.branching);

    auto q = multiplicity_sequence(C(kQuintic), kOrigin);
    CHECK(q.entries == std::vector<int>{2, 2, 2, 2, 2, 2});
    CHECK(q.tree.is_chain());
    CHECK(q.branches == 1);

    auto node = multiplicity_sequence(C("x^2*z - y^3 - y^2*z"), kOrigin);
    CHECK(node.entries == std::vector<int>{2});
    CHECK(node.branches == 2);
}

TEST_CASE("branch counts") {
    CHECK(branch_count(C("x^2*z - y^3"), kOrigin) == 1);
    CHECK(branch_count(C("x^2*z - y^3 - y^2*z"), kOrigin) == 2);
    CHECK(branch_count(C("x*y + x*z + y*z"), ProjPoint(0, 1, 0)) == 1);
    // node with irrational tangents x^2 + y^2
    CHECK(branch_count(C("(x^2 + y^2)*z - y^3"), kOrigin) == 2);
    // tacnode y^2 = x^4 has a singular chain (2,2) and two branches
    auto tac = multiplicity_sequence(C("y^2*z^2 - x^4"), kOrigin);
    CHECK(tac.entries == std::vector<int>{2, 2});
    CHECK(tac.branches == 2);
}

TEST_CASE("branching chains are explored depth first") {
    // two higher cusps tangent to different lines: (y^2 - x^5)(x^2 - y^5) at the origin
    auto t = multiplicity_sequence(C("(y^2*z^3 - x^5)*(x^2*z^3 - y^5)"), kOrigin);
    CHECK(t.branching);
    CHECK(t.entries.front() == 4);
    CHECK(t.entries == std::vector<int>{4, 2, 2});
    CHECK(t.branches == 2);
    CHECK(t.tree[1].direction < t.tree[2].direction);
}

TEST_CASE("irrational singular points are reported") {
    // (y^2 - 2x^2)^2 - x^6: the strict transform is singular over the slopes ±sqrt 2
    try {
        multiplicity_sequence(C("(y^2 - 2*x^2)^2*z^2 - x^6"), kOrigin);
        FAIL("expected NonRationalInfinitelyNearPoint");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonRationalInfinitelyNearPoint);
        CHECK(e.detail().contains("chart_polynomial"));
    }
}

TEST_CASE("proximity matrix") {
    ClusterNode a;
    a.id = 0;
    ProximityTree single({a});
    CHECK(proximity_matrix(single) == std::vector<std::vector<int>>{{1}});

    std::vector<ClusterNode> chain(3);
    for (int i = 0; i < 3; ++i) {
        chain[i].id = i;
        if (i > 0) {
            chain[i].parent = i - 1;
            chain[i].proximate_to = {i - 1};
        }
    }
    auto P = proximity_matrix(ProximityTree(chain));
    CHECK(P == std::vector<std::vector<int>>{{1, 0, 0}, {-1, 1, 0}, {0, -1, 1}});

    chain[2].proximate_to = {0, 1};
    auto S = proximity_matrix(ProximityTree(chain));
    CHECK(S[2][0] == -1);
    CHECK(S[2][1] == -1);
}

TEST_CASE("satellite proximity is detected from equations") {
    // cusp y^2 = x^3: p1 mult 2, then the free point p2 and the satellite p3 on E1 and E2
    PlaneCurve c = C("y^2*z - x^3");
    LocalFrame f0 = LocalFrame::at_point({{"C", c.poly()}}, kOrigin);
    CHECK(f0.multiplicity("C") == 2);
    LocalFrame f1 = f0.blow_up(Direction::with_slope(0), "E1");
    CHECK(f1.multiplicity("C") == 1);
    Direction d1 = f1.direction_of("C");
    LocalFrame f2 = f1.blow_up(d1, "E2");
    CHECK(f2.contains("E1"));
    CHECK(f2.contains("E2"));
    CHECK(f2.contains("C"));
}

TEST_CASE("tree JSON round trip") {
    auto q = multiplicity_sequence(C(kQuintic), kOrigin);
    auto j = q.tree.to_json();
    auto back = ProximityTree::from_json(j);
    CHECK(back.to_json() == j);
    CHECK(j["nodes"][0]["parent"].is_null());
    CHECK_THROWS_AS(ProximityTree::from_json(nlohmann::json::parse(R"({"nodes":[{"id":1}]})")), Error);
}

TEST_CASE("genus consistency and proximity inequality on the corpus curves") {
    struct Item {
        const char* eq;
        int branches;
    };
    for (const Item& it : {Item{"x^2*z - y^3", 1}, Item{"x^2*z - y^3 - y^2*z", 2}, Item{kQuintic, 1}}) {
        PlaneCurve c = C(it.eq);
        auto seq = multiplicity_sequence(c, kOrigin);
        CHECK(genus_defect(c.degree(), seq.entries) == 0);
        CHECK(seq.entries.front() == multiplicity_at(c, kOrigin));
        CHECK(seq.branches == it.branches);
        for (size_t i = 0; i < seq.tree.size(); ++i) {
            int s = 0;
            for (int j : seq.tree.proximate_successors(static_cast<int>(i))) s += seq.tree[j].multiplicity;
            CHECK(seq.tree[i].multiplicity >= s);
        }
    }
}
