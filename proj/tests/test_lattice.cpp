#include <doctest.h>

#include "curvecomp/errors.hpp"
#include "curvecomp/lattice.hpp"

using namespace curvecomp;

namespace {
DivisorClass D(long d, const std::vector<long>& m) { return DivisorClass::from_ints(d, m); }

ProximityTree tree_from(const std::vector<std::vector<int>>& prox) {
    std::vector<ClusterNode> nodes(prox.size());
    for (size_t i = 0; i < prox.size(); ++i) {
        nodes[i].id = static_cast<int>(i);
        nodes[i].proximate_to = prox[i];
        if (!prox[i].empty()) nodes[i].parent = prox[i].back();
    }
    return ProximityTree(nodes);
}
}  // namespace

TEST_CASE("intersection form and canonical class") {
    BlowupLattice L = BlowupLattice::free_points(4);
    CHECK(self_intersection(L.line()) == 1);
    CHECK(self_intersection(L.total_exceptional(2)) == -1);
    CHECK(pairwise_intersection(L.line(), L.total_exceptional(0)) == 0);
    CHECK(pairwise_intersection(L.total_exceptional(0), L.total_exceptional(1)) == 0);
    for (size_t n : {0u, 1u, 6u, 9u}) {
        BlowupLattice M = BlowupLattice::free_points(n);
        CHECK(self_intersection(M.canonical()) == 9 - static_cast<long>(n));
    }
    CHECK(D(8, {3, 3, 0}).to_string() == "8H - 3e1 - 3e2");
    CHECK(D(0, {-1, 1}).to_string() == "e1 - e2");
}

TEST_CASE("exceptional classes") {
    BlowupLattice free = BlowupLattice::free_points(2);
    CHECK(exceptional_class(free, 1) == D(0, {0, -1}));
    CHECK(self_intersection(exceptional_class(free, 1)) == -1);

    BlowupLattice chain = BlowupLattice::free_chain(3);
    CHECK(exceptional_class(chain, 0) == D(0, {-1, 1, 0}));
    CHECK(self_intersection(exceptional_class(chain, 0)) == -2);
    CHECK(self_intersection(exceptional_class(chain, 2)) == -1);

    // p8, p9, p10 all proximate to p7: E7 = e7 − e8 − e9 − e10
    BlowupLattice star(tree_from({{}, {}, {}, {2}, {}, {4}, {5}, {6}, {6, 7}, {6, 8}}));
    CHECK(self_intersection(exceptional_class(star, 6)) == -4);
}

TEST_CASE("curve classes and pairings") {
    BlowupLattice five = BlowupLattice::free_points(5);
    CHECK(self_intersection(curve_class(five, 2, {1, 1, 1, 1, 1})) == -1);
    CHECK(self_intersection(curve_class(BlowupLattice::free_points(7), 8, {3, 3, 3, 3, 3, 3, 3})) == 1);
    CHECK(self_intersection(curve_class(BlowupLattice::free_points(0), 1, {})) == 1);
    CHECK_THROWS_AS(curve_class(five, 2, {1, 1, 1, 1, 1, 1}), Error);

    // chain ending at node k with multiplicity m: C_k · E_k = m
    BlowupLattice chain = BlowupLattice::free_chain(3);
    DivisorClass c = curve_class(chain, 5, {2, 2, 2});
    CHECK(pairwise_intersection(c, exceptional_class(chain, 2)) == 2);
    CHECK(pairwise_intersection(c, exceptional_class(chain, 0)) == 0);
}

TEST_CASE("adjunction genus") {
    CHECK(adjunction_genus(D(1, {})) == 0);
    CHECK(adjunction_genus(D(5, {2, 2, 2, 2, 2, 2})) == 0);
    CHECK(adjunction_genus(D(8, {3, 3, 3, 3, 3, 3, 3})) == 0);
    CHECK(adjunction_genus(D(3, {})) == 1);
    CHECK(adjunction_genus(D(0, {-1})) == 0);
    CHECK(adjunction_genus(D(4, {2})) == 2);
}

TEST_CASE("minus one towers") {
    BlowupLattice q = BlowupLattice::free_chain(6);
    auto t = verify_minus_one_tower(q, curve_class(q, 5, {2, 2, 2, 2, 2, 2}), true);
    CHECK(t.ok);
    CHECK(t.terminal == -1);
    CHECK(t.points == 8);
    CHECK_FALSE(verify_minus_one_tower(q, curve_class(q, 5, {2, 2, 2, 2, 2, 2})).ok);

    BlowupLattice cusp = BlowupLattice::free_chain(1);
    auto c = verify_minus_one_tower(cusp, curve_class(cusp, 3, {2}), true);
    CHECK(c.ok);
    CHECK(c.points == 7);
    CHECK(c.trace.back() == -1);

    BlowupLattice two = BlowupLattice::free_chain(2);
    auto zero = verify_minus_one_tower(two, curve_class(two, 2, {1, 1}));
    CHECK(zero.terminal == 2);
    CHECK_FALSE(zero.ok);
    BlowupLattice four = BlowupLattice::free_chain(4);
    CHECK_FALSE(verify_minus_one_tower(four, curve_class(four, 2, {1, 1, 1, 1})).ok);
    BlowupLattice free = BlowupLattice::free_points(5);
    CHECK_FALSE(verify_minus_one_tower(free, curve_class(free, 2, {1, 1, 1, 1, 1})).ok);
    CHECK(verify_minus_one_tower(BlowupLattice::free_chain(5), curve_class(BlowupLattice::free_chain(5), 2, {1, 1, 1, 1, 1})).ok);
}

TEST_CASE("SNC tree check") {
    BlowupLattice chain = BlowupLattice::free_chain(4);
    std::vector<DivisorClass> es;
    for (size_t i = 0; i < 4; ++i) es.push_back(exceptional_class(chain, i));
    auto v = snc_tree_check(es);
    CHECK(v.ok);
    CHECK(v.edges.size() == 3);

    auto tangent = snc_tree_check({D(1, {}), D(2, {})});
    CHECK_FALSE(tangent.ok);
    CHECK(tangent.reason.find("product 2") != std::string::npos);
    // the triangle of lines through three points is a cycle
    auto tri = snc_tree_check({D(1, {1, 1, 0}), D(1, {0, 1, 1}), D(1, {1, 0, 1})});
    CHECK_FALSE(tri.ok);
    CHECK_FALSE(snc_tree_check({D(0, {-1, 0}), D(0, {0, -1})}).ok);
}

TEST_CASE("contraction steps") {
    BlowupLattice L = BlowupLattice::free_points(2);
    ContractionState s = initial_state(L, {{"E1", exceptional_class(L, 0)},
                                            {"E2", exceptional_class(L, 1)},
                                            {"C", curve_class(L, 2, {1, 0})},
                                            {"Line", L.line()}});
    ContractionState t = contract_step(s, "E2");
    CHECK(t.rank() == 2);
    CHECK(t.classes.at("C") == s.classes.at("C"));
    CHECK(t.classes.at("Line") == s.classes.at("Line"));
    CHECK(self_intersection(t.canonical) == self_intersection(s.canonical) + 1);
    ContractionState u = contract_step(t, "E1");
    CHECK(self_intersection(u.classes.at("C")) == 4);
    CHECK(adjunction_genus(u.classes.at("C")) == 0);
    auto prof = pushforward_multiplicity_profile(u, "C");
    CHECK(prof.degree == 2);
    CHECK(prof.multiplicities == std::vector<Integer>{1, 0});

    BlowupLattice chain = BlowupLattice::free_chain(2);
    ContractionState c = initial_state(chain, {{"E1", exceptional_class(chain, 0)}, {"E2", exceptional_class(chain, 1)}});
    try {
        contract_step(c, "E1");
        FAIL("expected NotContractible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotContractible);
        CHECK(e.detail()["self_intersection"] == -2);
        CHECK(e.detail()["state"]["rank"] == 3);
    }
    CHECK_THROWS_AS(pushforward_multiplicity_profile(c, "E1"), Error);
}

TEST_CASE("replaying a resolution recovers the curve") {
    // quintic with a (2_6) chain: contract the exceptional curves from the last one
    BlowupLattice chain = BlowupLattice::free_chain(6);
    ContractionPlan plan;
    plan.tree = chain.tree();
    plan.classes["Q"] = curve_class(chain, 5, {2, 2, 2, 2, 2, 2});
    for (size_t i = 0; i < 6; ++i) plan.classes["E" + std::to_string(i + 1)] = exceptional_class(chain, i);
    for (int i = 6; i >= 1; --i) plan.order.push_back("E" + std::to_string(i));
    plan.track = "Q";
    ReplayResult r = replay(plan);
    CHECK(r.profile.degree == 5);
    CHECK(r.profile.multiplicities == std::vector<Integer>(6, Integer(2)));
    CHECK(r.states.size() == 7);

    ContractionPlan back = ContractionPlan::from_json(plan.to_json());
    CHECK(back.to_json() == plan.to_json());

    std::swap(plan.order[0], plan.order[1]);
    try {
        replay(plan);
        FAIL("expected NotContractible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotContractible);
        CHECK(e.detail()["step"] == 0);
    }
    plan.order.pop_back();
    std::swap(plan.order[0], plan.order[1]);
    CHECK_THROWS_AS(replay(plan), Error);
}

TEST_CASE("exceptional classes match the proximity matrix") {
    BlowupLattice L(tree_from({{}, {0}, {0, 1}, {2}, {}, {4}}));
    auto P = proximity_matrix(L.tree());
    for (size_t i = 0; i < L.n(); ++i) {
        DivisorClass E = exceptional_class(L, i);
        for (size_t j = 0; j < L.n(); ++j) CHECK(-E.m[j] == P[j][i]);
    }
}
