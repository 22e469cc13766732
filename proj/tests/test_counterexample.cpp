#include <doctest.h>

#include "curvecomp/counterexample.hpp"
#include "curvecomp/errors.hpp"

#include <fstream>

using namespace curvecomp;

namespace {
nlohmann::json load_expected() {
    std::ifstream in(std::string(CURVECOMP_DEFAULT_CORPUS) + "/counterexample_expected.json");
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

std::vector<Rational> grid() {
    std::vector<Rational> out;
    for (int k = -5; k <= 5; ++k)
        if (k != 0 && k != -1) out.emplace_back(k);
    for (int q : {2, 3})
        for (int s : {1, -1}) out.push_back(Rational(s, q));
    out.push_back(Rational(2, 3));
    out.push_back(Rational(-2, 3));
    return out;
}

ErrorKind kind_of(const Rational& l) {
    try {
        build_configuration(l);
    } catch (const Error& e) {
        return e.kind();
    }
    return ErrorKind::InternalLimit;
}
}  // namespace

TEST_CASE("conic configuration") {
    auto c = build_configuration(2);
    CHECK(c.verified());
    CHECK(c.intersection_table.size() == 12);
    CHECK(c.named_points.at("s") == ProjPoint(3, -1, Rational(3, 2)));
    CHECK(kind_of(0) == ErrorKind::ForbiddenLambda);
    CHECK(kind_of(-1) == ErrorKind::ForbiddenLambda);
    CHECK(build_configuration(1).verified());
    for (const auto& l : grid()) CHECK(build_configuration(l).verified());
}

TEST_CASE("blow-up classes") {
    auto plan = blowup_plan(build_configuration(2));
    CHECK(plan.tree.size() == 10);
    const auto& cl = plan.classes;
    CHECK(self_intersection(cl.at("E7")) == -4);
    CHECK(self_intersection(cl.at("Gamma")) == -1);
    CHECK(self_intersection(cl.at("Delta")) == -1);
    CHECK(pairwise_intersection(cl.at("Lambda"), cl.at("Delta")) == 0);
    CHECK(pairwise_intersection(cl.at("Lambda"), cl.at("Gamma")) == 0);
    CHECK(pairwise_intersection(cl.at("Gamma"), cl.at("Delta")) == 0);
    CHECK(cl.at("Lambda") == DivisorClass::from_ints(2, {1, 1, 0, 0, 1, 1, 1, 1, 0, 0}));
    CHECK(cl.at("L_lambda") == DivisorClass::from_ints(1, {0, 0, 1, 1, 1, 0, 0, 0, 0, 0}));
    CHECK_NOTHROW(compare_with_expectation(plan, load_expected()));
}

TEST_CASE("figure mismatch is reported with both datasets") {
    auto plan = blowup_plan(build_configuration(2));
    auto bad = load_expected();
    bad["nodes"][7]["curves"]["Gamma"] = 1;
    try {
        compare_with_expectation(plan, bad);
        FAIL("expected FigureMismatch");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::FigureMismatch);
        CHECK(e.detail().contains("computed"));
        CHECK(e.detail().contains("expected"));
        CHECK(e.detail()["differences"].size() == 1);
    }
}

TEST_CASE("contraction replays") {
    auto plan = blowup_plan(build_configuration(2));
    for (Variant v : {Variant::C, Variant::D}) {
        auto r = replay_contractions(plan, v);
        CHECK(r.profile.degree == 8);
        CHECK(r.profile.singular() == std::vector<Integer>(7, Integer(3)));
        CHECK(r.states.size() == 11);
    }
    CHECK(relabel_gamma_delta(contraction_plan(plan, Variant::C)).to_json() ==
          contraction_plan(plan, Variant::D).to_json());

    auto bad = contraction_plan(plan, Variant::C);
    std::swap(bad.order[0], bad.order[1]);
    try {
        replay(bad);
        FAIL("expected NotContractible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotContractible);
        CHECK(e.detail()["step"] == 0);
    }
}

TEST_CASE("swap automorphism only at lambda 1") {
    for (const auto& l : grid()) {
        INFO(to_string(l));
        auto s = swap_automorphism_exists(l);
        CHECK(s.exists == (l == 1));
        CHECK(s.witness.has_value() == (l == 1));
    }
    CHECK(swap_automorphism_exists(1).witness->to_string() == RationalSelfMap::parse("z", "y", "x").to_string());
    CHECK_THROWS_AS(swap_automorphism_exists(-1), Error);
}

TEST_CASE("reports and incidence hash") {
    auto r2 = counterexample_report(2);
    CHECK(r2.non_equivalent);
    CHECK(r2.snc.ok);
    CHECK(r2.E7_self_intersection == -4);
    CHECK(r2.verdict.find("the base-points of pi are completely determined by C") != std::string::npos);
    CHECK(r2.to_json()["replays"]["C"]["states"].size() == 11);
    auto r1 = counterexample_report(1);
    CHECK_FALSE(r1.non_equivalent);
    CHECK(r1.swap.exists);
    for (const auto& l : {Rational(3), Rational(1, 2), Rational(-2)}) {
        auto r = counterexample_report(l);
        CHECK(r.non_equivalent);
        CHECK(r.plan.incidence_hash == r2.plan.incidence_hash);
    }
    CHECK(blowup_plan(build_configuration(2)).incidence_hash == r2.plan.incidence_hash);
    CHECK(fnv1a_hex("") == "cbf29ce484222325");
    CHECK(fnv1a_hex("a") == "af63dc4c8601ec8c");
}

TEST_CASE("replays over lambda of small height") {
    std::string hash = blowup_plan(build_configuration(2)).incidence_hash;
    for (int p = -6; p <= 6; ++p)
        for (int q = 1; q <= 6; ++q) {
            Rational l(p, q);
            l.canonicalize();
            if (l == 0 || l == -1 || l.get_den() != q) continue;
            auto plan = blowup_plan(build_configuration(l));
            CHECK(plan.incidence_hash == hash);
            auto c = replay_contractions(plan, Variant::C);
            auto d = replay_contractions(plan, Variant::D);
            CHECK(c.profile.to_json() == d.profile.to_json());
        }
}
