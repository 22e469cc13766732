#include "curvecomp/counterexample.hpp"
#include "curvecomp/cremona.hpp"
#include "curvecomp/errors.hpp"
#include "curvecomp/infinitely_near.hpp"
#include "curvecomp/sequences.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

using namespace curvecomp;

namespace {

struct Outcome {
    bool ok = true;
    std::vector<std::string> failures;
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            failures.push_back(what);
        }
    }
};

std::string corpus_dir() {
    const char* env = std::getenv("CURVECOMP_CORPUS");
    return env ? env : CURVECOMP_DEFAULT_CORPUS;
}

using Set = std::set<std::vector<long long>>;

Outcome table1() {
    Outcome o;
    std::ifstream in(corpus_dir() + "/table1.json");
    o.require(in.good(), "golden file table1.json missing");
    if (!o.ok) return o;
    auto golden = nlohmann::json::parse(in);
    for (int d = 3; d <= 8; ++d)
        o.require(enumerate_json(d).dump() == golden[static_cast<size_t>(d - 3)].dump(),
                  "degree " + std::to_string(d) + " differs from the golden table");
    o.require(enumerate_admissible(8).size() == 12, "degree 8 does not have 12 sequences");
    bool has35 = false;
    for (const auto& c : enumerate_admissible(7)) has35 = has35 || c.entries == std::vector<int>(5, 3);
    o.require(!has35, "(3_(5)) listed at degree 7");
    return o;
}

Outcome gallery() {
    Outcome o;
    for (int a : {0, 1, -1, 2}) {
        auto g = quintic_gallery(a);
        for (const auto& c : verify_gallery(g))
            o.require(c.ok, "alpha=" + std::to_string(a) + " " + c.name + ": " + c.detail);
        auto prof = base_profile(g.psi);
        o.require(prof.to_json()["sum"] == 12 && prof.to_json()["sum_squares"] == 24, "psi profile sums");
    }
    auto ms = multiplicity_sequence(quintic_gallery(0).Q, ProjPoint(0, 0, 1));
    o.require(ms.entries == std::vector<int>(6, 2), "multiplicity sequence of Q");
    return o;
}

Outcome counterexample() {
    Outcome o;
    for (const Rational& l : {Rational(2), Rational(3), Rational(1, 2), Rational(-2)}) {
        std::string tag = "lambda=" + to_string(l) + ": ";
        auto r = counterexample_report(l);
        o.require(r.config.verified(), tag + "intersection table");
        o.require(r.replays_ok, tag + "replay " + r.replay_error);
        for (const auto* rep : {&r.replay_C, &r.replay_D})
            o.require(rep->profile.degree == 8 && rep->profile.singular() == std::vector<Integer>(7, Integer(3)),
                      tag + "profile " + rep->profile.to_json().dump());
        o.require(r.E7_self_intersection == -4, tag + "E7 self-intersection");
        o.require(!r.swap.exists, tag + "swap automorphism found");
        o.require(r.non_equivalent, tag + "verdict");
    }
    std::vector<Rational> grid;
    for (int k = -5; k <= 5; ++k)
        if (k != 0 && k != -1) grid.emplace_back(k);
    for (const Rational& q : {Rational(1, 2), Rational(-1, 2), Rational(1, 3), Rational(-1, 3), Rational(2, 3),
                              Rational(-2, 3)})
        grid.push_back(q);
    for (const auto& l : grid)
        o.require(swap_automorphism_exists(l).exists == (l == 1), "swap test at lambda=" + to_string(l));
    return o;
}

Outcome diophantine() {
    Outcome o;
    const std::vector<std::pair<std::string, Set>> expected = {
        {"constant-delta=-1", {{8, 3, 7}, {16, 6, 7}}},
        {"constant-delta=0", {}},
        {"one-step-A1", {{2, 7}}},
        {"one-step-A2", {}},
        {"one-step-A3", {}},
        {"one-step-Bii-delta=0", {}},
        {"one-step-Bi-delta=-1", {}},
        {"one-step-Bi-delta=0", {{13, 5}}},
        {"one-step-Bi-delta=1", {}},
    };
    for (const auto& [id, want] : expected) {
        auto r = diophantine_case(id, 200);
        auto big = diophantine_case(id, 2000);
        o.require(r.projected == big.projected, id + " changes between bound 200 and 2000");
        if (r.projected != want) {
            std::string msg = id + " expected " + nlohmann::json(want).dump() + " but the system has " +
                              nlohmann::json(r.projected).dump();
            if (id == "one-step-Bi-delta=-1")
                msg += " (d=58, m=22, k=6 satisfies both displayed equations; m = 2*11 escapes the divisibility "
                       "step. The sequence (58,(22_(6),21)) is still inadmissible: two quadratic transforms give "
                       "(34,(21,14_(3),6_(3))) with 21+14 > 34, so the claim's conclusion holds)";
            o.require(false, msg);
        }
    }
    return o;
}

Outcome classifier() {
    Outcome o;
    for (int d = 3; d <= 8; ++d)
        for (const auto& c : enumerate_admissible(d))
            for (int b : {1, 2}) {
                auto v = classify(d, c.entries, b);
                o.require(v.tag != VerdictTag::Unknown,
                          "Unknown for " + std::to_string(d) + c.to_string() + " branches " + std::to_string(b));
            }
    auto uni = classify(8, std::vector<int>(7, 3), 1);
    o.require(uni.tag == VerdictTag::NoNonExtendableEmbedding, "(8,(3_(7))) unicuspidal tag");
    o.require(uni.witness.value("d2_minus_sum_squares_minus_mk", 0) == -2, "(8,(3_(7))) witness -2");
    o.require(classify(7, {5, 2, 2, 2, 2, 2}, 1).tag == VerdictTag::ExtendsAlways, "(7,(5,2_(5)))");
    o.require(classify(7, {5, 2, 2, 2, 2, 2}, 2).tag == VerdictTag::ExtendsAlways, "(7,(5,2_(5))) two branches");
    auto two = classify(8, std::vector<int>(7, 3), 2);
    o.require(two.tag == VerdictTag::SpecialPunctured && two.note.find("A^1 \\ {0}") != std::string::npos,
              "(8,(3_(7))) two branches");
    return o;
}

Outcome properties() {
    Outcome o;
    // the generated suite lives in test_properties; here a fixed sample of each oracle
    MultiPoly f = parse_poly("y^2 - x^3", xy()), g = parse_poly("y^2 + x^3", xy());
    o.require(local_intersection_number(f, g) == resultant(f, g, 1).min_degree_in(0), "cusp pair");
    auto r = rational_intersections(PlaneCurve::parse("x*y*(x - y)"), PlaneCurve::parse("z*(x + y - z)"));
    o.require(r.complete && r.total() == 6, "Bezout on line arrangements");
    for (int d = 3; d <= 8; ++d)
        for (const auto& c : enumerate_admissible(d)) {
            std::vector<long> m(c.entries.begin(), c.entries.end());
            o.require(adjunction_genus(curve_class(BlowupLattice::free_points(m.size()), d, m)) == 0,
                      "adjunction " + c.to_string());
        }
    auto plan = blowup_plan(build_configuration(2));
    ContractionState s = initial_state(BlowupLattice(plan.tree), plan.classes);
    for (const auto& e : contraction_plan(plan, Variant::C).order) {
        ContractionState t = contract_step(s, e);
        o.require(self_intersection(t.canonical) == self_intersection(s.canonical) + 1, "K^2 after " + e);
        s = t;
    }
    o.require(s.rank() == 1, "terminal rank");
    return o;
}

Outcome jonquieres() {
    Outcome o;
    for (int d : {2, 3}) {
        std::vector<Rational> c(static_cast<size_t>(d + 1), 0);
        c.back() = 1;
        auto p = base_profile(jonquieres_from_affine(1, 0, 1, UPoly(c)));
        o.require(p.size() == static_cast<size_t>(2 * d - 1) && p.homaloidal(),
                  "degree " + std::to_string(d) + " base points");
    }
    RationalSelfMap a = RationalSelfMap::parse("y", "x", "z");
    auto j2 = jonquieres_from_affine(1, 0, 1, UPoly({0, 0, 1}));
    auto j3 = jonquieres_from_affine(1, 1, 2, UPoly({0, 1, 0, 1}));
    auto k2 = jonquieres_from_affine(3, 0, 1, UPoly({1, 0, -2}));
    o.require(compose(j2, compose(a, j2)).degree() == 4, "j2 a j2");
    o.require(compose(j3, compose(a, j2)).degree() == 6, "j3 a j2");
    o.require(compose(k2, compose(a, j3)).degree() == 6, "k2 a j3");
    int lines = 0;
    for (int p = -2; p <= 2 && lines < 20; ++p)
        for (int q = -2; q <= 2 && lines < 20; ++q) {
            std::ostringstream eq;
            eq << p << "*x + " << q << "*y + " << (p + q + 1) << "*z";
            PlaneCurve L = PlaneCurve::parse(eq.str());
            o.require(line_preimage_is_line(j3, L) == L.contains(ProjPoint(0, 1, 0)), "line " + eq.str());
            ++lines;
        }
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 Table 1 reproduction", table1},
        {"2 quintic gallery", gallery},
        {"3 degree-8 counterexample", counterexample},
        {"4 Diophantine registry", diophantine},
        {"5 classifier sweep", classifier},
        {"6 intersection-theory properties", properties},
        {"7 de Jonquieres suite", jonquieres},
    };
    int failed = 0;
    for (const auto& [name, run] : criteria) {
        Outcome o;
        try {
            o = run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name;
        for (const auto& f : o.failures) std::cout << "\n      " << f;
        std::cout << "\n";
        failed += o.ok ? 0 : 1;
    }
    std::cout << (criteria.size() - static_cast<size_t>(failed)) << "/" << criteria.size() << " criteria pass\n";
    return failed ? 1 : 0;
}
