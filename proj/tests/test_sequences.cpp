#include <doctest.h>

#include "curvecomp/errors.hpp"
#include "curvecomp/sequences.hpp"

#include <fstream>

using namespace curvecomp;

namespace {
using Seq = std::vector<int>;
using Sol = std::set<std::vector<long long>>;

nlohmann::json golden_table() {
    std::ifstream in(std::string(CURVECOMP_DEFAULT_CORPUS) + "/table1.json");
    REQUIRE(in.good());
    return nlohmann::json::parse(in);
}

Seq S(const char* text) { return parse_sequence(text); }
}  // namespace

TEST_CASE("sequence parsing and rendering") {
    CHECK(S("3_7") == Seq(7, 3));
    CHECK(S("4,3_(4),2_3") == Seq{4, 3, 3, 3, 3, 2, 2, 2});
    CHECK(SequenceCandidate{8, S("4,3_4,2_3")}.to_string() == "(4,3_(4),2_(3))");
    CHECK(SequenceCandidate{3, {2}}.to_string() == "(2)");
    CHECK(SequenceCandidate{3, {2}}.to_json() == nlohmann::json::parse(R"({"degree":3,"sequence":[2]})"));
    CHECK_THROWS_AS(S(""), Error);
    CHECK_THROWS_AS(S("2,3"), Error);
    CHECK_THROWS_AS(S("3,1"), Error);
    CHECK_THROWS_AS(S("3_x"), Error);
    CHECK_THROWS_AS(S("3,,2"), Error);
}

TEST_CASE("genus, squares and degree bounds") {
    auto g = genus_and_squares_check({8, Seq(7, 3)});
    CHECK(g.genus_ok);
    CHECK(g.squares_slack == 2);
    CHECK(genus_and_squares_check({5, Seq(6, 2)}).squares_slack == 2);
    CHECK_FALSE(genus_and_squares_check({5, Seq(5, 2)}).genus_ok);
    CHECK(degree_bounds_check({8, Seq(7, 3)}));
    CHECK_FALSE(degree_bounds_check({5, {3, 3}}));
    CHECK_FALSE(degree_bounds_check({7, {2, 2}}));
    CHECK(degree_bounds_check({2, {}}));
    CHECK_FALSE(degree_bounds_check({3, {}}));
}

TEST_CASE("quadratic reduction filter") {
    auto r = quadratic_reduction_filter({7, Seq(5, 3)}, FilterPolicy::Published);
    REQUIRE(r);
    CHECK(*r == SequenceCandidate{5, {3, 3}});
    CHECK_FALSE(degree_bounds_check(*r));
    auto a = admissibility({7, Seq(5, 3)});
    CHECK_FALSE(a.admissible);
    CHECK(a.reductions.size() == 1);

    auto q = quadratic_reduction_filter({6, {3, 3, 3, 2}});
    REQUIRE(q);
    CHECK(*q == SequenceCandidate{3, {2}});

    auto e = quadratic_reduction_filter({8, Seq(7, 3)}, FilterPolicy::Published);
    REQUIRE(e);
    CHECK(*e == SequenceCandidate{7, {3, 3, 3, 3, 2, 2, 2}});
    CHECK(admissibility({8, Seq(7, 3)}).admissible);

    // unequal leading entries only reduce under the strict policy
    CHECK_FALSE(quadratic_reduction_filter({8, {4, 4, 3, 3, 3}}, FilterPolicy::Published));
    auto s = quadratic_reduction_filter({8, {4, 4, 3, 3, 3}}, FilterPolicy::Strict);
    REQUIRE(s);
    CHECK(*s == SequenceCandidate{5, {3, 3}});
    CHECK_FALSE(quadratic_reduction_filter({5, {4}}));
}

TEST_CASE("enumeration reproduces the golden table") {
    nlohmann::json golden = golden_table();
    REQUIRE(golden.size() == 6);
    for (int d = 3; d <= 8; ++d) CHECK(enumerate_json(d).dump() == golden[static_cast<size_t>(d - 3)].dump());
    CHECK(enumerate_admissible(8).size() == 12);
    for (const auto& c : enumerate_admissible(7)) CHECK(c.entries != Seq(5, 3));
    CHECK(enumerate_admissible(8, FilterPolicy::Strict).size() == 11);
    for (int d = 3; d <= 10; ++d) {
        for (const auto& c : enumerate_admissible(d)) {
            CHECK(genus_and_squares_check(c).genus_ok);
            CHECK(genus_and_squares_check(c).squares_slack >= 0);
            CHECK(degree_bounds_check(c));
        }
    }
    CHECK_THROWS_AS(enumerate_admissible(2), Error);
}

TEST_CASE("homaloidal conditions") {
    CHECK(homaloidal_check(5, Seq(6, 2)));
    CHECK(homaloidal_check(2, {1, 1, 1}));
    CHECK_FALSE(homaloidal_check(5, Seq(5, 2)));
    CHECK(homaloidal_check(3, {2, 1, 1, 1, 1}));
    CHECK(homaloidal_check(1, {}));
}

TEST_CASE("jump obstruction") {
    for (const char* s : {"4,3,2_6", "4,3_2,2_3", "4,3_4,2_3", "4_2,3,2_6", "4_2,3_2,2_3", "5,3_2,2_5", "5,3_3,2_2"}) {
        INFO(s);
        CHECK(jump_obstruction(S(s)));
    }
    for (const char* s : {"3_7", "2_6", "3,2_3", "3_3,2", "4,3_3", "4_3,3", "4,2_4", "6,2_6", "4_3,2_3", "7"}) {
        INFO(s);
        CHECK_FALSE(jump_obstruction(S(s)));
    }
    std::pair<int, int> w;
    REQUIRE(jump_obstruction(S("5,3_3,2_2"), &w));
    CHECK(w.first < w.second);
    CHECK(w.second <= 4);
}

TEST_CASE("unicuspidal embedding classifier") {
    CHECK(unicuspidal_embedding_classifier(8, Seq(7, 3)) == UnicuspidalCase::NoEmbedding);
    CHECK(unicuspidal_embedding_classifier(5, Seq(6, 2)) == UnicuspidalCase::Case_iii);
    CHECK(unicuspidal_embedding_classifier(3, {2}) == UnicuspidalCase::Case_iii);
    // d² − Σm² = −1 with a final drop of one
    CHECK(unicuspidal_embedding_classifier(2, {2, 1}) == UnicuspidalCase::Case_i);
    CHECK(unicuspidal_embedding_classifier(4, {2, 2, 2, 2}) == UnicuspidalCase::Case_ii);
    CHECK(unicuspidal_embedding_classifier(5, {3, 3, 2}) == UnicuspidalCase::Case_iii);
    CHECK(std::string(case_name(UnicuspidalCase::Case_ii)) == "Case_ii");
}

TEST_CASE("classifier verdicts") {
    auto v = classify(8, Seq(7, 3), 1);
    CHECK(v.tag == VerdictTag::NoNonExtendableEmbedding);
    CHECK(v.witness["case"] == "NoEmbedding");
    CHECK(v.witness["d2_minus_sum_squares_minus_mk"] == -2);

    for (int b : {0, 1, 2}) CHECK(classify(7, {5, 2, 2, 2, 2, 2}, b).tag == VerdictTag::ExtendsAlways);

    auto p = classify(8, Seq(7, 3), 2);
    CHECK(p.tag == VerdictTag::SpecialPunctured);
    CHECK(p.note.find("A^1 \\ {0}") != std::string::npos);
    CHECK_FALSE(p.existence_unknown);

    auto sextic = classify(6, S("3,2_7"), 1);
    CHECK(sextic.tag == VerdictTag::NoNonExtendableEmbedding);
    CHECK(sextic.rule.find("not unicuspidal") != std::string::npos);
    CHECK(classify(6, S("3,2_7"), 2).tag == VerdictTag::SpecialPunctured);

    CHECK(classify(5, Seq(6, 2), 1).tag == VerdictTag::EmbeddingExistsUnicuspidal);
    CHECK(classify(5, Seq(6, 2), 2).tag == VerdictTag::ExtendsAlways);
    CHECK(classify(5, Seq(6, 2), 0).tag == VerdictTag::RequiresUnicuspidal);
    CHECK(classify(3, {2}, 2).tag == VerdictTag::SpecialPunctured);
    CHECK(classify(3, {2}, 1).tag == VerdictTag::EmbeddingExistsUnicuspidal);

    CHECK_THROWS_AS(classify(7, Seq(5, 3), 2), Error);
    try {
        classify(5, Seq(5, 2), 2);
        FAIL("expected Inadmissible");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::Inadmissible);
    }
}

TEST_CASE("constant and one-step theorems beyond degree 8") {
    auto c = constant_sequence_theorem(16, 6, 7, 2);
    CHECK(c.tag == VerdictTag::SpecialPunctured);
    CHECK(c.existence_unknown);
    CHECK(constant_sequence_theorem(8, 3, 7, 2).tag == VerdictTag::SpecialPunctured);
    CHECK(constant_sequence_theorem(6, 5, 1, 2).tag == VerdictTag::ExtendsAlways);
    CHECK(constant_sequence_theorem(8, 3, 7, 1).tag == VerdictTag::NoNonExtendableEmbedding);

    auto t = classify(13, S("5_6,4"), 2);
    CHECK(t.tag == VerdictTag::SpecialPunctured);
    CHECK(t.existence_unknown);
    CHECK(classify(16, Seq(7, 6), 2).existence_unknown);

    // the extra l = 1 solution is removed by two quadratic transformations
    Seq extra = S("22_6,21");
    auto adm = admissibility({58, extra});
    CHECK_FALSE(adm.admissible);
    REQUIRE(adm.reductions.size() == 2);
    CHECK(adm.reductions[1] == SequenceCandidate{34, S("21,14_3,6_3")});
    CHECK_THROWS_AS(classify(58, extra, 2), Error);
}

TEST_CASE("classifier sweep over the table") {
    int special = 0;
    for (int d = 3; d <= 8; ++d) {
        for (const auto& c : enumerate_admissible(d)) {
            for (int b : {1, 2}) {
                auto v = classify(d, c.entries, b);
                INFO(d, " ", c.to_string(), " branches ", b);
                CHECK(v.tag != VerdictTag::Unknown);
                CHECK_FALSE(v.rule.empty());
                if (b == 2 && v.tag == VerdictTag::SpecialPunctured) ++special;
                if (b == 2)
                    CHECK((v.tag == VerdictTag::ExtendsAlways || v.tag == VerdictTag::SpecialPunctured));
                else
                    CHECK(v.tag != VerdictTag::RequiresUnicuspidal);
            }
        }
    }
    // nodal cubic, the sextic (3,2_(7)) and the octic (3_(7))
    CHECK(special == 3);
}

TEST_CASE("Diophantine registry") {
    CHECK(diophantine_cases().size() == 11);
    CHECK(diophantine_case("constant-delta=-1").solutions == Sol{{8, 3, 7}, {16, 6, 7}});
    CHECK(diophantine_case("constant-δ=−1").id == "constant-delta=-1");
    auto a1 = diophantine_case("one-step-A1");
    CHECK(a1.solutions == Sol{{6, 3, 7}});
    CHECK(a1.projected == Sol{{2, 7}});
    CHECK(diophantine_case("one-step-Bi-delta=0").projected == Sol{{13, 5}});
    for (const char* id : {"constant-delta=0", "one-step-A2", "one-step-A3", "one-step-A4", "one-step-B-preamble",
                           "one-step-Bi-delta=1", "one-step-Bii-delta=0"}) {
        INFO(id);
        CHECK(diophantine_case(id).solutions.empty());
    }
    // the l = 1, delta = -1 subcase has a solution the argument overlooks
    CHECK(diophantine_case("one-step-Bi-delta=-1").solutions == Sol{{58, 22, 6}});
    CHECK_THROWS_AS(diophantine_case("nope"), Error);
    CHECK_THROWS_AS(diophantine_case("one-step-A1", 0), Error);
    auto j = diophantine_case("one-step-A1").to_json();
    CHECK(j["projection"] == nlohmann::json({"m-1", "l"}));
}

TEST_CASE("Diophantine registry is stable and matches the reduced forms") {
    for (const auto& id : diophantine_cases()) {
        INFO(id);
        auto small = diophantine_case(id, 200);
        CHECK(diophantine_case(id, 2000).solutions == small.solutions);
        CHECK(diophantine_reduced(id, 200) == small.solutions);
    }
}
