#include "curvecomp/counterexample.hpp"

#include "curvecomp/errors.hpp"
#include "curvecomp/infinitely_near.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>

namespace curvecomp {

namespace {

const std::vector<std::string>& curve_names() {
    static const std::vector<std::string> names = {"Lambda", "Gamma", "Delta", "L_y", "L_lambda"};
    return names;
}

const std::vector<std::string>& order_C() {
    static const std::vector<std::string> o = {"Delta", "E3", "L_y", "E7", "E6", "E5", "L_lambda", "Lambda", "E8", "E9"};
    return o;
}

void check_lambda(const Rational& lambda) {
    if (lambda == 0 || lambda == -1)
        throw Error(ErrorKind::ForbiddenLambda, "lambda must avoid 0 and -1", {{"lambda", to_string(lambda)}});
}

MultiPoly poly_with_lambda(const char* pattern, const Rational& lambda) {
    std::string s(pattern), l = "(" + to_string(lambda) + ")";
    for (size_t p; (p = s.find('L')) != std::string::npos;) s.replace(p, 1, l);
    return parse_poly(s);
}

}  // namespace

std::string fnv1a_hex(const std::string& data) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

nlohmann::json IntersectionClaim::to_json() const {
    return {{"a", a},          {"b", b},        {"claim", claim}, {"computed", computed},
            {"expected", expected}, {"ok", ok}, {"point", point.to_string()}};
}

bool ConicConfiguration::verified() const {
    return std::all_of(intersection_table.begin(), intersection_table.end(), [](const auto& c) { return c.ok; });
}

std::vector<std::pair<std::string, MultiPoly>> ConicConfiguration::forms() const {
    return {{"Lambda", Lambda.poly()}, {"Gamma", Gamma.poly()}, {"Delta", Delta.poly()},
            {"L_y", L_y.poly()},       {"L_lambda", L_lambda.poly()}};
}

nlohmann::json ConicConfiguration::to_json() const {
    nlohmann::json curves = nlohmann::json::object();
    for (const auto& [n, f] : forms()) curves[n] = f.to_string();
    nlohmann::json pts = nlohmann::json::object();
    for (const auto& [n, p] : named_points) pts[n] = p.to_string();
    nlohmann::json table = nlohmann::json::array();
    for (const auto& c : intersection_table) table.push_back(c.to_json());
    return {{"curves", curves},
            {"intersection_table", table},
            {"lambda", to_string(lambda)},
            {"named_points", pts},
            {"verified", verified()}};
}

ConicConfiguration build_configuration(const Rational& lambda) {
    check_lambda(lambda);
    const Rational inv = Rational(1) / lambda;
    ConicConfiguration c{lambda,
                         PlaneCurve(parse_poly("x*y + x*z + y*z"), true),
                         PlaneCurve(poly_with_lambda("x^2 - (1 + L)*x*y - L*x*z - (1 + L)*y*z", lambda), true),
                         PlaneCurve(poly_with_lambda("z^2 - (1 + L)*x*y - L*x*z - (1 + L)*y*z", inv), true),
                         PlaneCurve(parse_poly("y"), true),
                         PlaneCurve(poly_with_lambda("x - L*z", lambda), true),
                         {},
                         {}};
    ProjPoint p(0, 1, 0), p1(1, 0, 0), p2(0, 0, 1), p3(lambda, 0, 1);
    ProjPoint s(1 + lambda, -1, 1 + inv);
    c.named_points = {{"p", p}, {"p1", p1}, {"p2", p2}, {"p3", p3}, {"s", s}};

    std::map<std::string, const PlaneCurve*> byname = {{"Lambda", &c.Lambda}, {"Gamma", &c.Gamma},
                                                       {"Delta", &c.Delta},   {"L_y", &c.L_y},
                                                       {"L_lambda", &c.L_lambda}};
    auto claim = [&](const std::string& a, const std::string& b, const ProjPoint& q, int expected,
                     const std::string& text) {
        int m = intersection_multiplicity(*byname[a], *byname[b], q);
        c.intersection_table.push_back({a, b, text, q, expected, m, m == expected});
    };
    // every intersection point of a pair, so that "no other point" is checked too
    auto full = [&](const std::string& a, const std::string& b, std::vector<std::pair<ProjPoint, int>> expected,
                    const std::string& text) {
        for (const auto& [q, m] : expected) claim(a, b, q, m, text);
        IntersectionResult r = rational_intersections(*byname[a], *byname[b]);
        std::sort(expected.begin(), expected.end());
        bool same = r.complete && r.points == expected;
        int total = r.total();
        c.intersection_table.push_back({a, b, text + " and in no other point", p,
                                        byname[a]->degree() * byname[b]->degree(), total, same});
    };
    full("Lambda", "Gamma", {{p, 3}, {p2, 1}}, "Lambda and Gamma meet at [0:1:0] with multiplicity 3 and at [0:0:1]");
    full("Lambda", "Delta", {{p, 3}, {p1, 1}}, "Lambda and Delta meet at [0:1:0] with multiplicity 3 and at [1:0:0]");
    full("Gamma", "Delta", {{p, 3}, {p3, 1}}, "Gamma and Delta meet at [0:1:0] with multiplicity 3 and at [lambda:0:1]");
    full("L_lambda", "Lambda", {{p, 1}, {s, 1}}, "L_lambda meets Lambda at [0:1:0] and [1+lambda:-1:1+1/lambda]");
    return c;
}

// ------------------------------------------------------------------------- blow-ups

nlohmann::json NodeIncidence::to_json() const {
    return {{"curves", curves}, {"name", name}, {"parent", parent}, {"proximate", proximate}};
}

nlohmann::json BlowupPlan::incidence_json() const {
    nlohmann::json nodes = nlohmann::json::array();
    for (const auto& n : incidence) nodes.push_back(n.to_json());
    return {{"nodes", nodes}};
}

namespace {

struct Recorder {
    std::vector<NodeIncidence> inc;
    std::vector<ClusterNode> nodes;

    /// Records the origin of `frame` as the next node.
    void record(const LocalFrame& frame, std::optional<ProjPoint> point, std::optional<int> parent,
                const Direction& dir) {
        NodeIncidence n;
        int id = static_cast<int>(inc.size());
        n.name = "p" + std::to_string(id + 1);
        n.point = point;
        if (parent) n.parent = "p" + std::to_string(*parent + 1);
        ClusterNode c;
        c.id = id;
        c.parent = parent;
        c.point = point;
        c.direction = dir;
        for (const auto& g : frame.germs()) {
            if (g.name.size() > 1 && g.name[0] == 'E' && std::isdigit(static_cast<unsigned char>(g.name[1]))) {
                n.proximate.push_back(g.name);
                c.proximate_to.push_back(std::stoi(g.name.substr(1)) - 1);
            } else {
                n.curves[g.name] = frame.multiplicity(g.name);
            }
        }
        std::sort(n.proximate.begin(), n.proximate.end(),
                  [](const std::string& a, const std::string& b) { return std::stoi(a.substr(1)) < std::stoi(b.substr(1)); });
        std::sort(c.proximate_to.begin(), c.proximate_to.end());
        c.multiplicity = n.curves.count("Gamma") ? n.curves.at("Gamma") : 0;
        inc.push_back(n);
        nodes.push_back(c);
    }

    /// Blows up node `parent` (whose frame is given) in direction d and records the new node.
    LocalFrame step(const LocalFrame& frame, int parent, const Direction& d) {
        LocalFrame next = frame.blow_up(d, "E" + std::to_string(parent + 1));
        record(next, std::nullopt, parent, d);
        return next;
    }
};

}  // namespace

BlowupPlan blowup_plan(const ConicConfiguration& config) {
    auto forms = config.forms();
    const auto& pts = config.named_points;
    Recorder r;

    LocalFrame f1 = LocalFrame::at_point(forms, pts.at("p1"));
    r.record(f1, pts.at("p1"), std::nullopt, Direction{});
    LocalFrame f2 = LocalFrame::at_point(forms, pts.at("p2"));
    r.record(f2, pts.at("p2"), std::nullopt, Direction{});
    LocalFrame f3 = LocalFrame::at_point(forms, pts.at("p3"));
    r.record(f3, pts.at("p3"), std::nullopt, Direction{});
    // p4: where L_lambda meets E3
    r.step(f3, 2, f3.direction_of("L_lambda"));

    LocalFrame f5 = LocalFrame::at_point(forms, pts.at("p"));
    r.record(f5, pts.at("p"), std::nullopt, Direction{});
    const std::vector<std::string> conics = {"Lambda", "Gamma", "Delta"};
    LocalFrame f6 = r.step(f5, 4, f5.common_direction(conics));
    LocalFrame f7 = r.step(f6, 5, f6.common_direction(conics));
    // p8 = r: where Lambda meets E7; p9, p10 follow E7
    LocalFrame f8 = r.step(f7, 6, f7.direction_of("Lambda"));
    LocalFrame f9 = r.step(f8, 7, f8.direction_of("E7"));
    r.step(f9, 8, f9.direction_of("E7"));

    BlowupPlan plan;
    plan.tree = ProximityTree(r.nodes);
    plan.incidence = r.inc;
    BlowupLattice lattice(plan.tree);
    std::map<std::string, int> degrees = {{"Lambda", 2}, {"Gamma", 2}, {"Delta", 2}, {"L_y", 1}, {"L_lambda", 1}};
    for (const auto& name : curve_names()) {
        std::vector<long> mults(plan.incidence.size(), 0);
        for (size_t i = 0; i < plan.incidence.size(); ++i) {
            auto it = plan.incidence[i].curves.find(name);
            if (it != plan.incidence[i].curves.end()) mults[i] = it->second;
        }
        plan.classes[name] = curve_class(lattice, degrees[name], mults);
    }
    for (size_t i = 0; i < plan.incidence.size(); ++i)
        plan.classes["E" + std::to_string(i + 1)] = exceptional_class(lattice, i);
    plan.incidence_hash = fnv1a_hex(plan.incidence_json().dump());
    return plan;
}

void compare_with_expectation(const BlowupPlan& plan, const nlohmann::json& expected) {
    nlohmann::json computed = plan.incidence_json();
    nlohmann::json exp_nodes;
    try {
        exp_nodes = expected.at("nodes");
    } catch (const nlohmann::json::exception&) {
        throw Error(ErrorKind::ParseError, "expectation file needs a \"nodes\" array");
    }
    nlohmann::json diffs = nlohmann::json::array();
    size_t n = std::max(exp_nodes.size(), computed["nodes"].size());
    for (size_t i = 0; i < n; ++i) {
        nlohmann::json a = i < computed["nodes"].size() ? computed["nodes"][i] : nlohmann::json();
        nlohmann::json b = i < exp_nodes.size() ? exp_nodes[i] : nlohmann::json();
        if (a != b) diffs.push_back({{"computed", a}, {"expected", b}, {"index", i}});
    }
    if (!diffs.empty())
        throw Error(ErrorKind::FigureMismatch, "computed incidence differs from the figure transcription",
                    {{"computed", computed}, {"differences", diffs}, {"expected", expected}});
}

ContractionPlan contraction_plan(const BlowupPlan& plan, Variant v) {
    ContractionPlan p;
    p.tree = plan.tree;
    p.classes = plan.classes;
    p.order = order_C();
    p.track = "Gamma";
    return v == Variant::C ? p : relabel_gamma_delta(p);
}

ContractionPlan relabel_gamma_delta(const ContractionPlan& plan) {
    auto swap = [](const std::string& s) { return s == "Gamma" ? std::string("Delta") : s == "Delta" ? std::string("Gamma") : s; };
    ContractionPlan p = plan;
    for (auto& s : p.order) s = swap(s);
    p.track = swap(p.track);
    return p;
}

ReplayResult replay_contractions(const BlowupPlan& plan, Variant v) { return replay(contraction_plan(plan, v)); }

// --------------------------------------------------------------------------- swap

nlohmann::json SwapResult::to_json() const {
    return {{"derivation", derivation},
            {"exists", exists},
            {"witness", witness ? nlohmann::json(witness->to_string()) : nlohmann::json()}};
}

SwapResult swap_automorphism_exists(const Rational& lambda) {
    check_lambda(lambda);
    ConicConfiguration c = build_configuration(lambda);
    SwapResult r;
    // Λ(αz, y, βx) = β·xy + αβ·xz + α·yz must be proportional to xy + xz + yz
    r.derivation.push_back("fixing [0:1:0] and exchanging [1:0:0], [0:0:1] forces [x:y:z] -> [a*z : y : b*x]");
    r.derivation.push_back("Lambda(a*z, y, b*x) = b*xy + a*b*xz + a*yz, proportional to Lambda iff a = b = a*b");
    r.derivation.push_back("a, b nonzero gives a = b = 1, the candidate [z : y : x]");
    RationalSelfMap sigma = RationalSelfMap::parse("z", "y", "x");
    auto pull = [&](const PlaneCurve& C) { return substitute(C.poly(), {sigma[0], sigma[1], sigma[2]}); };
    bool lam = proportional(pull(c.Lambda), c.Lambda.poly());
    bool ly = proportional(pull(c.L_y), c.L_y.poly());
    bool ll = proportional(pull(c.L_lambda), c.L_lambda.poly());
    bool gd = proportional(pull(c.Gamma), c.Delta.poly()) && proportional(pull(c.Delta), c.Gamma.poly());
    ProjPoint p3 = c.named_points.at("p3");
    bool fix = *sigma.apply(p3) == p3;
    r.derivation.push_back(std::string("[z:y:x] sends [lambda:0:1] to [1:0:lambda]; fixed iff lambda^2 = 1: ") +
                           (fix ? "yes" : "no"));
    r.derivation.push_back(std::string("preserves Lambda: ") + (lam ? "yes" : "no") + ", L_y: " + (ly ? "yes" : "no") +
                           ", L_lambda: " + (ll ? "yes" : "no") + ", exchanges Gamma and Delta: " + (gd ? "yes" : "no"));
    r.exists = lam && ly && ll && gd && fix;
    if (r.exists) r.witness = sigma;
    return r;
}

// ------------------------------------------------------------------------- report

nlohmann::json CounterexampleReport::to_json() const {
    nlohmann::json rep = nlohmann::json::object();
    if (replays_ok) {
        for (const auto& [key, res] : {std::pair<const char*, const ReplayResult*>{"C", &replay_C}, {"D", &replay_D}}) {
            nlohmann::json states = nlohmann::json::array();
            for (const auto& s : res->states) states.push_back(s.to_json());
            rep[key] = {{"profile", res->profile.to_json()}, {"states", states}};
        }
    }
    return {{"E7_self_intersection", E7_self_intersection.get_si()},
            {"configuration", config.to_json()},
            {"incidence", plan.incidence_json()},
            {"incidence_hash", plan.incidence_hash},
            {"lambda", to_string(lambda)},
            {"non_equivalent", non_equivalent},
            {"replay_error", replay_error},
            {"replays", rep},
            {"replays_ok", replays_ok},
            {"snc", snc.to_json()},
            {"swap", swap.to_json()},
            {"tree", plan.tree.to_json()},
            {"verdict", verdict}};
}

CounterexampleReport counterexample_report(const Rational& lambda) {
    ConicConfiguration config = build_configuration(lambda);
    BlowupPlan plan = blowup_plan(config);
    CounterexampleReport r{lambda, config, plan, {}, {}, false, {}, 0, {}, {}, {}, false};
    try {
        r.replay_C = replay_contractions(plan, Variant::C);
        r.replay_D = replay_contractions(plan, Variant::D);
        r.replays_ok = true;
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotContractible && e.kind() != ErrorKind::RankNotOne) throw;
        r.replay_error = e.what();
    }
    r.E7_self_intersection = self_intersection(plan.classes.at("E7"));
    std::vector<DivisorClass> locus;
    for (const auto& n : order_C()) locus.push_back(plan.classes.at(n));
    r.snc = snc_tree_check(locus);
    r.swap = swap_automorphism_exists(lambda);

    bool same_profiles = r.replays_ok && r.replay_C.profile.degree == 8 && r.replay_D.profile.degree == 8 &&
                         r.replay_C.profile.singular() == std::vector<Integer>(7, Integer(3)) &&
                         r.replay_D.profile.singular() == std::vector<Integer>(7, Integer(3));
    r.non_equivalent = config.verified() && same_profiles && !r.swap.exists && lambda != 1;
    if (r.non_equivalent) {
        r.verdict = "projectively non-equivalent with isomorphic complements: C and D have degree 8 and multiplicity "
                    "sequence (3_(7)); assumed, not re-proved: \"the base-points of pi are completely determined by C\"";
    } else if (r.swap.exists) {
        r.verdict = "equivalent configuration: the automorphism [z:y:x] exchanges Gamma and Delta";
    } else {
        r.verdict = "verification failed: " + (r.replay_error.empty() ? std::string("profiles or intersection table")
                                                                       : r.replay_error);
    }
    return r;
}

}  // namespace curvecomp
