#include "curvecomp/counterexample.hpp"
#include "curvecomp/cremona.hpp"
#include "curvecomp/errors.hpp"
#include "curvecomp/geometry.hpp"
#include "curvecomp/infinitely_near.hpp"
#include "curvecomp/lattice.hpp"
#include "curvecomp/sequences.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

using namespace curvecomp;
namespace fs = std::filesystem;

namespace {

constexpr int kVerified = 0;
constexpr int kUsage = 1;
constexpr int kFailed = 2;

struct Options {
    std::string corpus;
    std::string json_out;
};

std::string corpus_dir(const Options& o) {
    if (!o.corpus.empty()) return o.corpus;
    if (const char* env = std::getenv("CURVECOMP_CORPUS")) return env;
    return CURVECOMP_DEFAULT_CORPUS;
}

/// A path, or the name of a file in the corpus subdirectory `kind`.
std::string resolve(const Options& o, const std::string& kind, const std::string& arg) {
    if (fs::exists(arg)) return arg;
    fs::path p = fs::path(corpus_dir(o)) / kind / (arg + ".json");
    if (fs::exists(p)) return p.string();
    throw Error(ErrorKind::InvalidArgument, "no file '" + arg + "' and no corpus entry " + p.string());
}

nlohmann::json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open " + path);
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, path + ": " + e.what());
    }
}

int emit(const Options& o, const nlohmann::json& j, int code) {
    std::string text = j.dump(2);
    std::cout << text << "\n";
    if (!o.json_out.empty()) {
        std::ofstream out(o.json_out);
        if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write " + o.json_out);
        out << text << "\n";
    }
    return code;
}

nlohmann::json error_json(const Error& e) {
    nlohmann::json j{{"error", kind_name(e.kind())}, {"message", e.what()}};
    if (!e.detail().is_null()) j["detail"] = e.detail();
    return j;
}

// ------------------------------------------------------------------------ commands

int curve_info(const Options& o, const std::string& arg, const std::string& equation) {
    PlaneCurve c = equation.empty() ? load_curve_file(resolve(o, "curves", arg)) : PlaneCurve::parse(equation);
    nlohmann::json pts = nlohmann::json::array();
    std::vector<int> all;
    bool complete = true;
    for (const auto& p : singular_rational_points(c)) {
        nlohmann::json e{{"point", p.to_string()}, {"multiplicity", multiplicity_at(c, p)}};
        try {
            auto ms = multiplicity_sequence(c, p);
            e["multiplicity_sequence"] = ms.entries;
            e["branches"] = ms.branches;
            all.insert(all.end(), ms.entries.begin(), ms.entries.end());
            if (ms.branching) complete = false;
        } catch (const Error& err) {
            e["multiplicity_sequence"] = error_json(err);
            complete = false;
        }
        pts.push_back(e);
    }
    int d = c.degree();
    long genus = (d - 1L) * (d - 2L) / 2;
    for (int m : all) genus -= m * (m - 1L) / 2;
    nlohmann::json out{{"curve", c.to_json()}, {"singular_points", pts}};
    // the formula only sees rational singular points
    out["genus_from_rational_singularities"] = genus;
    out["singularities_complete"] = complete;
    if (pts.size() == 1 && complete && pts[0]["branches"].is_number()) {
        std::sort(all.rbegin(), all.rend());
        try {
            out["classification"] = classify(d, all, pts[0]["branches"].get<int>()).to_json();
        } catch (const Error& err) {
            out["classification"] = error_json(err);
        }
    }
    return emit(o, out, kVerified);
}

int enumerate(const Options& o, int degree, bool strict) {
    if (degree < 1) throw Error(ErrorKind::InvalidArgument, "--degree must be positive");
    return emit(o, enumerate_json(degree, strict ? FilterPolicy::Strict : FilterPolicy::Published), kVerified);
}

int classify_cmd(const Options& o, int degree, const std::string& sequence, bool unicuspidal, int branches) {
    if (unicuspidal && branches != 0 && branches != 1)
        throw Error(ErrorKind::InvalidArgument, "--unicuspidal contradicts --branches " + std::to_string(branches));
    if (unicuspidal) branches = 1;
    auto seq = parse_sequence(sequence);
    auto v = classify(degree, seq, branches);
    nlohmann::json out{{"branches", branches},
                       {"degree", degree},
                       {"sequence", SequenceCandidate{degree, seq}.to_string()},
                       {"verdict", v.to_json()}};
    return emit(o, out, kVerified);
}

int map_cmd(const Options& o, const std::string& arg, const std::string& curve_arg) {
    RationalSelfMap f = load_map_file(resolve(o, "maps", arg));
    auto prof = base_profile(f);
    nlohmann::json out{{"map", f.to_json()}, {"involution", is_involution(f)}, {"base_profile", prof.to_json()}};
    if (!curve_arg.empty()) {
        PlaneCurve c = load_curve_file(resolve(o, "curves", curve_arg));
        nlohmann::json cj{{"curve", c.to_json()}, {"multiplicities", curve_multiplicities(prof, c)}};
        try {
            cj["image_degree"] = image_degree(f, c);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Contracted) throw;
            cj["image_degree"] = 0;
            cj["contracted"] = true;
        }
        out["curve"] = cj;
    }
    return emit(o, out, prof.complete ? kVerified : kFailed);
}

int quintic(const Options& o, const std::string& action, const std::string& alpha) {
    auto g = quintic_gallery(parse_rational(alpha));
    if (action == "show") return emit(o, g.to_json(), kVerified);
    auto checks = verify_gallery(g);
    bool ok = std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.ok; });
    nlohmann::json out{{"alpha", to_string(g.alpha)}, {"checks", gallery_checks_json(checks)}, {"verified", ok}};
    return emit(o, out, ok ? kVerified : kFailed);
}

int counterexample(const Options& o, const std::string& lambda_arg, const std::string& config_arg) {
    Rational lambda = parse_rational(lambda_arg);
    nlohmann::json stored;
    if (!config_arg.empty()) {
        stored = read_json(resolve(o, "configurations", config_arg));
        if (!stored.contains("lambda") || !stored["lambda"].is_string() || !stored.contains("curves"))
            throw Error(ErrorKind::ParseError, "configuration needs \"lambda\" and \"curves\"");
        lambda = parse_rational(stored["lambda"].get<std::string>());
    }
    auto r = counterexample_report(lambda);
    nlohmann::json out = r.to_json();
    out["swap_exists"] = r.swap.exists;
    bool ok = r.config.verified() && r.replays_ok && (r.non_equivalent || r.swap.exists);
    if (!stored.is_null()) {
        bool same = true;
        for (const auto& [name, f] : r.config.forms()) {
            auto it = stored["curves"].find(name);
            same = same && it != stored["curves"].end() && it->is_string() &&
                   proportional(parse_poly(it->get<std::string>()), f);
        }
        out["stored_configuration_matches"] = same;
        ok = ok && same;
    }
    fs::path expected = fs::path(corpus_dir(o)) / "counterexample_expected.json";
    if (fs::exists(expected)) {
        try {
            compare_with_expectation(r.plan, read_json(expected.string()));
            out["figure_transcription"] = "matches";
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::FigureMismatch) throw;
            out["figure_transcription"] = error_json(e);
            ok = false;
        }
    }
    return emit(o, out, ok ? kVerified : kFailed);
}

int lattice(const Options& o, const std::string& plan_arg, const std::string& lambda_arg, const std::string& variant) {
    ContractionPlan plan;
    if (!plan_arg.empty()) {
        plan = ContractionPlan::from_json(read_json(plan_arg));
    } else {
        if (variant != "C" && variant != "D") throw Error(ErrorKind::InvalidArgument, "--variant must be C or D");
        plan = contraction_plan(blowup_plan(build_configuration(parse_rational(lambda_arg))),
                                variant == "C" ? Variant::C : Variant::D);
    }
    nlohmann::json out{{"plan", plan.to_json()}};
    try {
        out["replay"] = replay(plan).to_json();
        return emit(o, out, kVerified);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotContractible && e.kind() != ErrorKind::RankNotOne) throw;
        out["replay"] = error_json(e);
        return emit(o, out, kFailed);
    }
}

int diophantine(const Options& o, const std::string& id, long long bound) {
    auto one = [&](const std::string& c) {
        auto r = diophantine_case(c, bound);
        nlohmann::json j = r.to_json();
        j["agrees_with_reduced_form"] = diophantine_reduced(c, bound) == r.solutions;
        return j;
    };
    nlohmann::json out;
    bool ok = true;
    if (!id.empty()) {
        out = one(id);
        ok = out["agrees_with_reduced_form"].get<bool>();
    } else {
        out = nlohmann::json::array();
        for (const auto& c : diophantine_cases()) {
            out.push_back(one(c));
            ok = ok && out.back()["agrees_with_reduced_form"].get<bool>();
        }
    }
    return emit(o, out, ok ? kVerified : kFailed);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plane curves, Cremona maps and complements of rational curves"};
    app.require_subcommand(1);
    app.fallthrough();
    Options opt;
    app.add_option("--corpus", opt.corpus, "Corpus directory (overrides CURVECOMP_CORPUS)");
    app.add_option("--json", opt.json_out, "Also write the JSON output to this path");

    std::string curve, equation;
    auto* info = app.add_subcommand("curve-info", "Singular points, multiplicity sequences and classification");
    info->add_option("curve", curve, "Curve file or corpus name");
    info->add_option("--equation", equation, "Homogeneous equation instead of a file");

    int degree = 0;
    bool strict = false;
    auto* en = app.add_subcommand("enumerate", "Admissible multiplicity sequences of one degree");
    en->add_option("--degree", degree, "Degree")->required();
    en->add_flag("--strict", strict, "Apply the quadratic filter whenever it applies");

    std::string sequence;
    bool unicuspidal = false;
    int branches = 0;
    auto* cl = app.add_subcommand("classify", "Embedding-extension verdict for a multiplicity sequence");
    cl->add_option("--degree", degree, "Degree")->required();
    cl->add_option("--sequence", sequence, "Multiplicities, e.g. \"3,3,3\" or \"3_7\"")->required();
    cl->add_flag("--unicuspidal", unicuspidal, "One branch at the singular point");
    cl->add_option("--branches", branches, "Number of branches (0 = unknown)")->check(CLI::NonNegativeNumber);

    std::string map_arg, map_curve;
    auto* mp = app.add_subcommand("map", "Base profile of a Cremona map and images of curves");
    mp->add_option("map", map_arg, "Map file or corpus name")->required();
    mp->add_option("--curve", map_curve, "Curve file or corpus name");

    std::string action = "verify", alpha = "0";
    auto* qu = app.add_subcommand("quintic", "The quintic gallery");
    qu->add_option("action", action, "verify or show")->check(CLI::IsMember({"verify", "show"}));
    qu->add_option("--alpha", alpha, "alpha as p/q");

    std::string lambda = "2", config, plan, variant = "C";
    auto* ce = app.add_subcommand("counterexample", "The degree-8 pair from the conic configuration");
    ce->add_option("--lambda", lambda, "lambda as p/q, not 0 or -1");
    ce->add_option("--config", config, "Stored configuration file or corpus name");

    auto* la = app.add_subcommand("lattice", "Replay a contraction plan");
    la->add_option("--plan", plan, "Plan JSON file");
    la->add_option("--lambda", lambda, "Build the counterexample plan for this lambda");
    la->add_option("--variant", variant, "C or D");

    std::string case_id;
    long long bound = 200;
    auto* di = app.add_subcommand("diophantine", "Solve the registered Diophantine systems");
    di->add_option("case", case_id, "Case id (all cases when omitted)");
    di->add_option("--bound", bound, "Search bound")->check(CLI::Range(1LL, 100000LL));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kVerified : kUsage;
    }

    try {
        if (*info) {
            if (curve.empty() == equation.empty())
                throw Error(ErrorKind::InvalidArgument, "give either a curve file or --equation");
            return curve_info(opt, curve, equation);
        }
        if (*en) return enumerate(opt, degree, strict);
        if (*cl) return classify_cmd(opt, degree, sequence, unicuspidal, branches);
        if (*mp) return map_cmd(opt, map_arg, map_curve);
        if (*qu) return quintic(opt, action, alpha);
        if (*ce) return counterexample(opt, lambda, config);
        if (*la) return lattice(opt, plan, lambda, variant);
        if (*di) return diophantine(opt, case_id, bound);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        if (!e.detail().is_null()) std::cerr << e.detail().dump(2) << "\n";
        return kUsage;
    }
    return kUsage;
}
