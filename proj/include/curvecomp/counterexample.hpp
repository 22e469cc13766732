#pragma once

#include "curvecomp/geometry.hpp"
#include "curvecomp/lattice.hpp"
#include "curvecomp/rational_map.hpp"

#include <json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace curvecomp {

/// One verified intersection statement about the conic configuration.
struct IntersectionClaim {
    std::string a, b;
    std::string claim;
    ProjPoint point;
    int expected = 0;
    int computed = 0;
    bool ok = false;
    nlohmann::json to_json() const;
};

/// Λ, Γ_λ, Δ_λ, L_y and L_λ with their named points. Construction verifies every claim.
struct ConicConfiguration {
    Rational lambda;
    PlaneCurve Lambda, Gamma, Delta, L_y, L_lambda;
    std::map<std::string, ProjPoint> named_points;
    std::vector<IntersectionClaim> intersection_table;

    bool verified() const;
    /// Curve names in a fixed order with their equations.
    std::vector<std::pair<std::string, MultiPoly>> forms() const;
    nlohmann::json to_json() const;
};

/// Throws ForbiddenLambda for λ ∈ {0, −1}.
ConicConfiguration build_configuration(const Rational& lambda);

/// What passes through one node of the blow-up tree, read off the local equations.
struct NodeIncidence {
    std::string name;                    // "p1", ..., "p10"
    std::optional<ProjPoint> point;      // proper points only
    std::string parent;                  // empty for proper points
    std::map<std::string, int> curves;   // plane curve name -> multiplicity at the node
    std::vector<std::string> proximate;  // exceptional curves E_j through the node
    nlohmann::json to_json() const;      // without coordinates
};

struct BlowupPlan {
    ProximityTree tree;
    std::vector<NodeIncidence> incidence;
    std::map<std::string, DivisorClass> classes;  // Λ, Γ, Δ, L_y, L_λ and E1..E10
    std::string incidence_hash;                   // FNV-1a (64 bit, hex) of the incidence JSON
    nlohmann::json incidence_json() const;
};

/// The ten blow-ups, with incidence computed from the equations in local charts.
BlowupPlan blowup_plan(const ConicConfiguration& config);

/// Compares computed incidence with a transcription ({"nodes": [...]}); throws
/// FigureMismatch carrying both datasets.
void compare_with_expectation(const BlowupPlan& plan, const nlohmann::json& expected);

enum class Variant { C, D };

/// Contraction order: Δ first for C (tracking Γ), Γ first for D (tracking Δ).
ContractionPlan contraction_plan(const BlowupPlan& plan, Variant v);
/// The plan with Γ and Δ exchanged in the order and tracked class.
ContractionPlan relabel_gamma_delta(const ContractionPlan& plan);

ReplayResult replay_contractions(const BlowupPlan& plan, Variant v);

struct SwapResult {
    bool exists = false;
    std::optional<RationalSelfMap> witness;
    std::vector<std::string> derivation;
    nlohmann::json to_json() const;
};

/// Exact solve for [x:y:z] ↦ [αz : y : βx] preserving Λ, L_y, L_λ and exchanging Γ and Δ.
SwapResult swap_automorphism_exists(const Rational& lambda);

struct CounterexampleReport {
    Rational lambda;
    ConicConfiguration config;
    BlowupPlan plan;
    ReplayResult replay_C, replay_D;
    bool replays_ok = false;
    std::string replay_error;
    Integer E7_self_intersection = 0;
    SncVerdict snc;
    SwapResult swap;
    std::string verdict;
    bool non_equivalent = false;
    nlohmann::json to_json() const;
};

CounterexampleReport counterexample_report(const Rational& lambda);

/// FNV-1a 64-bit hash as 16 hex digits.
std::string fnv1a_hex(const std::string& data);

}  // namespace curvecomp
