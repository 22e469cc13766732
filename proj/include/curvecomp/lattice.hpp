#pragma once

#include "curvecomp/infinitely_near.hpp"
#include "curvecomp/rational.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <vector>

namespace curvecomp {

/// d·H − Σ m_i·e_i in the Picard lattice of an n-fold blow-up of the plane.
struct DivisorClass {
    Integer d = 0;
    std::vector<Integer> m;

    DivisorClass() = default;
    DivisorClass(Integer degree, std::vector<Integer> mults) : d(std::move(degree)), m(std::move(mults)) {}
    static DivisorClass from_ints(long d, const std::vector<long>& mults);

    size_t rank() const { return m.size() + 1; }
    DivisorClass operator+(const DivisorClass& o) const;
    DivisorClass operator-(const DivisorClass& o) const;
    DivisorClass operator*(const Integer& k) const;
    bool operator==(const DivisorClass& o) const;

    nlohmann::json to_json() const;  // {"d": .., "m": [..]}
    static DivisorClass from_json(const nlohmann::json& j, size_t n);
    std::string to_string() const;  // "8H - 3e1 - 3e2"
};

Integer pairwise_intersection(const DivisorClass& a, const DivisorClass& b);
Integer self_intersection(const DivisorClass& a);

class BlowupLattice {
public:
    explicit BlowupLattice(ProximityTree tree);
    /// Lattice of n free points in the plane (no proximities).
    static BlowupLattice free_points(size_t n);
    /// A chain of n points, each proximate only to its predecessor.
    static BlowupLattice free_chain(size_t n);

    size_t n() const { return tree_.size(); }
    const ProximityTree& tree() const { return tree_; }

    DivisorClass line() const;
    DivisorClass total_exceptional(size_t i) const;  // e_i
    DivisorClass canonical() const;                  // −3H + Σ e_i
    DivisorClass zero() const;

private:
    ProximityTree tree_;
};

/// Strict transform of the i-th exceptional curve: e_i − Σ_{j ≻ i} e_j.
DivisorClass exceptional_class(const BlowupLattice& lattice, size_t i);
/// d·H − Σ m_i e_i; mults indexed by lattice nodes, missing trailing entries read as 0.
DivisorClass curve_class(const BlowupLattice& lattice, long degree, const std::vector<long>& mults);

/// (D² + D·K)/2 + 1 with K the canonical class of the lattice D lives in.
Rational adjunction_genus(const DivisorClass& D);

struct TowerVerdict {
    bool ok = false;
    std::vector<Integer> trace;  // self-intersection after each blow-up of the chain
    size_t points = 0;           // length of the chain, extension included
    Integer terminal = 0;
    Rational genus = 0;
    nlohmann::json to_json() const;
};

/// Checks that the chain of base points resolves D to a smooth rational (−1)-curve.
/// With `extend`, free points of multiplicity 1 are appended along the chain while the
/// self-intersection is above −1.
TowerVerdict verify_minus_one_tower(const BlowupLattice& lattice, const DivisorClass& D, bool extend = false);

struct SncVerdict {
    bool ok = false;
    std::string reason;                          // empty when ok
    std::vector<std::pair<size_t, size_t>> edges;  // pairs meeting with product 1
    nlohmann::json to_json() const;
};

/// Pairwise products in {0, 1} and a connected acyclic intersection graph.
SncVerdict snc_tree_check(const std::vector<DivisorClass>& classes);

struct ContractionRecord {
    std::string name;
    std::map<std::string, Integer> products;  // D·e for every class alive before the step
};

/// Classes live in the original lattice; after contracting e_1, …, e_k they are kept in
/// the orthogonal complement of those classes, which is the Picard lattice of the image.
struct ContractionState {
    size_t n = 0;
    std::map<std::string, DivisorClass> classes;
    DivisorClass canonical;
    std::vector<ContractionRecord> history;

    size_t rank() const { return n + 1 - history.size(); }
    nlohmann::json to_json() const;
};

ContractionState initial_state(const BlowupLattice& lattice, const std::map<std::string, DivisorClass>& classes);

/// Blows down the named (−1)-curve: D ↦ D + (D·e)e for every remaining class.
/// Throws NotContractible with the full state when e² ≠ −1 or e·K ≠ −1.
ContractionState contract_step(const ContractionState& state, const std::string& name);

struct ContractionPlan {
    ProximityTree tree;
    std::map<std::string, DivisorClass> classes;
    std::vector<std::string> order;
    std::string track;

    nlohmann::json to_json() const;
    static ContractionPlan from_json(const nlohmann::json& j);
};

struct MultiplicityProfile {
    Integer degree = 0;
    std::vector<Integer> multiplicities;  // reverse contraction order
    /// Entries ≥ 2, i.e. the singular points of the image curve.
    std::vector<Integer> singular() const;
    nlohmann::json to_json() const;
};

struct ReplayResult {
    std::vector<ContractionState> states;  // states[0] initial, states[k] after step k
    MultiplicityProfile profile;
    nlohmann::json to_json() const;
};

/// Degree and multiplicities of the tracked class on the terminal plane. Throws RankNotOne
/// unless the state has rank 1.
MultiplicityProfile pushforward_multiplicity_profile(const ContractionState& state, const std::string& track);

/// Runs the plan step by step; NotContractible detail carries the failing step index.
ReplayResult replay(const ContractionPlan& plan);

}  // namespace curvecomp
