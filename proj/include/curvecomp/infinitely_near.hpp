#pragma once

#include "curvecomp/geometry.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace curvecomp {

/// Strict transforms of an affine germ at a center in the two standard charts.
struct BlowupCharts {
    MultiPoly chart_x;  // f(x + a, xy + b) / x^m
    MultiPoly chart_y;  // f(xy + a, y + b) / y^m
    int multiplicity = 0;
    TangentCone cone;  // where the strict transform meets the exceptional line
};

/// Requires f to have multiplicity >= m at the center; throws NotDivisible otherwise.
BlowupCharts blow_up_chart(const MultiPoly& f, const std::pair<Rational, Rational>& center, int m);

/// Inverse of one chart of blow_up_chart: recovers f from its strict transform g,
/// the chart direction at the center (slope chart (x, x(y+t)) or vertical chart) and m.
MultiPoly blow_down(const MultiPoly& g, const Direction& d, int m, const std::pair<Rational, Rational>& center = {0, 0});

struct ClusterNode {
    int id = 0;
    std::optional<int> parent;
    std::optional<ProjPoint> point;  // roots only
    Direction direction;             // non-roots: the point on the parent's exceptional line
    int multiplicity = 0;
    std::vector<int> proximate_to;   // sorted ancestor ids

    /// Affine coordinates of the node in the chart of its parent's blow-up.
    std::pair<Rational, Rational> chart_point() const;
};

class ProximityTree {
public:
    ProximityTree() = default;
    explicit ProximityTree(std::vector<ClusterNode> nodes);

    const std::vector<ClusterNode>& nodes() const { return nodes_; }
    size_t size() const { return nodes_.size(); }
    const ClusterNode& operator[](size_t i) const { return nodes_[i]; }
    bool is_chain() const;
    /// Ids of the nodes proximate to node i.
    std::vector<int> proximate_successors(int i) const;

    nlohmann::json to_json() const;
    static ProximityTree from_json(const nlohmann::json& j);

private:
    std::vector<ClusterNode> nodes_;
};

/// Lower-triangular: 1 on the diagonal, -1 at (i, j) when node i is proximate to node j.
std::vector<std::vector<int>> proximity_matrix(const ProximityTree& tree);

struct MultiplicitySequence {
    std::vector<int> entries;  // multiplicities of the singular nodes in depth-first order
    ProximityTree tree;        // the singular nodes only
    bool branching = false;    // several singular points at one level were found
    int branches = 0;          // points of the resolved curve over the start point
    nlohmann::json to_json() const;
};

/// Follows the singular points over `start` by repeated blow-ups. Branching levels are
/// explored depth first, slopes in increasing order before the vertical direction.
MultiplicitySequence multiplicity_sequence(const PlaneCurve& curve, const ProjPoint& start);

int branch_count(const PlaneCurve& curve, const ProjPoint& p);

/// Named curve germs at one (possibly infinitely near) point, exceptional curves included.
struct NamedGerm {
    std::string name;
    MultiPoly germ;  // over xy(), vanishing at the origin
};

class LocalFrame {
public:
    /// Germs of the given forms at p; forms not through p are dropped.
    static LocalFrame at_point(const std::vector<std::pair<std::string, MultiPoly>>& forms, const ProjPoint& p);

    /// Blows up the origin and moves to the point of the new exceptional curve in direction d.
    /// Every germ is replaced by its strict transform; germs missing the new point are dropped.
    LocalFrame blow_up(const Direction& d, const std::string& exceptional_name) const;

    const std::vector<NamedGerm>& germs() const { return germs_; }
    std::vector<std::string> names() const;
    bool contains(const std::string& name) const;
    int multiplicity(const std::string& name) const;  // 0 when absent
    const MultiPoly& germ(const std::string& name) const;
    /// Tangent direction of a smooth germ.
    Direction direction_of(const std::string& name) const;
    /// The common tangent direction of several germs; throws InvalidArgument if they differ.
    Direction common_direction(const std::vector<std::string>& names) const;
    /// Local intersection number of two germs at the origin.
    int intersection(const std::string& a, const std::string& b) const;

private:
    std::vector<NamedGerm> germs_;
};

}  // namespace curvecomp
