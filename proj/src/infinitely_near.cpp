#include "curvecomp/infinitely_near.hpp"

#include "curvecomp/errors.hpp"

#include <algorithm>

namespace curvecomp {

namespace {

MultiPoly translate(const MultiPoly& f, const Rational& a, const Rational& b) {
    if (a == 0 && b == 0) return f.with_vars(xy());
    MultiPoly x = MultiPoly::variable(xy(), 0), y = MultiPoly::variable(xy(), 1);
    return substitute(f.with_vars(xy()), std::vector<MultiPoly>{x + MultiPoly(xy(), a), y + MultiPoly(xy(), b)});
}

MultiPoly exceptional_germ(const Direction& d) { return MultiPoly::variable(xy(), exceptional_var(d)); }

}  // namespace

BlowupCharts blow_up_chart(const MultiPoly& f, const std::pair<Rational, Rational>& center, int m) {
    MultiPoly g = translate(f, center.first, center.second);
    if (g.is_zero()) throw Error(ErrorKind::ZeroInput, "blow-up of the zero polynomial");
    BlowupCharts out;
    out.multiplicity = g.min_total_degree();
    if (out.multiplicity < m)
        throw Error(ErrorKind::NotDivisible,
                    "germ has multiplicity " + std::to_string(out.multiplicity) + " < " + std::to_string(m),
                    {{"germ", g.to_string()}});
    out.chart_x = strict_transform(g, Direction::with_slope(0), m);
    out.chart_y = strict_transform(g, Direction::vert(), m);
    out.cone = tangent_cone(g);
    return out;
}

MultiPoly blow_down(const MultiPoly& g_in, const Direction& d, int m, const std::pair<Rational, Rational>& center) {
    MultiPoly g = g_in.with_vars(xy());
    MultiPoly u = MultiPoly::variable(xy(), 0), v = MultiPoly::variable(xy(), 1);
    MultiPoly f(xy());
    if (d.vertical) {
        // f(u, v) = v^m g(u/v, v)
        int K = 0;
        for (const auto& [mono, c] : g.terms()) K = std::max(K, mono[0] - mono[1] - m);
        for (const auto& [mono, c] : g.terms()) {
            Monomial e{mono[0], mono[1] - mono[0] + m + K};
            f.add_term(e, c);
        }
        f = f.shift(1, -K);
    } else {
        // f(u, v) = u^m g(u, v/u - t)
        int K = 0;
        for (const auto& [mono, c] : g.terms()) K = std::max(K, mono[1] - mono[0] - m);
        MultiPoly w = v - u * d.slope;
        std::vector<MultiPoly> wp{MultiPoly(xy(), 1)};
        for (const auto& [mono, c] : g.terms()) {
            while (static_cast<int>(wp.size()) <= mono[1]) wp.push_back(wp.back() * w);
            Monomial e{mono[0] - mono[1] + m + K, 0};
            f += MultiPoly::monomial(xy(), e, c) * wp[mono[1]];
        }
        f = f.shift(0, -K);
    }
    return translate(f, -center.first, -center.second);
}

// ---------------------------------------------------------------- trees

std::pair<Rational, Rational> ClusterNode::chart_point() const {
    if (!parent) return {0, 0};
    if (direction.vertical) return {0, 0};
    return {0, direction.slope};
}

ProximityTree::ProximityTree(std::vector<ClusterNode> nodes) : nodes_(std::move(nodes)) {
    for (size_t i = 0; i < nodes_.size(); ++i) {
        const auto& n = nodes_[i];
        if (n.id != static_cast<int>(i)) throw Error(ErrorKind::InvalidArgument, "cluster node ids must be 0..n-1 in order");
        if (n.parent && (*n.parent < 0 || *n.parent >= n.id))
            throw Error(ErrorKind::InvalidArgument, "cluster node parent must precede the node");
        for (int j : n.proximate_to)
            if (j < 0 || j >= n.id) throw Error(ErrorKind::InvalidArgument, "proximity must point to earlier nodes");
        if (n.parent && std::find(n.proximate_to.begin(), n.proximate_to.end(), *n.parent) == n.proximate_to.end())
            throw Error(ErrorKind::InvalidArgument, "a node is always proximate to its parent");
    }
}

bool ProximityTree::is_chain() const {
    for (size_t i = 0; i < nodes_.size(); ++i) {
        if (i == 0 && nodes_[i].parent) return false;
        if (i > 0 && (!nodes_[i].parent || *nodes_[i].parent != static_cast<int>(i) - 1)) return false;
    }
    return true;
}

std::vector<int> ProximityTree::proximate_successors(int i) const {
    std::vector<int> out;
    for (const auto& n : nodes_)
        if (std::find(n.proximate_to.begin(), n.proximate_to.end(), i) != n.proximate_to.end()) out.push_back(n.id);
    return out;
}

nlohmann::json ProximityTree::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& n : nodes_) {
        nlohmann::json j;
        j["id"] = n.id;
        j["parent"] = n.parent ? nlohmann::json(*n.parent) : nlohmann::json(nullptr);
        j["mult"] = n.multiplicity;
        j["prox"] = n.proximate_to;
        if (n.point) j["point"] = n.point->to_string();
        if (n.parent) j["direction"] = n.direction.to_string();
        arr.push_back(j);
    }
    return {{"nodes", arr}};
}

ProximityTree ProximityTree::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("nodes") || !j["nodes"].is_array())
        throw Error(ErrorKind::ParseError, "proximity tree JSON needs a \"nodes\" array");
    std::vector<ClusterNode> nodes;
    try {
        for (const auto& e : j["nodes"]) {
            ClusterNode n;
            n.id = e.at("id").get<int>();
            if (e.contains("parent") && !e["parent"].is_null()) n.parent = e["parent"].get<int>();
            n.multiplicity = e.value("mult", 0);
            if (e.contains("prox")) n.proximate_to = e["prox"].get<std::vector<int>>();
            std::sort(n.proximate_to.begin(), n.proximate_to.end());
            if (e.contains("point")) n.point = ProjPoint::parse(e["point"].get<std::string>());
            if (e.contains("direction")) {
                std::string d = e["direction"].get<std::string>();
                if (d == "vertical") n.direction = Direction::vert();
                else if (d.rfind("slope ", 0) == 0) n.direction = Direction::with_slope(parse_rational(d.substr(6)));
                else throw Error(ErrorKind::ParseError, "unknown direction '" + d + "'");
            }
            nodes.push_back(std::move(n));
        }
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed proximity tree: ") + e.what());
    }
    try {
        return ProximityTree(std::move(nodes));
    } catch (const Error& e) {
        throw Error(ErrorKind::ParseError, e.what());
    }
}

std::vector<std::vector<int>> proximity_matrix(const ProximityTree& tree) {
    size_t n = tree.size();
    std::vector<std::vector<int>> P(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i) {
        P[i][i] = 1;
        for (int j : tree[i].proximate_to) P[i][j] = -1;
    }
    return P;
}

// ---------------------------------------------------------------- multiplicity sequences

namespace {

struct Explorer {
    std::vector<ClusterNode> nodes;
    bool branching = false;
    int branches = 0;
    int budget = 0;

    void explore(const MultiPoly& f, std::optional<int> parent, const Direction& dir, std::optional<ProjPoint> point,
                 const std::vector<std::pair<int, MultiPoly>>& exceptional) {
        if (--budget < 0)
            throw Error(ErrorKind::InternalLimit, "singular chain longer than the genus bound",
                        {{"germ", f.to_string()}});
        int m = f.min_total_degree();
        ClusterNode node;
        node.id = static_cast<int>(nodes.size());
        node.parent = parent;
        node.point = point;
        node.direction = dir;
        node.multiplicity = m;
        for (const auto& [j, e] : exceptional) node.proximate_to.push_back(j);
        std::sort(node.proximate_to.begin(), node.proximate_to.end());
        nodes.push_back(node);
        const int id = node.id;

        TangentCone tc = tangent_cone(f);
        if (tc.irrational.degree() > 0) {
            MultiPoly f1 = strict_transform(f, Direction::with_slope(0), m);
            UPoly dx = UPoly::from_multi(f1.derivative(0).evaluate_var(0, 0), 1);
            for (const auto& [h, e] : squarefree_decomposition(tc.irrational)) {
                if (e >= 2 && gcd(h, dx).degree() > 0)
                    throw Error(ErrorKind::NonRationalInfinitelyNearPoint,
                                "singular point of the strict transform over an irrational tangent",
                                {{"chart_polynomial", f1.to_string()}, {"chart", "(x, xy)"}});
                branches += h.degree();
            }
        }
        std::vector<std::pair<Direction, MultiPoly>> singular;
        for (const auto& [d, e] : tc.rational) {
            MultiPoly g = strict_transform(f, d, m);
            if (g.min_total_degree() >= 2) singular.emplace_back(d, g);
            else ++branches;
        }
        if (singular.size() > 1) branching = true;
        for (const auto& [d, g] : singular) {
            std::vector<std::pair<int, MultiPoly>> exc;
            for (const auto& [j, e] : exceptional) {
                MultiPoly t = strict_transform(e, d, 1);
                if (t.constant_value() == 0) exc.emplace_back(j, t);
            }
            exc.emplace_back(id, exceptional_germ(d));
            explore(g, id, d, std::nullopt, exc);
        }
    }
};

}  // namespace

MultiplicitySequence multiplicity_sequence(const PlaneCurve& curve, const ProjPoint& start) {
    if (!curve.contains(start))
        throw Error(ErrorKind::InvalidArgument, "point " + start.to_string() + " is not on the curve");
    MultiPoly germ = local_germ(curve.poly(), start);
    MultiplicitySequence out;
    if (germ.min_total_degree() < 2) {
        out.branches = 1;
        return out;
    }
    Explorer ex;
    int d = curve.degree();
    ex.budget = (d - 1) * (d - 2) / 2 + 1;
    ex.explore(germ, std::nullopt, Direction{}, start, {});
    for (const auto& n : ex.nodes) out.entries.push_back(n.multiplicity);
    out.tree = ProximityTree(std::move(ex.nodes));
    out.branching = ex.branching;
    out.branches = ex.branches;
    return out;
}

nlohmann::json MultiplicitySequence::to_json() const {
    return {{"branches", branches}, {"branching", branching}, {"entries", entries}, {"tree", tree.to_json()}};
}

int branch_count(const PlaneCurve& curve, const ProjPoint& p) { return multiplicity_sequence(curve, p).branches; }

// ---------------------------------------------------------------- frames

LocalFrame LocalFrame::at_point(const std::vector<std::pair<std::string, MultiPoly>>& forms, const ProjPoint& p) {
    LocalFrame fr;
    for (const auto& [name, form] : forms) {
        MultiPoly g = local_germ(form, p);
        if (!g.is_zero() && g.constant_value() == 0) fr.germs_.push_back({name, g});
    }
    return fr;
}

LocalFrame LocalFrame::blow_up(const Direction& d, const std::string& exceptional_name) const {
    LocalFrame fr;
    for (const auto& g : germs_) {
        MultiPoly t = strict_transform(g.germ, d, g.germ.min_total_degree());
        if (t.constant_value() == 0) fr.germs_.push_back({g.name, t});
    }
    fr.germs_.push_back({exceptional_name, exceptional_germ(d)});
    return fr;
}

std::vector<std::string> LocalFrame::names() const {
    std::vector<std::string> out;
    for (const auto& g : germs_) out.push_back(g.name);
    return out;
}

bool LocalFrame::contains(const std::string& name) const {
    return std::any_of(germs_.begin(), germs_.end(), [&](const NamedGerm& g) { return g.name == name; });
}

const MultiPoly& LocalFrame::germ(const std::string& name) const {
    for (const auto& g : germs_)
        if (g.name == name) return g.germ;
    throw Error(ErrorKind::InvalidArgument, "no germ named '" + name + "' at this point");
}

int LocalFrame::multiplicity(const std::string& name) const {
    for (const auto& g : germs_)
        if (g.name == name) return g.germ.min_total_degree();
    return 0;
}

Direction LocalFrame::direction_of(const std::string& name) const {
    TangentCone tc = tangent_cone(germ(name));
    if (tc.order != 1 || tc.rational.size() != 1)
        throw Error(ErrorKind::InvalidArgument, "germ '" + name + "' is not smooth here");
    return tc.rational[0].first;
}

Direction LocalFrame::common_direction(const std::vector<std::string>& names) const {
    if (names.empty()) throw Error(ErrorKind::InvalidArgument, "no germs given");
    Direction d = direction_of(names[0]);
    for (const auto& n : names)
        if (!(direction_of(n) == d))
            throw Error(ErrorKind::InvalidArgument, "germs '" + names[0] + "' and '" + n + "' have different tangents");
    return d;
}

int LocalFrame::intersection(const std::string& a, const std::string& b) const {
    return local_intersection_number(germ(a), germ(b));
}

}  // namespace curvecomp
