#include "curvecomp/lattice.hpp"

#include "curvecomp/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace curvecomp {

namespace {

nlohmann::json int_json(const Integer& v) {
    if (v.fits_slong_p()) return v.get_si();
    return v.get_str();
}

Integer json_int(const nlohmann::json& j) {
    if (j.is_number_integer()) return Integer(static_cast<long>(j.get<long long>()));
    if (j.is_string()) return Integer(j.get<std::string>());
    throw Error(ErrorKind::ParseError, "expected an integer", j);
}

void check_same_rank(const DivisorClass& a, const DivisorClass& b) {
    if (a.m.size() != b.m.size())
        throw Error(ErrorKind::InvalidArgument, "divisor classes live in lattices of different rank",
                    {{"a", a.to_json()}, {"b", b.to_json()}});
}

}  // namespace

DivisorClass DivisorClass::from_ints(long d, const std::vector<long>& mults) {
    std::vector<Integer> m;
    m.reserve(mults.size());
    for (long v : mults) m.emplace_back(v);
    return {Integer(d), std::move(m)};
}

DivisorClass DivisorClass::operator+(const DivisorClass& o) const {
    check_same_rank(*this, o);
    DivisorClass r = *this;
    r.d += o.d;
    for (size_t i = 0; i < m.size(); ++i) r.m[i] += o.m[i];
    return r;
}

DivisorClass DivisorClass::operator-(const DivisorClass& o) const {
    check_same_rank(*this, o);
    DivisorClass r = *this;
    r.d -= o.d;
    for (size_t i = 0; i < m.size(); ++i) r.m[i] -= o.m[i];
    return r;
}

DivisorClass DivisorClass::operator*(const Integer& k) const {
    DivisorClass r = *this;
    r.d *= k;
    for (auto& v : r.m) v *= k;
    return r;
}

bool DivisorClass::operator==(const DivisorClass& o) const { return d == o.d && m == o.m; }

nlohmann::json DivisorClass::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& v : m) arr.push_back(int_json(v));
    return {{"d", int_json(d)}, {"m", arr}};
}

DivisorClass DivisorClass::from_json(const nlohmann::json& j, size_t n) {
    if (!j.is_object() || !j.contains("d")) throw Error(ErrorKind::ParseError, "divisor class needs \"d\"", j);
    DivisorClass c;
    c.d = json_int(j.at("d"));
    c.m.assign(n, Integer(0));
    if (j.contains("m")) {
        const auto& arr = j.at("m");
        if (!arr.is_array() || arr.size() > n)
            throw Error(ErrorKind::ParseError, "multiplicity list longer than the lattice", j);
        for (size_t i = 0; i < arr.size(); ++i) c.m[i] = json_int(arr[i]);
    }
    return c;
}

std::string DivisorClass::to_string() const {
    std::ostringstream os;
    bool first = true;
    auto term = [&](const Integer& c, const std::string& name) {
        if (c == 0) return;
        Integer a = curvecomp::abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (a != 1) os << a.get_str();
        os << name;
        first = false;
    };
    term(d, "H");
    for (size_t i = 0; i < m.size(); ++i) term(-m[i], "e" + std::to_string(i + 1));
    if (first) return "0";
    return os.str();
}

Integer pairwise_intersection(const DivisorClass& a, const DivisorClass& b) {
    check_same_rank(a, b);
    Integer s = a.d * b.d;
    for (size_t i = 0; i < a.m.size(); ++i) s -= a.m[i] * b.m[i];
    return s;
}

Integer self_intersection(const DivisorClass& a) { return pairwise_intersection(a, a); }

BlowupLattice::BlowupLattice(ProximityTree tree) : tree_(std::move(tree)) {}

BlowupLattice BlowupLattice::free_points(size_t n) {
    std::vector<ClusterNode> nodes(n);
    for (size_t i = 0; i < n; ++i) nodes[i].id = static_cast<int>(i);
    return BlowupLattice(ProximityTree(std::move(nodes)));
}

BlowupLattice BlowupLattice::free_chain(size_t n) {
    std::vector<ClusterNode> nodes(n);
    for (size_t i = 0; i < n; ++i) {
        nodes[i].id = static_cast<int>(i);
        if (i > 0) {
            nodes[i].parent = static_cast<int>(i - 1);
            nodes[i].proximate_to = {static_cast<int>(i - 1)};
        }
    }
    return BlowupLattice(ProximityTree(std::move(nodes)));
}

DivisorClass BlowupLattice::zero() const { return {Integer(0), std::vector<Integer>(n(), Integer(0))}; }

DivisorClass BlowupLattice::line() const {
    DivisorClass c = zero();
    c.d = 1;
    return c;
}

DivisorClass BlowupLattice::total_exceptional(size_t i) const {
    if (i >= n()) throw Error(ErrorKind::InvalidArgument, "exceptional index out of range", {{"index", i}, {"n", n()}});
    DivisorClass c = zero();
    c.m[i] = -1;
    return c;
}

DivisorClass BlowupLattice::canonical() const {
    DivisorClass c = zero();
    c.d = -3;
    for (auto& v : c.m) v = -1;
    return c;
}

DivisorClass exceptional_class(const BlowupLattice& lattice, size_t i) {
    DivisorClass c = lattice.total_exceptional(i);
    for (int j : lattice.tree().proximate_successors(static_cast<int>(i))) c.m[static_cast<size_t>(j)] += 1;
    return c;
}

DivisorClass curve_class(const BlowupLattice& lattice, long degree, const std::vector<long>& mults) {
    if (mults.size() > lattice.n())
        throw Error(ErrorKind::InvalidArgument, "more multiplicities than base points",
                    {{"mults", mults}, {"n", lattice.n()}});
    std::vector<long> padded = mults;
    padded.resize(lattice.n(), 0);
    return DivisorClass::from_ints(degree, padded);
}

Rational adjunction_genus(const DivisorClass& D) {
    DivisorClass K = BlowupLattice::free_points(D.m.size()).canonical();
    Rational s(self_intersection(D) + pairwise_intersection(D, K));
    return s / 2 + 1;
}

nlohmann::json TowerVerdict::to_json() const {
    nlohmann::json tr = nlohmann::json::array();
    for (const auto& v : trace) tr.push_back(int_json(v));
    return {{"genus", curvecomp::to_string(genus)}, {"ok", ok}, {"points", points}, {"terminal", int_json(terminal)},
            {"trace", tr}};
}

TowerVerdict verify_minus_one_tower(const BlowupLattice& lattice, const DivisorClass& D, bool extend) {
    if (D.m.size() != lattice.n())
        throw Error(ErrorKind::InvalidArgument, "class does not belong to the lattice", D.to_json());
    TowerVerdict v;
    Integer s = D.d * D.d;
    for (const auto& mi : D.m) {
        s -= mi * mi;
        v.trace.push_back(s);
    }
    DivisorClass ext = D;
    if (extend && lattice.tree().is_chain()) {
        while (s > -1) {
            s -= 1;
            ext.m.emplace_back(1);
            v.trace.push_back(s);
        }
    }
    v.points = ext.m.size();
    v.terminal = self_intersection(ext);
    v.genus = adjunction_genus(ext);
    v.ok = lattice.tree().is_chain() && v.terminal == -1 && v.genus == 0;
    return v;
}

nlohmann::json SncVerdict::to_json() const {
    nlohmann::json e = nlohmann::json::array();
    for (const auto& [a, b] : edges) e.push_back({a, b});
    return {{"edges", e}, {"ok", ok}, {"reason", reason}};
}

SncVerdict snc_tree_check(const std::vector<DivisorClass>& classes) {
    SncVerdict v;
    size_t n = classes.size();
    if (n == 0) {
        v.reason = "empty configuration";
        return v;
    }
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](size_t a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = i + 1; j < n; ++j) {
            Integer p = pairwise_intersection(classes[i], classes[j]);
            if (p == 0) continue;
            if (p != 1) {
                v.reason = "classes " + std::to_string(i) + " and " + std::to_string(j) + " meet with product " +
                           p.get_str();
                return v;
            }
            v.edges.emplace_back(i, j);
            size_t a = find(i), b = find(j);
            if (a == b) {
                v.reason = "cycle through classes " + std::to_string(i) + " and " + std::to_string(j);
                return v;
            }
            parent[a] = b;
        }
    }
    for (size_t i = 1; i < n; ++i) {
        if (find(i) != find(0)) {
            v.reason = "class " + std::to_string(i) + " is disconnected from class 0";
            return v;
        }
    }
    v.ok = true;
    return v;
}

nlohmann::json ContractionState::to_json() const {
    nlohmann::json cls = nlohmann::json::object();
    for (const auto& [name, c] : classes) {
        nlohmann::json e = c.to_json();
        e["self_intersection"] = int_json(self_intersection(c));
        cls[name] = e;
    }
    nlohmann::json hist = nlohmann::json::array();
    for (const auto& h : history) {
        nlohmann::json prod = nlohmann::json::object();
        for (const auto& [k, v] : h.products) prod[k] = int_json(v);
        hist.push_back({{"contracted", h.name}, {"products", prod}});
    }
    return {{"canonical", canonical.to_json()}, {"classes", cls}, {"history", hist}, {"rank", rank()}};
}

ContractionState initial_state(const BlowupLattice& lattice, const std::map<std::string, DivisorClass>& classes) {
    ContractionState s;
    s.n = lattice.n();
    for (const auto& [name, c] : classes) {
        if (c.m.size() != lattice.n())
            throw Error(ErrorKind::InvalidArgument, "class " + name + " does not belong to the lattice", c.to_json());
    }
    s.classes = classes;
    s.canonical = lattice.canonical();
    return s;
}

ContractionState contract_step(const ContractionState& state, const std::string& name) {
    auto it = state.classes.find(name);
    if (it == state.classes.end())
        throw Error(ErrorKind::InvalidArgument, "no class named " + name + " in the current state", state.to_json());
    const DivisorClass e = it->second;
    Integer e2 = self_intersection(e);
    Integer eK = pairwise_intersection(e, state.canonical);
    if (e2 != -1 || eK != -1) {
        nlohmann::json detail = {{"name", name},
                                 {"self_intersection", int_json(e2)},
                                 {"canonical_product", int_json(eK)},
                                 {"state", state.to_json()}};
        throw Error(ErrorKind::NotContractible,
                    name + " has self-intersection " + e2.get_str() + " and K-degree " + eK.get_str(), detail);
    }
    ContractionState next;
    next.n = state.n;
    next.history = state.history;
    ContractionRecord rec;
    rec.name = name;
    for (const auto& [k, c] : state.classes) {
        Integer p = pairwise_intersection(c, e);
        rec.products[k] = p;
        if (k == name) continue;
        next.classes.emplace(k, c + e * p);
    }
    next.canonical = state.canonical + e * pairwise_intersection(state.canonical, e);
    next.history.push_back(std::move(rec));
    return next;
}

nlohmann::json ContractionPlan::to_json() const {
    nlohmann::json cls = nlohmann::json::object();
    for (const auto& [name, c] : classes) cls[name] = c.to_json();
    return {{"classes", cls}, {"contract", order}, {"track", track}, {"tree", tree.to_json()}};
}

ContractionPlan ContractionPlan::from_json(const nlohmann::json& j) {
    try {
        ContractionPlan p;
        p.tree = ProximityTree::from_json(j.at("tree"));
        for (const auto& [name, c] : j.at("classes").items()) p.classes.emplace(name, DivisorClass::from_json(c, p.tree.size()));
        p.order = j.at("contract").get<std::vector<std::string>>();
        p.track = j.at("track").get<std::string>();
        if (!p.classes.count(p.track)) throw Error(ErrorKind::ParseError, "tracked class " + p.track + " is not defined");
        return p;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("malformed plan: ") + e.what());
    }
}

std::vector<Integer> MultiplicityProfile::singular() const {
    std::vector<Integer> s;
    for (const auto& v : multiplicities)
        if (v >= 2) s.push_back(v);
    return s;
}

nlohmann::json MultiplicityProfile::to_json() const {
    nlohmann::json all = nlohmann::json::array(), sing = nlohmann::json::array();
    for (const auto& v : multiplicities) all.push_back(int_json(v));
    for (const auto& v : singular()) sing.push_back(int_json(v));
    return {{"degree", int_json(degree)}, {"multiplicities", all}, {"sequence", sing}};
}

MultiplicityProfile pushforward_multiplicity_profile(const ContractionState& state, const std::string& track) {
    if (state.rank() != 1)
        throw Error(ErrorKind::RankNotOne, "contraction plan stops at rank " + std::to_string(state.rank()),
                    {{"rank", state.rank()}});
    auto it = state.classes.find(track);
    if (it == state.classes.end()) throw Error(ErrorKind::InvalidArgument, "tracked class " + track + " was contracted");
    MultiplicityProfile p;
    // the terminal lattice is Z·h with K = −3h
    Integer tk = pairwise_intersection(it->second, state.canonical);
    if (tk % 3 != 0) throw Error(ErrorKind::InvalidArgument, "terminal canonical product not divisible by 3");
    p.degree = -tk / 3;
    for (auto h = state.history.rbegin(); h != state.history.rend(); ++h) p.multiplicities.push_back(h->products.at(track));
    return p;
}

nlohmann::json ReplayResult::to_json() const {
    nlohmann::json st = nlohmann::json::array();
    for (const auto& s : states) st.push_back(s.to_json());
    return {{"profile", profile.to_json()}, {"states", st}};
}

ReplayResult replay(const ContractionPlan& plan) {
    ReplayResult r;
    r.states.push_back(initial_state(BlowupLattice(plan.tree), plan.classes));
    for (size_t k = 0; k < plan.order.size(); ++k) {
        try {
            r.states.push_back(contract_step(r.states.back(), plan.order[k]));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::NotContractible) throw;
            nlohmann::json d = e.detail();
            d["step"] = k;
            throw Error(ErrorKind::NotContractible,
                        "step " + std::to_string(k) + ": " + plan.order[k] + " has self-intersection " +
                            d["self_intersection"].dump(),
                        d);
        }
    }
    r.profile = pushforward_multiplicity_profile(r.states.back(), plan.track);
    return r;
}

}  // namespace curvecomp
