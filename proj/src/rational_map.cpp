#include "curvecomp/rational_map.hpp"

#include "curvecomp/errors.hpp"

#include <fstream>

namespace curvecomp {

RationalSelfMap::RationalSelfMap(std::array<MultiPoly, 3> components) {
    int deg = -1;
    for (auto& c : components) {
        c = c.with_vars(xyz());
        if (c.is_zero()) continue;
        if (!c.is_homogeneous())
            throw Error(ErrorKind::InvalidArgument, "map component is not homogeneous: " + c.to_string());
        if (deg >= 0 && c.total_degree() != deg)
            throw Error(ErrorKind::InvalidArgument, "map components have different degrees");
        deg = c.total_degree();
    }
    if (deg < 0) throw Error(ErrorKind::ZeroInput, "all map components are zero");
    MultiPoly g(xyz());
    for (const auto& c : components) g = gcd(g, c);
    if (!g.is_constant())
        for (auto& c : components) c = exact_divide(c, g);
    // integer content 1 across all components, sign fixed by the first nonzero one
    Integer num = 0, den = 1;
    for (const auto& c : components)
        for (const auto& [m, q] : c.terms()) {
            num = gcd(num, q.get_num());
            den = lcm(den, q.get_den());
        }
    Rational scale(den, num);
    scale.canonicalize();
    for (const auto& c : components)
        if (!c.is_zero()) {
            if (c.leading_coefficient() < 0) scale = -scale;
            break;
        }
    for (auto& c : components) c *= scale;
    c_ = std::move(components);
    for (const auto& c : c_)
        if (!c.is_zero()) degree_ = c.total_degree();
}

RationalSelfMap RationalSelfMap::parse(const std::string& f0, const std::string& f1, const std::string& f2) {
    return RationalSelfMap({parse_poly(f0), parse_poly(f1), parse_poly(f2)});
}

RationalSelfMap RationalSelfMap::from_json(const nlohmann::json& j) {
    if (!j.contains("components") || !j["components"].is_array() || j["components"].size() != 3)
        throw Error(ErrorKind::ParseError, "map JSON needs \"components\": [three polynomial strings]");
    return parse(j["components"][0].get<std::string>(), j["components"][1].get<std::string>(),
                 j["components"][2].get<std::string>());
}

RationalSelfMap RationalSelfMap::identity() { return parse("x", "y", "z"); }

nlohmann::json RationalSelfMap::to_json() const {
    return {{"components", {c_[0].to_string(), c_[1].to_string(), c_[2].to_string()}}, {"degree", degree_}};
}

std::optional<ProjPoint> RationalSelfMap::apply(const ProjPoint& p) const {
    std::vector<Rational> pt(p.coords().begin(), p.coords().end());
    Rational a = c_[0].evaluate(pt), b = c_[1].evaluate(pt), c = c_[2].evaluate(pt);
    if (a == 0 && b == 0 && c == 0) return std::nullopt;
    return ProjPoint(a, b, c);
}

std::array<MultiPoly, 3> RationalSelfMap::substitute_into(const std::vector<MultiPoly>& images) const {
    return {substitute(c_[0], images), substitute(c_[1], images), substitute(c_[2], images)};
}

std::string RationalSelfMap::to_string() const {
    return "[" + c_[0].to_string() + " : " + c_[1].to_string() + " : " + c_[2].to_string() + "]";
}

RationalSelfMap load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open map file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return RationalSelfMap::from_json(j);
}

}  // namespace curvecomp
