#include "curvecomp/geometry.hpp"

#include "curvecomp/errors.hpp"
#include "curvecomp/rational_map.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace curvecomp {

// ---------------------------------------------------------------- points

ProjPoint::ProjPoint(const Rational& a, const Rational& b, const Rational& c) : c_{a, b, c} {
    int k = 0;
    while (k < 3 && c_[k] == 0) ++k;
    if (k == 3) throw Error(ErrorKind::InvalidArgument, "projective point with all coordinates zero");
    Rational s = c_[k];
    for (auto& v : c_) v /= s;
}

ProjPoint ProjPoint::parse(std::string_view text) {
    std::string t(text);
    t.erase(std::remove_if(t.begin(), t.end(), [](char ch) { return ch == '[' || ch == ']'; }), t.end());
    std::vector<std::string> parts;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.size() != 3) throw Error(ErrorKind::ParseError, "point needs three coordinates: '" + std::string(text) + "'");
    return ProjPoint(parse_rational(parts[0]), parse_rational(parts[1]), parse_rational(parts[2]));
}

std::string ProjPoint::to_string() const {
    return "[" + curvecomp::to_string(c_[0]) + " : " + curvecomp::to_string(c_[1]) + " : " +
           curvecomp::to_string(c_[2]) + "]";
}

// ---------------------------------------------------------------- curves

PlaneCurve::PlaneCurve(const MultiPoly& equation, std::optional<bool> irreducible) : irreducible_(irreducible) {
    MultiPoly p = equation.with_vars(xyz());
    if (p.is_zero() || p.is_constant())
        throw Error(ErrorKind::InvalidArgument, "curve equation must be a nonconstant form");
    eq_ = HomogeneousPoly(primitive_part(p));
    if (!is_squarefree(eq_.poly()))
        throw Error(ErrorKind::NotSquarefree, "curve equation has a repeated factor: " + eq_.to_string(),
                    {{"equation", eq_.to_string()}});
}

PlaneCurve PlaneCurve::parse(std::string_view equation, std::optional<bool> irreducible) {
    return PlaneCurve(parse_poly(equation), irreducible);
}

PlaneCurve PlaneCurve::from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("equation") || !j["equation"].is_string())
        throw Error(ErrorKind::ParseError, "curve JSON needs a string field \"equation\"");
    std::optional<bool> irr;
    if (j.contains("irreducible") && j["irreducible"].is_boolean()) irr = j["irreducible"].get<bool>();
    return parse(j["equation"].get<std::string>(), irr);
}

nlohmann::json PlaneCurve::to_json() const {
    nlohmann::json j{{"degree", degree()}, {"equation", to_string()}};
    j["irreducible"] = irreducible_ ? nlohmann::json(*irreducible_) : nlohmann::json(nullptr);
    return j;
}

bool PlaneCurve::contains(const ProjPoint& p) const {
    return poly().evaluate({p[0], p[1], p[2]}) == 0;
}

PlaneCurve load_curve_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open curve file " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw Error(ErrorKind::ParseError, std::string("invalid JSON in ") + path + ": " + e.what());
    }
    return PlaneCurve::from_json(j);
}

// ---------------------------------------------------------------- parametrizations

ParamCurve::ParamCurve(std::array<MultiPoly, 3> components) {
    int deg = -1;
    for (auto& c : components) {
        c = c.with_vars(st());
        if (c.is_zero()) continue;
        if (!c.is_homogeneous() || (deg >= 0 && c.total_degree() != deg))
            throw Error(ErrorKind::InvalidArgument, "parametrization needs binary forms of one degree");
        deg = c.total_degree();
    }
    if (deg < 0) throw Error(ErrorKind::ZeroInput, "all parametrization components are zero");
    MultiPoly g(st());
    for (const auto& c : components) g = gcd(g, c);
    if (!g.is_constant())
        for (auto& c : components) c = exact_divide(c, g);
    c_ = std::move(components);
}

ParamCurve ParamCurve::line_through(const ProjPoint& p, const ProjPoint& q) {
    if (p == q) throw Error(ErrorKind::InvalidArgument, "line through a single point");
    MultiPoly s = MultiPoly::variable(st(), 0), t = MultiPoly::variable(st(), 1);
    return ParamCurve({s * p[0] + t * q[0], s * p[1] + t * q[1], s * p[2] + t * q[2]});
}

ParamCurve ParamCurve::line(const PlaneCurve& line) {
    if (line.degree() != 1) throw Error(ErrorKind::InvalidArgument, "not a line: " + line.to_string());
    std::vector<Rational> zero{0, 0, 0};
    const MultiPoly& f = line.poly();
    Rational a = f.evaluate({1, 0, 0}), b = f.evaluate({0, 1, 0}), c = f.evaluate({0, 0, 1});
    if (a != 0) return line_through(ProjPoint(-b, a, 0), ProjPoint(-c, 0, a));
    if (b != 0) return line_through(ProjPoint(1, 0, 0), ProjPoint(0, -c, b));
    return line_through(ProjPoint(1, 0, 0), ProjPoint(0, 1, 0));
}

ParamCurve ParamCurve::conic(const PlaneCurve& conic, const ProjPoint& on_it) {
    if (conic.degree() != 2) throw Error(ErrorKind::InvalidArgument, "not a conic: " + conic.to_string());
    if (!conic.contains(on_it)) throw Error(ErrorKind::InvalidArgument, "point is not on the conic");
    const MultiPoly& C = conic.poly();
    std::vector<Rational> p(on_it.coords().begin(), on_it.coords().end());
    std::array<Rational, 3> grad;
    for (int i = 0; i < 3; ++i) grad[i] = C.derivative(i).evaluate(p);
    if (grad[0] == 0 && grad[1] == 0 && grad[2] == 0)
        throw Error(ErrorKind::InvalidArgument, "conic is singular at the projection point");
    int k = local_chart(on_it);
    std::vector<MultiPoly> v(3, MultiPoly(st()));
    int slot = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == k) continue;
        v[i] = MultiPoly::variable(st(), slot++);
    }
    MultiPoly Cv = substitute(C, v);
    MultiPoly gv(st());
    for (int i = 0; i < 3; ++i) gv += v[i] * grad[i];
    std::array<MultiPoly, 3> comps;
    for (int i = 0; i < 3; ++i) comps[i] = Cv * p[i] - gv * v[i];
    return ParamCurve(comps);
}

ProjPoint ParamCurve::at(const Rational& s, const Rational& t) const {
    return ProjPoint(c_[0].evaluate({s, t}), c_[1].evaluate({s, t}), c_[2].evaluate({s, t}));
}

// ---------------------------------------------------------------- charts

bool Direction::operator<(const Direction& o) const {
    if (vertical != o.vertical) return !vertical;
    return !vertical && slope < o.slope;
}

std::string Direction::to_string() const { return vertical ? "vertical" : "slope " + curvecomp::to_string(slope); }

int exceptional_var(const Direction& d) { return d.vertical ? 1 : 0; }

MultiPoly chart_pullback(const MultiPoly& f, const Direction& d) {
    MultiPoly x = MultiPoly::variable(xy(), 0), y = MultiPoly::variable(xy(), 1);
    if (d.vertical) return substitute(f.with_vars(xy()), std::vector<MultiPoly>{x * y, y});
    return substitute(f.with_vars(xy()), std::vector<MultiPoly>{x, x * (y + MultiPoly(xy(), d.slope))});
}

MultiPoly strict_transform(const MultiPoly& f, const Direction& d, int k) {
    MultiPoly g = chart_pullback(f, d);
    int e = exceptional_var(d);
    if (!g.is_zero() && g.min_degree_in(e) < k)
        throw Error(ErrorKind::NotDivisible, "exceptional power " + std::to_string(k) + " does not divide the pullback",
                    {{"pullback", g.to_string()}, {"direction", d.to_string()}});
    return g.shift(e, -k);
}

TangentCone tangent_cone(const MultiPoly& germ) {
    TangentCone tc;
    MultiPoly g = germ.with_vars(xy());
    if (g.is_zero()) throw Error(ErrorKind::ZeroInput, "tangent cone of the zero polynomial");
    tc.order = g.min_total_degree();
    if (tc.order == 0) return tc;
    MultiPoly T = g.homogeneous_part(tc.order);
    UPoly u = UPoly::from_multi(T.evaluate_var(0, 1), 1);
    for (const auto& [root, mult] : rational_roots(u)) tc.rational.emplace_back(Direction::with_slope(root), mult);
    tc.irrational = deflate_rational_roots(u);
    int vert = tc.order - u.degree();
    if (vert > 0) tc.rational.emplace_back(Direction::vert(), vert);
    return tc;
}

int local_chart(const ProjPoint& p) {
    if (p[2] != 0) return 2;
    if (p[1] != 0) return 1;
    return 0;
}

namespace {

std::array<int, 2> other_indices(int c) {
    if (c == 2) return {0, 1};
    if (c == 1) return {0, 2};
    return {1, 2};
}

}  // namespace

MultiPoly local_germ(const MultiPoly& form, const ProjPoint& p) {
    int c = local_chart(p);
    auto oth = other_indices(c);
    std::vector<MultiPoly> images(3, MultiPoly(xy()));
    images[c] = MultiPoly(xy(), 1);
    images[oth[0]] = MultiPoly::variable(xy(), 0) + MultiPoly(xy(), p[oth[0]] / p[c]);
    images[oth[1]] = MultiPoly::variable(xy(), 1) + MultiPoly(xy(), p[oth[1]] / p[c]);
    return substitute(form.with_vars(xyz()), images);
}

ProjPoint from_local(const ProjPoint& p, const Rational& u, const Rational& v) {
    int c = local_chart(p);
    auto oth = other_indices(c);
    std::array<Rational, 3> q;
    for (int i = 0; i < 3; ++i) q[i] = p[i] / p[c];
    q[oth[0]] += u;
    q[oth[1]] += v;
    return ProjPoint(q[0], q[1], q[2]);
}

PlaneCurve line_through(const ProjPoint& p, const ProjPoint& q) {
    Rational a = p[1] * q[2] - p[2] * q[1];
    Rational b = p[2] * q[0] - p[0] * q[2];
    Rational c = p[0] * q[1] - p[1] * q[0];
    if (a == 0 && b == 0 && c == 0) throw Error(ErrorKind::InvalidArgument, "line through a single point");
    MultiPoly L = MultiPoly::variable(xyz(), 0) * a + MultiPoly::variable(xyz(), 1) * b +
                  MultiPoly::variable(xyz(), 2) * c;
    return PlaneCurve(L, true);
}

// ---------------------------------------------------------------- multiplicities

int multiplicity_at(const MultiPoly& form, const ProjPoint& p) {
    MultiPoly g = local_germ(form, p);
    if (g.is_zero()) throw Error(ErrorKind::ZeroInput, "multiplicity of the zero form");
    return g.min_total_degree();
}

int multiplicity_at(const PlaneCurve& curve, const ProjPoint& p) { return multiplicity_at(curve.poly(), p); }

int local_intersection_number(const MultiPoly& f_in, const MultiPoly& g_in) {
    MultiPoly f = f_in.with_vars(xy()), g = g_in.with_vars(xy());
    if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::CommonComponent, "zero germ in intersection number");
    int budget = std::max(1, f.total_degree()) * std::max(1, g.total_degree()) + 1;
    int total = 0;
    for (;;) {
        if (f.constant_value() != 0 || g.constant_value() != 0) return total;
        UPoly f0 = UPoly::from_multi(f.evaluate_var(1, 0), 0);
        UPoly g0 = UPoly::from_multi(g.evaluate_var(1, 0), 0);
        if (f0.is_zero() && g0.is_zero())
            throw Error(ErrorKind::CommonComponent, "germs share the component y = 0");
        if (g0.is_zero()) {
            std::swap(f, g);
            std::swap(f0, g0);
        }
        if (f0.is_zero()) {
            int ord = 0;
            while (g0.coeff(ord) == 0) ++ord;
            total += ord;
            f = f.shift(1, -1);
            if (--budget < 0)
                throw Error(ErrorKind::InternalLimit, "intersection recursion exceeded its degree bound");
            continue;
        }
        if (f0.degree() > g0.degree()) {
            std::swap(f, g);
            std::swap(f0, g0);
        }
        Monomial m(2, 0);
        m[0] = g0.degree() - f0.degree();
        g = g * f0.leading() - MultiPoly::monomial(xy(), m, g0.leading()) * f;
    }
}

int intersection_multiplicity(const MultiPoly& a, const MultiPoly& b, const ProjPoint& p) {
    return local_intersection_number(local_germ(a, p), local_germ(b, p));
}

int intersection_multiplicity(const PlaneCurve& a, const PlaneCurve& b, const ProjPoint& p) {
    if (!gcd(a.poly(), b.poly()).is_constant())
        throw Error(ErrorKind::CommonComponent, "curves share a component",
                    {{"a", a.to_string()}, {"b", b.to_string()}});
    return intersection_multiplicity(a.poly(), b.poly(), p);
}

std::vector<ProjPoint> common_rational_points(const MultiPoly& A, const MultiPoly& B, long height) {
    MultiPoly a = A.with_vars(xyz()), b = B.with_vars(xyz());
    if (!gcd(a, b).is_constant())
        throw Error(ErrorKind::CommonComponent, "forms share a component", {{"a", a.to_string()}, {"b", b.to_string()}});
    std::vector<ProjPoint> pts;
    auto add = [&](const ProjPoint& q) {
        if (a.evaluate({q[0], q[1], q[2]}) == 0 && b.evaluate({q[0], q[1], q[2]}) == 0 &&
            std::find(pts.begin(), pts.end(), q) == pts.end())
            pts.push_back(q);
    };
    // z = 1
    MultiPoly fa = a.evaluate_var(2, 1), fb = b.evaluate_var(2, 1);
    MultiPoly r = resultant(fa, fb, 0);
    if (!r.is_zero() && !r.is_constant()) {
        for (const auto& [y0, mult] : rational_roots(UPoly::from_multi(r, 1), height)) {
            UPoly ua = UPoly::from_multi(fa.evaluate_var(1, y0), 0);
            UPoly ub = UPoly::from_multi(fb.evaluate_var(1, y0), 0);
            UPoly h = gcd(ua, ub);
            if (h.degree() <= 0) continue;
            for (const auto& [x0, m2] : rational_roots(h, height)) add(ProjPoint(x0, y0, 1));
        }
    }
    // z = 0, y = 1
    UPoly ua = UPoly::from_multi(a.evaluate_var(2, 0).evaluate_var(1, 1), 0);
    UPoly ub = UPoly::from_multi(b.evaluate_var(2, 0).evaluate_var(1, 1), 0);
    UPoly h = gcd(ua, ub);
    if (h.degree() > 0)
        for (const auto& [x0, m2] : rational_roots(h, height)) add(ProjPoint(x0, 1, 0));
    add(ProjPoint(1, 0, 0));
    std::sort(pts.begin(), pts.end());
    return pts;
}

int IntersectionResult::total() const {
    int s = 0;
    for (const auto& [p, m] : points) s += m;
    return s;
}

IntersectionResult rational_intersections(const PlaneCurve& a, const PlaneCurve& b) {
    IntersectionResult res;
    for (const auto& p : common_rational_points(a.poly(), b.poly()))
        res.points.emplace_back(p, intersection_multiplicity(a.poly(), b.poly(), p));
    res.complete = res.total() == a.degree() * b.degree();
    return res;
}

std::vector<PlaneCurve> very_tangent_lines(const PlaneCurve& curve, const ProjPoint& through) {
    std::vector<PlaneCurve> out;
    if (!curve.contains(through)) return out;
    TangentCone tc = tangent_cone(local_germ(curve.poly(), through));
    for (const auto& [dir, mult] : tc.rational) {
        ProjPoint q = dir.vertical ? from_local(through, 0, 1) : from_local(through, 1, dir.slope);
        PlaneCurve L = line_through(through, q);
        MultiPoly quotient;
        if (try_divide(curve.poly(), L.poly(), &quotient)) continue;
        if (intersection_multiplicity(curve.poly(), L.poly(), through) == curve.degree()) out.push_back(L);
    }
    return out;
}

std::vector<ProjPoint> singular_rational_points(const PlaneCurve& curve) {
    std::vector<ProjPoint> out;
    if (curve.degree() < 2) return out;
    const MultiPoly& F = curve.poly();
    std::array<MultiPoly, 3> d{F.derivative(0), F.derivative(1), F.derivative(2)};
    static const int weights[][3] = {{1, 2, 3}, {1, -1, 2}, {2, 3, -5}, {3, 1, 7}, {5, -2, 1}};
    for (const auto& w : weights) {
        MultiPoly G = d[0] * w[0] + d[1] * w[1] + d[2] * w[2];
        if (G.is_zero() || !gcd(F, G).is_constant()) continue;
        for (const auto& p : common_rational_points(F, G)) {
            std::vector<Rational> v(p.coords().begin(), p.coords().end());
            if (d[0].evaluate(v) == 0 && d[1].evaluate(v) == 0 && d[2].evaluate(v) == 0) out.push_back(p);
        }
        return out;
    }
    throw Error(ErrorKind::InternalLimit, "no polar combination coprime to the curve");
}

// ---------------------------------------------------------------- conics

std::optional<PlaneCurve> ConicFamily::unique() const {
    if (basis.size() != 1) return std::nullopt;
    return PlaneCurve(basis[0]);
}

ConicFamily conic_through(const std::vector<PointCondition>& conditions) {
    if (conditions.size() > 5) throw Error(ErrorKind::InvalidArgument, "at most five conditions on a conic");
    std::vector<MultiPoly> basis;
    for (const char* m : {"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"}) basis.push_back(parse_poly(m));
    for (const auto& cond : conditions) {
        std::vector<Rational> vals;
        for (const auto& q : basis) {
            MultiPoly g = local_germ(q, cond.base);
            for (const auto& dir : cond.path) {
                try {
                    g = strict_transform(g, dir, 1);
                } catch (const Error&) {
                    throw Error(ErrorKind::InvalidArgument,
                                "infinitely near condition listed before its ancestors at " + cond.base.to_string());
                }
            }
            vals.push_back(g.constant_value());
        }
        int piv = -1;
        for (size_t j = 0; j < vals.size(); ++j)
            if (vals[j] != 0) {
                piv = static_cast<int>(j);
                break;
            }
        if (piv < 0) continue;
        std::vector<MultiPoly> next;
        for (size_t j = 0; j < basis.size(); ++j) {
            if (static_cast<int>(j) == piv) continue;
            next.push_back(primitive_part(basis[j] - basis[piv] * (vals[j] / vals[piv])));
        }
        basis = std::move(next);
    }
    if (basis.empty()) throw Error(ErrorKind::DegenerateConditions, "no conic satisfies the conditions");
    if (basis.size() == 1 && !is_squarefree(basis[0]))
        throw Error(ErrorKind::DegenerateConditions, "the only conic is non-reduced: " + basis[0].to_string(),
                    {{"conic", basis[0].to_string()}});
    return ConicFamily{basis};
}

bool image_on_curve_check(const RationalSelfMap& map, const ParamCurve& source, const PlaneCurve& target) {
    std::vector<MultiPoly> images(source.components().begin(), source.components().end());
    auto comps = map.substitute_into(images);
    if (comps[0].is_zero() && comps[1].is_zero() && comps[2].is_zero())
        throw Error(ErrorKind::MapUndefinedOnCurve, "map is undefined along the parametrized curve",
                    {{"map", map.to_string()}});
    return substitute(target.poly(), std::vector<MultiPoly>(comps.begin(), comps.end())).is_zero();
}

}  // namespace curvecomp
