#include "curvecomp/cremona.hpp"

#include "curvecomp/errors.hpp"
#include "curvecomp/sequences.hpp"

#include <algorithm>

namespace curvecomp {

namespace {

MultiPoly var(int i) { return MultiPoly::variable(xyz(), i); }
MultiPoly cst(const Rational& c) { return MultiPoly(xyz(), c); }

std::vector<MultiPoly> as_images(const RationalSelfMap& g) {
    return {g[0], g[1], g[2]};
}

/// The three components and the two fixed auxiliary members of the linear system.
std::vector<MultiPoly> system_members(const RationalSelfMap& f) {
    std::vector<MultiPoly> out = {f[0], f[1], f[2]};
    out.push_back(f[0] + f[1] + f[2]);
    out.push_back(f[0] + cst(2) * f[1] + cst(3) * f[2]);
    return out;
}

/// Order of the system at the origin of the local germs: the minimum over the members,
/// plus a warning when the auxiliary members go below the components.
int system_order(const std::vector<MultiPoly>& germs, std::vector<std::string>* warnings, const std::string& where) {
    int comp = -1, all = -1;
    for (size_t i = 0; i < germs.size(); ++i) {
        if (germs[i].is_zero()) continue;
        int o = germs[i].min_total_degree();
        if (i < 3) comp = comp < 0 ? o : std::min(comp, o);
        all = all < 0 ? o : std::min(all, o);
    }
    if (all < comp && warnings) warnings->push_back("MultiplicityAmbiguity at " + where);
    return all < 0 ? 0 : all;
}

struct ProfileBuilder {
    std::vector<ClusterNode> nodes;
    std::vector<std::string>* warnings;
    bool complete = true;
    int budget = 0;

    void explore(const std::vector<MultiPoly>& germs, std::optional<int> parent, const Direction& dir,
                 std::optional<ProjPoint> point, const std::vector<std::pair<int, MultiPoly>>& exceptional,
                 const std::string& label) {
        if (--budget < 0) throw Error(ErrorKind::InternalLimit, "base point tree exceeds the Noether bound");
        int m = system_order(germs, warnings, label);
        if (m == 0) return;
        ClusterNode node;
        node.id = static_cast<int>(nodes.size());
        node.parent = parent;
        node.point = point;
        node.direction = dir;
        node.multiplicity = m;
        for (const auto& e : exceptional) node.proximate_to.push_back(e.first);
        std::sort(node.proximate_to.begin(), node.proximate_to.end());
        nodes.push_back(node);
        const int id = node.id;

        // directions on the new exceptional line where every member's transform vanishes
        MultiPoly cone(xy());
        for (size_t i = 0; i < 3; ++i) {
            if (germs[i].is_zero() || germs[i].min_total_degree() != m) continue;
            cone = gcd(cone, germs[i].homogeneous_part(m));
        }
        if (cone.is_constant()) return;
        TangentCone tc = tangent_cone(cone);
        if (tc.irrational.degree() > 0) {
            complete = false;
            warnings->push_back("NonRationalBasePoint: irrational tangent directions " + tc.irrational.to_multi(st(), 0).to_string() +
                                " over node " + std::to_string(id));
        }
        for (const auto& [d, e] : tc.rational) {
            std::vector<MultiPoly> next;
            for (const auto& g : germs) next.push_back(g.is_zero() ? g : strict_transform(g, d, m));
            std::vector<std::pair<int, MultiPoly>> exc;
            for (const auto& [j, eg] : exceptional) {
                MultiPoly t = strict_transform(eg, d, 1);
                if (t.constant_value() == 0) exc.emplace_back(j, t);
            }
            exc.emplace_back(id, MultiPoly::variable(xy(), exceptional_var(d)));
            explore(next, id, d, std::nullopt, exc, label + " > " + d.to_string());
        }
    }
};

std::vector<ProjPoint> proper_base_points(const RationalSelfMap& f, long height, bool* complete) {
    std::vector<MultiPoly> nz;
    for (const auto& c : f.components())
        if (!c.is_zero()) nz.push_back(c);
    const MultiPoly& A = nz[0];
    std::vector<ProjPoint> cands;
    if (nz.size() == 1) return cands;  // a constant map has no base points
    for (int k = 0; k <= 60; ++k) {
        MultiPoly B = nz[1];
        if (nz.size() == 3) B += cst(k) * nz[2];
        if (!gcd(A, B).is_constant()) continue;
        cands = common_rational_points(A, B, height);
        std::vector<ProjPoint> out;
        for (const auto& p : cands) {
            std::vector<Rational> pt(p.coords().begin(), p.coords().end());
            bool all = true;
            for (const auto& c : nz)
                if (c.evaluate(pt) != 0) all = false;
            if (all) out.push_back(p);
        }
        return out;
    }
    *complete = false;
    return {};
}

}  // namespace

RationalSelfMap compose(const RationalSelfMap& f, const RationalSelfMap& g) {
    auto c = f.substitute_into(as_images(g));
    if (c[0].is_zero() && c[1].is_zero() && c[2].is_zero())
        throw Error(ErrorKind::DegenerateComposition, "composition vanishes identically",
                    {{"f", f.to_json()}, {"g", g.to_json()}});
    return RationalSelfMap(c);
}

bool is_involution(const RationalSelfMap& f) { return compose(f, f) == RationalSelfMap::identity(); }

bool BaseMultiplicityProfile::homaloidal() const { return homaloidal_check(degree, mults); }

nlohmann::json BaseMultiplicityProfile::to_json() const {
    long s = 0, s2 = 0;
    for (int m : mults) {
        s += m;
        s2 += static_cast<long>(m) * m;
    }
    return {{"complete", complete},   {"degree", degree},     {"homaloidal", homaloidal()},
            {"multiplicities", mults}, {"sum", s},            {"sum_squares", s2},
            {"tree", tree.to_json()},  {"warnings", warnings}};
}

BaseMultiplicityProfile base_profile(const RationalSelfMap& f, long height) {
    BaseMultiplicityProfile prof;
    prof.degree = f.degree();
    if (f.degree() <= 1) return prof;
    bool complete = true;
    std::vector<ProjPoint> pts;
    try {
        pts = proper_base_points(f, height, &complete);
    } catch (const Error& e) {
        if (e.kind() != ErrorKind::InternalLimit) throw;
        complete = false;
        prof.warnings.push_back(std::string("NonRationalBasePoint: ") + e.what());
    }
    ProfileBuilder b;
    b.warnings = &prof.warnings;
    b.budget = 3 * f.degree();
    std::vector<MultiPoly> members = system_members(f);
    for (const auto& p : pts) {
        std::vector<MultiPoly> germs;
        for (const auto& m : members) germs.push_back(m.is_zero() ? MultiPoly(xy()) : local_germ(m, p));
        b.explore(germs, std::nullopt, Direction{}, p, {}, p.to_string());
    }
    prof.complete = complete && b.complete;
    for (const auto& n : b.nodes) prof.mults.push_back(n.multiplicity);
    prof.tree = ProximityTree(std::move(b.nodes));
    return prof;
}

std::vector<int> curve_multiplicities(const BaseMultiplicityProfile& profile, const PlaneCurve& curve) {
    const ProximityTree& t = profile.tree;
    std::vector<MultiPoly> germ(t.size());
    std::vector<int> out(t.size(), 0);
    for (size_t i = 0; i < t.size(); ++i) {
        const ClusterNode& n = t[i];
        if (!n.parent) {
            germ[i] = local_germ(curve.poly(), *n.point);
        } else {
            size_t p = static_cast<size_t>(*n.parent);
            germ[i] = out[p] == 0 ? MultiPoly(xy(), 1) : strict_transform(germ[p], n.direction, out[p]);
        }
        out[i] = germ[i].constant_value() != 0 ? 0 : germ[i].min_total_degree();
    }
    return out;
}

int image_degree(const RationalSelfMap& f, const BaseMultiplicityProfile& profile, int curve_degree,
                 const std::vector<int>& curve_mults) {
    long v = static_cast<long>(f.degree()) * curve_degree;
    for (size_t i = 0; i < profile.mults.size() && i < curve_mults.size(); ++i)
        v -= static_cast<long>(profile.mults[i]) * curve_mults[i];
    if (v <= 0)
        throw Error(ErrorKind::Contracted, "the curve is contracted by the map",
                    {{"formula_value", v}, {"map", f.to_json()}});
    return static_cast<int>(v);
}

int image_degree(const RationalSelfMap& f, const PlaneCurve& curve) {
    BaseMultiplicityProfile prof = base_profile(f);
    return image_degree(f, prof, curve.degree(), curve_multiplicities(prof, curve));
}

nlohmann::json PullbackFactorization::to_json() const {
    nlohmann::json fs = nlohmann::json::array();
    for (const auto& [p, e] : factors) fs.push_back({{"exponent", e}, {"factor", p.to_string()}});
    return {{"factors", fs}, {"residual", residual.to_string()}};
}

PullbackFactorization pullback_factorization(const RationalSelfMap& f, const PlaneCurve& target,
                                             const std::vector<MultiPoly>& contracted, const MultiPoly* expected) {
    MultiPoly rest = substitute(target.poly(), as_images(f));
    if (rest.is_zero())
        throw Error(ErrorKind::UnaccountedFactor, "the image of the map lies in the target curve",
                    {{"target", target.to_string()}});
    PullbackFactorization out;
    for (const auto& c : contracted) {
        MultiPoly cp = primitive_part(c.with_vars(xyz()));
        int e = 0;
        MultiPoly q;
        while (!rest.is_constant() && try_divide(rest, cp, &q)) {
            rest = q;
            ++e;
        }
        if (e > 0) out.factors.emplace_back(cp, e);
    }
    out.residual = rest.is_constant() ? cst(1) : primitive_part(rest);
    if (expected) {
        if (!proportional(out.residual, expected->with_vars(xyz())))
            throw Error(ErrorKind::UnaccountedFactor, "residual is not the expected strict transform",
                        {{"expected", expected->to_string()}, {"residual", out.residual.to_string()}});
    } else if (!out.residual.is_constant() && !is_squarefree(out.residual)) {
        throw Error(ErrorKind::UnaccountedFactor, "residual has a repeated factor outside the contracted curves",
                    {{"residual", out.residual.to_string()}});
    }
    return out;
}

RationalSelfMap jonquieres_from_affine(const Rational& a, const Rational& b, const Rational& c, const UPoly& f) {
    if (a == 0 || c == 0) throw Error(ErrorKind::InvalidArgument, "de Jonquieres map needs a, c nonzero");
    int d = std::max(1, f.degree());
    MultiPoly x = var(0), y = var(1), z = var(2);
    MultiPoly F(xyz());
    for (int i = 0; i <= f.degree(); ++i) F += cst(f.coeff(i)) * x.pow(i) * z.pow(d - i);
    MultiPoly zd1 = z.pow(d - 1);
    return RationalSelfMap({(cst(a) * x + cst(b) * z) * zd1, cst(c) * y * zd1 + F, z.pow(d)});
}

RationalSelfMap jonquieres_inverse(const Rational& a, const Rational& b, const Rational& c, const UPoly& f) {
    if (a == 0 || c == 0) throw Error(ErrorKind::InvalidArgument, "de Jonquieres map needs a, c nonzero");
    // x' = (x − b)/a, y' = (y − f(x'))/c
    UPoly shift({-b / a, Rational(1) / a});
    UPoly g;
    UPoly power({Rational(1)});
    for (int i = 0; i <= f.degree(); ++i) {
        g = g + UPoly({f.coeff(i)}) * power;
        power = power * shift;
    }
    UPoly h = UPoly({Rational(-1) / c}) * g;
    return jonquieres_from_affine(Rational(1) / a, -b / a, Rational(1) / c, h);
}

bool line_preimage_is_line(const RationalSelfMap& j, const PlaneCurve& line) {
    if (line.degree() != 1) throw Error(ErrorKind::InvalidArgument, "expected a line", {{"curve", line.to_string()}});
    MultiPoly z = var(2);
    if (proportional(line.poly(), z)) return true;  // the complement line itself
    MultiPoly rest = substitute(line.poly(), as_images(j));
    MultiPoly q;
    while (!rest.is_constant() && try_divide(rest, z, &q)) rest = q;
    return rest.total_degree() == 1;
}

// ---------------------------------------------------------------------------- gallery

namespace {

const char* kConic = "x*z + y^2";
const char* kQ = "(x*z + y^2)*((x*z + y^2)*z + 2*x^2*y) - x^5";

MultiPoly with_alpha(const char* pattern, const Rational& alpha) {
    std::string s(pattern), a = "(" + to_string(alpha) + ")";
    for (size_t p; (p = s.find('a')) != std::string::npos;) s.replace(p, 1, a);
    return parse_poly(s);
}

}  // namespace

QuinticGallery quintic_gallery(const Rational& alpha) {
    RationalSelfMap theta1 = RationalSelfMap::parse("x^2", "x*y", "x*z + y^2");
    RationalSelfMap theta2 = RationalSelfMap::parse("x*z", "x^2 - y*z", "z^2");
    // inverse search over quadratic maps with the base scheme of θ₁
    std::optional<RationalSelfMap> inv;
    int found = 0;
    for (int c = -3; c <= 3 && !inv; ++c) {
        RationalSelfMap cand({var(0).pow(2), var(0) * var(1), var(0) * var(2) + cst(c) * var(1).pow(2)});
        if (compose(cand, theta1) == RationalSelfMap::identity()) {
            inv = cand;
            found = c;
        }
    }
    if (!inv) throw Error(ErrorKind::FigureMismatch, "no quadratic inverse of theta1 in the searched family");
    RationalSelfMap psi = compose(*inv, compose(theta2, theta1));
    RationalSelfMap display = RationalSelfMap::parse("x*(x*z + y^2)^2", "(x*z + y^2)*(x^3 - y*(x*z + y^2))", kQ);
    RationalSelfMap normalization({var(0), cst(alpha) * var(0) + var(1),
                                   cst(-alpha * alpha) * var(0) - cst(2 * alpha) * var(1) + var(2)});
    MultiPoly L = with_alpha("a^2*x + 2*a*y - z", alpha);
    MultiPoly Qa = with_alpha("(x*z + y^2)*((x*z + y^2)*(a^2*x - 2*a*y - z) + 2*x^2*(a*x - y)) + x^5", alpha);
    return QuinticGallery{alpha,
                          theta1,
                          *inv,
                          theta2,
                          psi,
                          display,
                          normalization,
                          parse_poly(kConic),
                          PlaneCurve(parse_poly(kQ), true),
                          PlaneCurve(L, true),
                          PlaneCurve(Qa, true),
                          display.to_string(),
                          found};
}

nlohmann::json QuinticGallery::to_json() const {
    return {{"L_alpha", L_alpha.to_string()},
            {"Q", Q.to_string()},
            {"Q_alpha", Q_alpha.to_string()},
            {"alpha", to_string(alpha)},
            {"conic", conic.to_string()},
            {"normalization", normalization.to_json()},
            {"psi", psi.to_json()},
            {"psi_golden", psi_golden},
            {"theta1", theta1.to_json()},
            {"theta1_inverse", theta1_inv.to_json()},
            {"theta2", theta2.to_json()}};
}

std::vector<GalleryCheck> verify_gallery(const QuinticGallery& g) {
    std::vector<GalleryCheck> out;
    auto add = [&](std::string name, bool ok, std::string detail) { out.push_back({std::move(name), ok, std::move(detail)}); };

    add("psi_matches_display", g.psi.to_string() == g.psi_golden, g.psi.to_string());
    add("theta1_inverse", compose(g.theta1_inv, g.theta1) == RationalSelfMap::identity() &&
                              compose(g.theta1, g.theta1_inv) == RationalSelfMap::identity(),
        g.theta1_inv.to_string());
    add("theta2_involution", is_involution(g.theta2), g.theta2.to_string());
    add("psi_involution", is_involution(g.psi), "psi o psi = id");
    add("psi_degree", g.psi.degree() == 5, std::to_string(g.psi.degree()));

    BaseMultiplicityProfile prof = base_profile(g.psi);
    bool six = prof.mults == std::vector<int>(6, 2) && prof.tree.is_chain() && prof.tree.size() == 6 &&
               prof.tree[0].point && *prof.tree[0].point == ProjPoint(0, 0, 1);
    add("psi_base_profile", six && prof.homaloidal(), prof.to_json()["multiplicities"].dump());

    ParamCurve lpar = ParamCurve::line(g.L_alpha);
    add("psi_maps_L_alpha_into_Q_alpha", image_on_curve_check(g.psi, lpar, g.Q_alpha), g.Q_alpha.to_string());

    // substituting the normalization into the equation of Q_alpha gives the equation of Q
    MultiPoly pulled = substitute(g.Q_alpha.poly(), {g.normalization[0], g.normalization[1], g.normalization[2]});
    add("normalization_sends_Q_alpha_to_Q", proportional(pulled, g.Q.poly()), pulled.to_string());

    QuinticGallery zero = g.alpha == 0 ? g : quintic_gallery(0);
    add("Q_0_equals_Q", proportional(zero.Q_alpha.poly(), g.Q.poly()), zero.Q_alpha.to_string());

    MultiplicitySequence ms = multiplicity_sequence(g.Q, ProjPoint(0, 0, 1));
    add("Q_multiplicity_sequence", ms.entries == std::vector<int>(6, 2), nlohmann::json(ms.entries).dump());

    int back = image_degree(g.psi, prof, g.Q.degree(), curve_multiplicities(prof, g.Q));
    add("psi_inverse_sends_Q_to_a_line", back == 1, std::to_string(back));

    MultiPoly lz = parse_poly("z");
    PullbackFactorization pf = pullback_factorization(g.psi, g.Q, {g.conic}, &lz);
    bool pf_ok = pf.factors.size() == 1 && pf.factors[0].second == 12;
    add("psi_pullback_of_Q", pf_ok, pf.to_json().dump());
    return out;
}

nlohmann::json gallery_checks_json(const std::vector<GalleryCheck>& checks) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& c : checks) arr.push_back({{"detail", c.detail}, {"name", c.name}, {"ok", c.ok}});
    return arr;
}

}  // namespace curvecomp
