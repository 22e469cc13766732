#pragma once

#include "curvecomp/poly.hpp"
#include "curvecomp/upoly.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace curvecomp {

class RationalSelfMap;

/// Point of P²(Q), stored with its first nonzero coordinate equal to 1.
class ProjPoint {
public:
    ProjPoint(const Rational& a, const Rational& b, const Rational& c);
    /// Accepts "[a/b : c : d]" (brackets optional, whitespace ignored).
    static ProjPoint parse(std::string_view text);

    const std::array<Rational, 3>& coords() const { return c_; }
    const Rational& operator[](int i) const { return c_[i]; }
    std::string to_string() const;

    bool operator==(const ProjPoint& o) const { return c_ == o.c_; }
    bool operator!=(const ProjPoint& o) const { return !(c_ == o.c_); }
    bool operator<(const ProjPoint& o) const { return c_ < o.c_; }

private:
    std::array<Rational, 3> c_;
};

class PlaneCurve {
public:
    /// Stores the primitive part of `equation`. Throws InvalidArgument for non-forms or
    /// constants, NotSquarefree for repeated factors. `irreducible` is the caller's claim.
    explicit PlaneCurve(const MultiPoly& equation, std::optional<bool> irreducible = std::nullopt);
    static PlaneCurve parse(std::string_view equation, std::optional<bool> irreducible = std::nullopt);
    static PlaneCurve from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

    const HomogeneousPoly& equation() const { return eq_; }
    const MultiPoly& poly() const { return eq_.poly(); }
    int degree() const { return eq_.degree(); }
    std::optional<bool> irreducible() const { return irreducible_; }
    bool contains(const ProjPoint& p) const;
    std::string to_string() const { return eq_.to_string(); }

private:
    HomogeneousPoly eq_;
    std::optional<bool> irreducible_;
};

PlaneCurve load_curve_file(const std::string& path);

/// Three binary forms in (s, t) of one degree, no common factor.
class ParamCurve {
public:
    explicit ParamCurve(std::array<MultiPoly, 3> components);
    static ParamCurve line_through(const ProjPoint& p, const ProjPoint& q);
    static ParamCurve line(const PlaneCurve& line);
    /// Projection from a rational point of a smooth conic.
    static ParamCurve conic(const PlaneCurve& conic, const ProjPoint& on_it);

    const std::array<MultiPoly, 3>& components() const { return c_; }
    int degree() const { return c_[0].is_zero() ? (c_[1].is_zero() ? c_[2].total_degree() : c_[1].total_degree())
                                                 : c_[0].total_degree(); }
    ProjPoint at(const Rational& s, const Rational& t) const;

private:
    std::array<MultiPoly, 3> c_;
};

/// Direction of the blow-up at the origin of an affine chart: vertical means the
/// tangent direction (0,1), handled in the chart (x,y) -> (xy,y); otherwise direction
/// (1,slope), handled in the chart (x,y) -> (x, x(y+slope)). Either way the point is
/// moved to the new origin.
struct Direction {
    bool vertical = false;
    Rational slope = 0;

    static Direction vert() { return {true, 0}; }
    static Direction with_slope(const Rational& t) { return {false, t}; }
    bool operator==(const Direction& o) const { return vertical == o.vertical && (vertical || slope == o.slope); }
    bool operator<(const Direction& o) const;
    std::string to_string() const;
};

/// Index (in xy()) of the variable defining the exceptional line in the chart of `d`.
int exceptional_var(const Direction& d);
/// f composed with the chart map of `d` (no division), over xy().
MultiPoly chart_pullback(const MultiPoly& f, const Direction& d);
/// Pullback divided by the k-th power of the exceptional variable. Throws NotDivisible.
MultiPoly strict_transform(const MultiPoly& f, const Direction& d, int k);

struct TangentCone {
    int order = 0;  // multiplicity at the origin
    std::vector<std::pair<Direction, int>> rational;  // sorted, slopes before vertical
    UPoly irrational;  // part of the cone without rational directions, as a form in the slope
};

/// Tangent cone at the origin of an affine polynomial over xy().
TangentCone tangent_cone(const MultiPoly& germ);

/// Affine polynomial over xy() with p moved to the origin. The chart is z = 1 when
/// p_z != 0, else y = 1, else x = 1; the local coordinates are the remaining two in order.
MultiPoly local_germ(const MultiPoly& form, const ProjPoint& p);
int local_chart(const ProjPoint& p);
/// The projective point reached from p by the local offset (u, v) in p's chart.
ProjPoint from_local(const ProjPoint& p, const Rational& u, const Rational& v);

PlaneCurve line_through(const ProjPoint& p, const ProjPoint& q);

int multiplicity_at(const PlaneCurve& curve, const ProjPoint& p);
int multiplicity_at(const MultiPoly& form, const ProjPoint& p);

/// Fulton's algorithm on affine germs at the origin (over xy()).
int local_intersection_number(const MultiPoly& f, const MultiPoly& g);
int intersection_multiplicity(const PlaneCurve& a, const PlaneCurve& b, const ProjPoint& p);
int intersection_multiplicity(const MultiPoly& a, const MultiPoly& b, const ProjPoint& p);

/// Rational common zeros of two coprime forms, sorted. Throws CommonComponent.
std::vector<ProjPoint> common_rational_points(const MultiPoly& a, const MultiPoly& b, long height = 1000000);

struct IntersectionResult {
    std::vector<std::pair<ProjPoint, int>> points;
    bool complete = false;
    int total() const;
};

IntersectionResult rational_intersections(const PlaneCurve& a, const PlaneCurve& b);

std::vector<PlaneCurve> very_tangent_lines(const PlaneCurve& curve, const ProjPoint& through);

std::vector<ProjPoint> singular_rational_points(const PlaneCurve& curve);

/// A proper point (empty path) or the infinitely near point reached from `base`
/// by blowing up along `path`.
struct PointCondition {
    ProjPoint base;
    std::vector<Direction> path;
};

struct ConicFamily {
    std::vector<MultiPoly> basis;  // linearly independent conics satisfying the conditions
    int dimension() const { return static_cast<int>(basis.size()) - 1; }  // projective dimension
    std::optional<PlaneCurve> unique() const;
};

/// Conics through the given (possibly infinitely near) points, one condition each.
/// Infinitely near conditions are read on virtual transforms, so a condition with a
/// path of length r must be preceded by the conditions of its r ancestors.
ConicFamily conic_through(const std::vector<PointCondition>& conditions);

bool image_on_curve_check(const RationalSelfMap& map, const ParamCurve& source, const PlaneCurve& target);

}  // namespace curvecomp
