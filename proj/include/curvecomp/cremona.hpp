#pragma once

#include "curvecomp/geometry.hpp"
#include "curvecomp/infinitely_near.hpp"
#include "curvecomp/rational_map.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace curvecomp {

/// f ∘ g: the components of g substituted into f, common factor removed.
/// Throws DegenerateComposition when every component vanishes.
RationalSelfMap compose(const RationalSelfMap& f, const RationalSelfMap& g);

bool is_involution(const RationalSelfMap& f);

/// Base points of the linear system of a map with the system's multiplicity at each node.
struct BaseMultiplicityProfile {
    int degree = 0;
    ProximityTree tree;
    std::vector<int> mults;             // indexed like tree nodes
    bool complete = true;               // false when a base point could not be followed over Q
    std::vector<std::string> warnings;  // NonRationalBasePoint reports, multiplicity ambiguities

    size_t size() const { return mults.size(); }
    bool homaloidal() const;
    nlohmann::json to_json() const;
};

BaseMultiplicityProfile base_profile(const RationalSelfMap& f, long height = 1000000);

/// Multiplicities of a curve at the nodes of a profile (0 off the curve).
std::vector<int> curve_multiplicities(const BaseMultiplicityProfile& profile, const PlaneCurve& curve);

/// deg(f)·deg(C) − Σ m_p(f)·m_p(C); throws Contracted when the value is <= 0.
int image_degree(const RationalSelfMap& f, const BaseMultiplicityProfile& profile, int curve_degree,
                 const std::vector<int>& curve_mults);
int image_degree(const RationalSelfMap& f, const PlaneCurve& curve);

struct PullbackFactorization {
    std::vector<std::pair<MultiPoly, int>> factors;  // contracted curve equation and exponent
    MultiPoly residual;                               // primitive, constant 1 when nothing is left
    nlohmann::json to_json() const;
};

/// Splits target ∘ f into powers of the given contracted curves and a residual. With
/// `expected`, the residual must be proportional to it; otherwise it must be constant or
/// squarefree. Throws UnaccountedFactor.
PullbackFactorization pullback_factorization(const RationalSelfMap& f, const PlaneCurve& target,
                                             const std::vector<MultiPoly>& contracted,
                                             const MultiPoly* expected = nullptr);

/// Projectivization of (x, y) ↦ (ax + b, cy + f(x)) with respect to z = 0.
RationalSelfMap jonquieres_from_affine(const Rational& a, const Rational& b, const Rational& c, const UPoly& f);
/// The inverse of the map above, again of the same form.
RationalSelfMap jonquieres_inverse(const Rational& a, const Rational& b, const Rational& c, const UPoly& f);

/// Whether j⁻¹(L) is a line, read off the degree of the preimage L ∘ j with the
/// contracted line z = 0 removed.
bool line_preimage_is_line(const RationalSelfMap& j, const PlaneCurve& line);

struct QuinticGallery {
    Rational alpha;
    RationalSelfMap theta1, theta1_inv, theta2, psi, psi_display, normalization;
    MultiPoly conic;  // xz + y²
    PlaneCurve Q, L_alpha, Q_alpha;
    std::string psi_golden;  // displayed formula, normalized and printed
    int theta1_inverse_parameter = 0;  // c in [x² : xy : xz + c·y²] found by the inverse search
    nlohmann::json to_json() const;
};

/// Builds every named object; ψ is composed as θ₁⁻¹ ∘ θ₂ ∘ θ₁ (θ₁ applied first).
QuinticGallery quintic_gallery(const Rational& alpha);

struct GalleryCheck {
    std::string name;
    bool ok = false;
    std::string detail;
};

std::vector<GalleryCheck> verify_gallery(const QuinticGallery& g);
nlohmann::json gallery_checks_json(const std::vector<GalleryCheck>& checks);

}  // namespace curvecomp
