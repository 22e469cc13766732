#pragma once

#include "curvecomp/geometry.hpp"
#include "curvecomp/poly.hpp"

#include <json.hpp>

#include <array>
#include <optional>
#include <string>

namespace curvecomp {

/// Plane rational map [f0 : f1 : f2]. Construction removes the common factor and
/// scales to integer content 1 with the first nonzero component's leading coefficient positive.
class RationalSelfMap {
public:
    explicit RationalSelfMap(std::array<MultiPoly, 3> components);
    static RationalSelfMap parse(const std::string& f0, const std::string& f1, const std::string& f2);
    static RationalSelfMap from_json(const nlohmann::json& j);
    static RationalSelfMap identity();
    nlohmann::json to_json() const;

    const std::array<MultiPoly, 3>& components() const { return c_; }
    const MultiPoly& operator[](int i) const { return c_[i]; }
    int degree() const { return degree_; }

    /// Image of a point, nullopt at a base point.
    std::optional<ProjPoint> apply(const ProjPoint& p) const;
    /// The three components with x, y, z replaced by the given polynomials.
    std::array<MultiPoly, 3> substitute_into(const std::vector<MultiPoly>& images) const;

    bool operator==(const RationalSelfMap& o) const { return c_ == o.c_; }
    std::string to_string() const;

private:
    std::array<MultiPoly, 3> c_;
    int degree_ = 0;
};

RationalSelfMap load_map_file(const std::string& path);

}  // namespace curvecomp
