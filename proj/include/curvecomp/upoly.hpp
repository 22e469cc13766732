#pragma once

#include "curvecomp/poly.hpp"
#include "curvecomp/rational.hpp"

#include <utility>
#include <vector>

namespace curvecomp {

/// Dense univariate polynomial over Q, coefficients low degree first, no trailing zeros.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs);
    /// Requires p to involve at most variable `var`.
    static UPoly from_multi(const MultiPoly& p, int var);
    MultiPoly to_multi(const std::vector<std::string>& vars, int var) const;

    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const { return i >= 0 && i < static_cast<int>(c_.size()) ? c_[i] : Rational(0); }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    Rational operator()(const Rational& t) const;
    UPoly operator+(const UPoly& o) const;
    UPoly operator-(const UPoly& o) const;
    UPoly operator*(const UPoly& o) const;
    bool operator==(const UPoly& o) const { return c_ == o.c_; }

    UPoly derivative() const;
    UPoly monic() const;
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const;

private:
    void trim();
    std::vector<Rational> c_;
};

UPoly gcd(const UPoly& a, const UPoly& b);  // monic

/// Yun's algorithm: pairs (factor, multiplicity) with squarefree, pairwise coprime monic factors.
std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p);

/// Distinct rational roots with their multiplicities, sorted ascending. Roots whose
/// numerator or denominator exceeds `height` are not searched for.
std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p, long height = 1000000);

/// The rational-root-free part after dividing out all rational roots (monic).
UPoly deflate_rational_roots(const UPoly& p, long height = 1000000);

}  // namespace curvecomp
