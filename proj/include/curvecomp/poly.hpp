#pragma once

#include "curvecomp/rational.hpp"

#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace curvecomp {

using Monomial = std::vector<int>;

/// Graded-lexicographic order, largest first: higher total degree wins, ties broken
/// lexicographically with the first variable largest (x > y > z).
struct GrlexDesc {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Q. Terms are kept in GrlexDesc order so `terms().begin()`
/// is the leading term. Zero coefficients are never stored.
class MultiPoly {
public:
    using TermMap = std::map<Monomial, Rational, GrlexDesc>;

    MultiPoly();
    explicit MultiPoly(std::vector<std::string> vars);
    MultiPoly(std::vector<std::string> vars, const Rational& c);

    static MultiPoly variable(std::vector<std::string> vars, int index);
    static MultiPoly monomial(std::vector<std::string> vars, Monomial exps, const Rational& c);

    const std::vector<std::string>& vars() const { return vars_; }
    int nvars() const { return static_cast<int>(vars_.size()); }
    int var_index(const std::string& name) const;  // -1 if absent
    const TermMap& terms() const { return terms_; }
    size_t size() const { return terms_.size(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_value() const;  // coefficient of the zero monomial
    bool is_homogeneous() const;

    int total_degree() const;   // -1 for zero
    int min_total_degree() const;  // order at the origin, -1 for zero
    int degree_in(int var) const;  // -1 for zero
    int min_degree_in(int var) const;

    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;

    void add_term(const Monomial& m, const Rational& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& o);
    MultiPoly& operator-=(const MultiPoly& o);
    MultiPoly& operator*=(const MultiPoly& o);
    MultiPoly& operator*=(const Rational& c);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
    friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
    friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
    bool operator==(const MultiPoly& o) const;
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    MultiPoly pow(int e) const;

    /// Coefficients as polynomials in the remaining variables: result[k] multiplies var^k.
    std::vector<MultiPoly> coefficients_in(int var) const;
    MultiPoly derivative(int var) const;
    Rational evaluate(const std::vector<Rational>& point) const;
    /// Replaces one variable by a rational value (the variable stays in the list, exponent 0).
    MultiPoly evaluate_var(int var, const Rational& value) const;
    MultiPoly homogeneous_part(int degree) const;
    /// Multiplies by var^k (k may be negative only when every term allows it).
    MultiPoly shift(int var, int k) const;

    /// Re-expresses the polynomial over another variable list, matching by name.
    /// Variables missing from `target` must not occur.
    MultiPoly with_vars(const std::vector<std::string>& target) const;

    std::string to_string() const;

private:
    void check_compatible(const MultiPoly& o) const;

    std::vector<std::string> vars_;
    TermMap terms_;
};

/// Fixed-degree form in (x, y, z).
class HomogeneousPoly {
public:
    HomogeneousPoly() = default;
    /// Throws InvalidArgument unless p is a nonzero form in x, y, z (by name).
    explicit HomogeneousPoly(const MultiPoly& p);

    const MultiPoly& poly() const { return base_; }
    int degree() const { return degree_; }
    std::string to_string() const { return base_.to_string(); }
    bool operator==(const HomogeneousPoly& o) const { return base_ == o.base_; }

private:
    MultiPoly base_;
    int degree_ = 0;
};

const std::vector<std::string>& xyz();
const std::vector<std::string>& xy();
const std::vector<std::string>& st();

/// Grammar: sums of products of rational constants, variables, parenthesized
/// subexpressions and `^` powers. `*` may be omitted ("xz", "2x", "(x+y)(x-y)").
/// `/` is allowed only by a nonzero constant.
MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars = xyz());

/// Rational c with p = c * (integer primitive polynomial with positive leading coefficient).
Rational content(const MultiPoly& p);
MultiPoly primitive_part(const MultiPoly& p);
/// Scales by a nonzero rational so the leading coefficient is 1.
MultiPoly monic(const MultiPoly& p);

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b);
MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, int var);

/// Throws NotDivisible when b does not divide a.
MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b);
bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly* quotient);

/// Substitutes images[i] for variable i; all images share one variable list,
/// which becomes the variable list of the result.
MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images);
/// Named bindings; unbound variables pass through unchanged.
MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& bindings);

/// Two polynomials equal up to a nonzero rational factor.
bool proportional(const MultiPoly& a, const MultiPoly& b, Rational* factor = nullptr);

/// True when gcd(p, dp/dv) is constant for every variable occurring in p.
bool is_squarefree(const MultiPoly& p);

}  // namespace curvecomp
