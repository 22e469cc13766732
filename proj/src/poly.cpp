#include "curvecomp/poly.hpp"

#include "curvecomp/errors.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

namespace curvecomp {

bool GrlexDesc::operator()(const Monomial& a, const Monomial& b) const {
    int da = std::accumulate(a.begin(), a.end(), 0);
    int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly() : vars_(xyz()) {}

MultiPoly::MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

MultiPoly::MultiPoly(std::vector<std::string> vars, const Rational& c) : vars_(std::move(vars)) {
    if (c != 0) terms_.emplace(Monomial(vars_.size(), 0), c);
}

MultiPoly MultiPoly::variable(std::vector<std::string> vars, int index) {
    Monomial m(vars.size(), 0);
    m.at(index) = 1;
    return monomial(std::move(vars), std::move(m), 1);
}

MultiPoly MultiPoly::monomial(std::vector<std::string> vars, Monomial exps, const Rational& c) {
    MultiPoly p(std::move(vars));
    if (exps.size() != p.vars_.size())
        throw Error(ErrorKind::InvalidArgument, "monomial length does not match variable count");
    if (c != 0) p.terms_.emplace(std::move(exps), c);
    return p;
}

int MultiPoly::var_index(const std::string& name) const {
    for (size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return static_cast<int>(i);
    return -1;
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& m = terms_.begin()->first;
    return std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
}

Rational MultiPoly::constant_value() const {
    auto it = terms_.find(Monomial(vars_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

bool MultiPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree() == min_total_degree();
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& m = terms_.begin()->first;
    return std::accumulate(m.begin(), m.end(), 0);
}

int MultiPoly::min_total_degree() const {
    if (terms_.empty()) return -1;
    const auto& m = terms_.rbegin()->first;
    return std::accumulate(m.begin(), m.end(), 0);
}

int MultiPoly::degree_in(int var) const {
    int d = -1;
    for (const auto& [m, c] : terms_) d = std::max(d, m[var]);
    return d;
}

int MultiPoly::min_degree_in(int var) const {
    if (terms_.empty()) return -1;
    int d = terms_.begin()->first[var];
    for (const auto& [m, c] : terms_) d = std::min(d, m[var]);
    return d;
}

const Monomial& MultiPoly::leading_monomial() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "leading monomial of zero polynomial");
    return terms_.begin()->first;
}

const Rational& MultiPoly::leading_coefficient() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroInput, "leading coefficient of zero polynomial");
    return terms_.begin()->second;
}

void MultiPoly::add_term(const Monomial& m, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (vars_ != o.vars_)
        throw Error(ErrorKind::InvalidArgument, "polynomials over different variable lists");
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
    check_compatible(o);
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check_compatible(b);
    MultiPoly r(a.vars_);
    if (a.is_zero() || b.is_zero()) return r;
    Monomial m(a.vars_.size());
    Rational c;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            c = ca * cb;
            r.add_term(m, c);
        }
    }
    return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
    *this = *this * o;
    return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

bool MultiPoly::operator==(const MultiPoly& o) const { return vars_ == o.vars_ && terms_ == o.terms_; }

MultiPoly MultiPoly::pow(int e) const {
    if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent");
    MultiPoly result(vars_, 1), base(*this);
    while (e > 0) {
        if (e & 1) result = result * base;
        e >>= 1;
        if (e) base = base * base;
    }
    return result;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(int var) const {
    std::vector<MultiPoly> out(std::max(0, degree_in(var) + 1), MultiPoly(vars_));
    for (const auto& [m, c] : terms_) {
        Monomial r = m;
        r[var] = 0;
        out[m[var]].terms_.emplace(std::move(r), c);
    }
    return out;
}

MultiPoly MultiPoly::derivative(int var) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        if (m[var] == 0) continue;
        Monomial d = m;
        d[var] -= 1;
        r.add_term(d, c * m[var]);
    }
    return r;
}

Rational MultiPoly::evaluate(const std::vector<Rational>& point) const {
    if (point.size() != vars_.size())
        throw Error(ErrorKind::InvalidArgument, "evaluation point has wrong dimension");
    std::vector<std::vector<Rational>> powers(vars_.size(), std::vector<Rational>{Rational(1)});
    Rational sum = 0;
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (size_t i = 0; i < m.size(); ++i) {
            auto& pw = powers[i];
            while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * point[i]);
            t *= pw[m[i]];
        }
        sum += t;
    }
    return sum;
}

MultiPoly MultiPoly::evaluate_var(int var, const Rational& value) const {
    MultiPoly r(vars_);
    std::vector<Rational> pw{Rational(1)};
    for (const auto& [m, c] : terms_) {
        while (static_cast<int>(pw.size()) <= m[var]) pw.push_back(pw.back() * value);
        Monomial k = m;
        k[var] = 0;
        r.add_term(k, c * pw[m[var]]);
    }
    return r;
}

MultiPoly MultiPoly::homogeneous_part(int degree) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_)
        if (std::accumulate(m.begin(), m.end(), 0) == degree) r.terms_.emplace(m, c);
    return r;
}

MultiPoly MultiPoly::shift(int var, int k) const {
    MultiPoly r(vars_);
    for (const auto& [m, c] : terms_) {
        Monomial s = m;
        s[var] += k;
        if (s[var] < 0) throw Error(ErrorKind::NotDivisible, "negative exponent after shift");
        r.terms_.emplace(std::move(s), c);
    }
    return r;
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& target) const {
    if (target == vars_) return *this;
    std::vector<int> map(vars_.size(), -1);
    for (size_t i = 0; i < vars_.size(); ++i)
        for (size_t j = 0; j < target.size(); ++j)
            if (target[j] == vars_[i]) map[i] = static_cast<int>(j);
    MultiPoly r(target);
    for (const auto& [m, c] : terms_) {
        Monomial t(target.size(), 0);
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (map[i] < 0)
                throw Error(ErrorKind::InvalidArgument, "variable '" + vars_[i] + "' missing in target list");
            t[map[i]] = m[i];
        }
        r.add_term(t, c);
    }
    return r;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        bool neg = c < 0;
        if (first) {
            if (neg) out << "-";
        } else {
            out << (neg ? " - " : " + ");
        }
        first = false;
        Rational a = neg ? Rational(-c) : c;
        bool constant = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
        bool need_star = false;
        if (constant || a != 1) {
            out << curvecomp::to_string(a);
            need_star = true;
        }
        for (size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) out << "*";
            out << vars_[i];
            if (m[i] > 1) out << "^" << m[i];
            need_star = true;
        }
    }
    return out.str();
}

HomogeneousPoly::HomogeneousPoly(const MultiPoly& p) {
    base_ = p.with_vars(xyz());
    if (base_.is_zero()) throw Error(ErrorKind::ZeroInput, "zero form");
    if (!base_.is_homogeneous())
        throw Error(ErrorKind::InvalidArgument, "polynomial is not homogeneous: " + base_.to_string());
    degree_ = base_.total_degree();
}

const std::vector<std::string>& xyz() {
    static const std::vector<std::string> v{"x", "y", "z"};
    return v;
}

const std::vector<std::string>& xy() {
    static const std::vector<std::string> v{"x", "y"};
    return v;
}

const std::vector<std::string>& st() {
    static const std::vector<std::string> v{"s", "t"};
    return v;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
public:
    Parser(std::string_view text, const std::vector<std::string>& vars) : s_(text), vars_(vars) {}

    MultiPoly parse() {
        MultiPoly r = expr();
        skip();
        if (pos_ != s_.size()) fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw Error(ErrorKind::ParseError,
                    what + " at position " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    int peek() {
        skip();
        return pos_ < s_.size() ? static_cast<unsigned char>(s_[pos_]) : -1;
    }

    bool starts_atom(int c) const { return c == '(' || (c >= 0 && std::isalnum(c)); }

    MultiPoly expr() {
        MultiPoly r = term();
        for (;;) {
            int c = peek();
            if (c == '+') {
                ++pos_;
                r += term();
            } else if (c == '-') {
                ++pos_;
                r -= term();
            } else {
                return r;
            }
        }
    }

    MultiPoly term() {
        MultiPoly r = unary();
        for (;;) {
            int c = peek();
            if (c == '*') {
                ++pos_;
                r = r * unary();
            } else if (c == '/') {
                ++pos_;
                MultiPoly d = unary();
                if (!d.is_constant() || d.is_zero()) fail("division by a non-constant or zero");
                r *= Rational(1) / d.constant_value();
            } else if (starts_atom(c)) {
                r = r * power();
            } else {
                return r;
            }
        }
    }

    MultiPoly unary() {
        int c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    MultiPoly power() {
        MultiPoly base = atom();
        if (peek() == '^') {
            ++pos_;
            skip();
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) fail("expected exponent");
            if (pos_ - start > 4) fail("exponent too large");
            base = base.pow(std::stoi(std::string(s_.substr(start, pos_ - start))));
        }
        return base;
    }

    MultiPoly atom() {
        int c = peek();
        if (c == '(') {
            ++pos_;
            MultiPoly r = expr();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return r;
        }
        if (c >= 0 && std::isdigit(c)) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return MultiPoly(vars_, Rational(Integer(std::string(s_.substr(start, pos_ - start)), 10)));
        }
        if (c >= 0 && std::isalpha(c)) {
            std::string name(1, static_cast<char>(c));
            for (size_t i = 0; i < vars_.size(); ++i) {
                if (vars_[i] == name) {
                    ++pos_;
                    return MultiPoly::variable(vars_, static_cast<int>(i));
                }
            }
            fail("unknown variable '" + name + "'");
        }
        fail(c < 0 ? "unexpected end of input" : "unexpected character '" + std::string(1, static_cast<char>(c)) + "'");
    }

    std::string_view s_;
    const std::vector<std::string>& vars_;
    size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars) {
    for (const auto& v : vars)
        if (v.size() != 1) throw Error(ErrorKind::InvalidArgument, "parser variables must be single letters");
    return Parser(text, vars).parse();
}

// ---------------------------------------------------------------- content, gcd

Rational content(const MultiPoly& p) {
    if (p.is_zero()) return 0;
    Integer num = 0, den = 1;
    for (const auto& [m, c] : p.terms()) {
        num = gcd(num, c.get_num());
        den = lcm(den, c.get_den());
    }
    Rational r(num, den);
    r.canonicalize();
    if (p.leading_coefficient() < 0) r = -r;
    return r;
}

MultiPoly primitive_part(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / content(p));
}

MultiPoly monic(const MultiPoly& p) {
    if (p.is_zero()) return p;
    return p * (Rational(1) / p.leading_coefficient());
}

namespace {

int highest_var(const MultiPoly& p) {
    for (int v = p.nvars() - 1; v >= 0; --v)
        if (p.degree_in(v) > 0) return v;
    return -1;
}

MultiPoly content_in(const MultiPoly& p, int v);

// Pseudo-remainder of a by b in variable v, up to a factor that is a power of lc_v(b).
MultiPoly sparse_prem(MultiPoly a, const MultiPoly& b, int v) {
    int db = b.degree_in(v);
    MultiPoly lcb = b.coefficients_in(v)[db];
    while (!a.is_zero()) {
        int da = a.degree_in(v);
        if (da < db) break;
        MultiPoly lca = a.coefficients_in(v)[da];
        a = lcb * a - (lca * b).shift(v, da - db);
    }
    return a;
}

MultiPoly primitive_in(const MultiPoly& p, int v) {
    MultiPoly c = content_in(p, v);
    return primitive_part(exact_divide(p, c));
}

}  // namespace

MultiPoly gcd(const MultiPoly& a, const MultiPoly& b) {
    if (a.vars() != b.vars()) throw Error(ErrorKind::InvalidArgument, "gcd over different variable lists");
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    MultiPoly one(a.vars(), 1);
    if (a.is_constant() || b.is_constant()) return one;
    MultiPoly q;
    if (b.total_degree() <= a.total_degree() && try_divide(a, b, &q)) return primitive_part(b);
    if (a.total_degree() <= b.total_degree() && try_divide(b, a, &q)) return primitive_part(a);

    int v = std::max(highest_var(a), highest_var(b));
    if (a.degree_in(v) == 0) return gcd(a, content_in(b, v));
    if (b.degree_in(v) == 0) return gcd(content_in(a, v), b);

    MultiPoly ca = content_in(a, v), cb = content_in(b, v);
    MultiPoly c = gcd(ca, cb);
    MultiPoly A = primitive_part(exact_divide(a, ca));
    MultiPoly B = primitive_part(exact_divide(b, cb));
    if (A.degree_in(v) < B.degree_in(v)) std::swap(A, B);
    MultiPoly g = one;
    for (;;) {
        MultiPoly r = sparse_prem(A, B, v);
        if (r.is_zero()) {
            g = B;
            break;
        }
        if (r.degree_in(v) == 0) {
            g = one;
            break;
        }
        A = std::move(B);
        B = primitive_in(r, v);
    }
    return primitive_part(c * primitive_in(g, v));
}

namespace {

MultiPoly content_in(const MultiPoly& p, int v) {
    MultiPoly g(p.vars());
    for (const auto& coeff : p.coefficients_in(v)) {
        if (coeff.is_zero()) continue;
        g = gcd(g, coeff);
        if (g.is_constant()) return MultiPoly(p.vars(), 1);
    }
    return g.is_zero() ? MultiPoly(p.vars(), 1) : g;
}

}  // namespace

bool try_divide(const MultiPoly& a, const MultiPoly& b, MultiPoly* quotient) {
    if (b.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero polynomial");
    if (a.vars() != b.vars()) throw Error(ErrorKind::InvalidArgument, "division over different variable lists");
    MultiPoly q(a.vars());
    if (a.is_zero()) {
        if (quotient) *quotient = q;
        return true;
    }
    for (int v = 0; v < a.nvars(); ++v)
        if (a.degree_in(v) < b.degree_in(v)) return false;
    MultiPoly r = a;
    const Monomial& lb = b.leading_monomial();
    const Rational lcb = b.leading_coefficient();
    const int bdeg = b.total_degree();
    Monomial t(a.nvars());
    while (!r.is_zero()) {
        if (r.total_degree() < bdeg) return false;
        const Monomial& lr = r.leading_monomial();
        for (int i = 0; i < a.nvars(); ++i) {
            t[i] = lr[i] - lb[i];
            if (t[i] < 0) return false;
        }
        Rational c = r.leading_coefficient() / lcb;
        q.add_term(t, c);
        Monomial s(a.nvars());
        for (const auto& [mb, cb] : b.terms()) {
            for (int i = 0; i < a.nvars(); ++i) s[i] = mb[i] + t[i];
            r.add_term(s, -c * cb);
        }
    }
    if (quotient) *quotient = std::move(q);
    return true;
}

MultiPoly exact_divide(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly q;
    if (!try_divide(a, b, &q))
        throw Error(ErrorKind::NotDivisible, "(" + b.to_string() + ") does not divide (" + a.to_string() + ")",
                    {{"dividend", a.to_string()}, {"divisor", b.to_string()}});
    return q;
}

MultiPoly resultant(const MultiPoly& a, const MultiPoly& b, int var) {
    if (a.is_zero() || b.is_zero()) throw Error(ErrorKind::ZeroInput, "resultant with zero polynomial");
    if (a.vars() != b.vars()) throw Error(ErrorKind::InvalidArgument, "resultant over different variable lists");
    auto ca = a.coefficients_in(var), cb = b.coefficients_in(var);
    int m = static_cast<int>(ca.size()) - 1, n = static_cast<int>(cb.size()) - 1;
    int size = m + n;
    MultiPoly zero(a.vars()), one(a.vars(), 1);
    if (size == 0) return one;
    std::vector<std::vector<MultiPoly>> M(size, std::vector<MultiPoly>(size, zero));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) M[i][i + j] = ca[m - j];
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) M[n + i][i + j] = cb[n - j];

    int sign = 1;
    MultiPoly prev = one;
    for (int k = 0; k + 1 < size; ++k) {
        if (M[k][k].is_zero()) {
            int piv = -1;
            for (int i = k + 1; i < size; ++i)
                if (!M[i][k].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv < 0) return zero;
            std::swap(M[k], M[piv]);
            sign = -sign;
        }
        for (int i = k + 1; i < size; ++i) {
            for (int j = k + 1; j < size; ++j) {
                MultiPoly num = M[k][k] * M[i][j] - M[i][k] * M[k][j];
                M[i][j] = exact_divide(num, prev);
            }
            M[i][k] = zero;
        }
        prev = M[k][k];
    }
    MultiPoly det = M[size - 1][size - 1];
    return sign < 0 ? -det : det;
}

// ---------------------------------------------------------------- substitution

MultiPoly substitute(const MultiPoly& f, const std::vector<MultiPoly>& images) {
    if (static_cast<int>(images.size()) != f.nvars())
        throw Error(ErrorKind::InvalidArgument, "substitution needs one image per variable");
    std::vector<std::string> target = images.empty() ? f.vars() : images[0].vars();
    for (const auto& im : images)
        if (im.vars() != target) throw Error(ErrorKind::InvalidArgument, "images over different variable lists");
    std::vector<std::vector<MultiPoly>> powers(images.size());
    for (size_t i = 0; i < images.size(); ++i) powers[i].push_back(MultiPoly(target, 1));
    MultiPoly result(target);
    for (const auto& [m, c] : f.terms()) {
        MultiPoly t(target, c);
        for (size_t i = 0; i < m.size(); ++i) {
            auto& pw = powers[i];
            while (static_cast<int>(pw.size()) <= m[i]) pw.push_back(pw.back() * images[i]);
            if (m[i] > 0) t = t * pw[m[i]];
        }
        result += t;
    }
    return result;
}

MultiPoly substitute(const MultiPoly& f, const std::map<std::string, MultiPoly>& bindings) {
    std::vector<std::string> target = bindings.empty() ? f.vars() : bindings.begin()->second.vars();
    std::vector<MultiPoly> images;
    for (int i = 0; i < f.nvars(); ++i) {
        auto it = bindings.find(f.vars()[i]);
        if (it != bindings.end()) {
            images.push_back(it->second.with_vars(target));
            continue;
        }
        auto pos = std::find(target.begin(), target.end(), f.vars()[i]);
        if (pos == target.end())
            throw Error(ErrorKind::InvalidArgument, "unbound variable '" + f.vars()[i] + "' absent from target");
        images.push_back(MultiPoly::variable(target, static_cast<int>(pos - target.begin())));
    }
    return substitute(f, images);
}

bool proportional(const MultiPoly& a, const MultiPoly& b, Rational* factor) {
    if (a.is_zero() || b.is_zero()) {
        if (factor) *factor = 1;
        return a.is_zero() && b.is_zero();
    }
    if (a.size() != b.size() || a.vars() != b.vars()) return false;
    Rational r = a.leading_coefficient() / b.leading_coefficient();
    auto ib = b.terms().begin();
    for (const auto& [m, c] : a.terms()) {
        if (ib->first != m || c != r * ib->second) return false;
        ++ib;
    }
    if (factor) *factor = r;
    return true;
}

bool is_squarefree(const MultiPoly& p) {
    if (p.is_zero()) return false;
    MultiPoly g = p;
    for (int v = 0; v < p.nvars(); ++v) {
        if (p.degree_in(v) <= 0) continue;
        g = gcd(g, p.derivative(v));
        if (g.is_constant()) return true;
    }
    return g.is_constant();
}

}  // namespace curvecomp
