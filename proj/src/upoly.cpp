#include "curvecomp/upoly.hpp"

#include "curvecomp/errors.hpp"

#include <algorithm>

namespace curvecomp {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

void UPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UPoly UPoly::from_multi(const MultiPoly& p, int var) {
    std::vector<Rational> c(std::max(0, p.degree_in(var) + 1));
    for (const auto& [m, coeff] : p.terms()) {
        for (int i = 0; i < p.nvars(); ++i)
            if (i != var && m[i] != 0)
                throw Error(ErrorKind::InvalidArgument, "polynomial is not univariate: " + p.to_string());
        c[m[var]] += coeff;
    }
    return UPoly(std::move(c));
}

MultiPoly UPoly::to_multi(const std::vector<std::string>& vars, int var) const {
    MultiPoly r(vars);
    for (int i = 0; i <= degree(); ++i) {
        Monomial m(vars.size(), 0);
        m[var] = i;
        r.add_term(m, c_[i]);
    }
    return r;
}

Rational UPoly::operator()(const Rational& t) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * t + *it;
    return r;
}

UPoly UPoly::operator+(const UPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] += o.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator-(const UPoly& o) const {
    std::vector<Rational> c(std::max(c_.size(), o.c_.size()));
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) c[i] -= o.c_[i];
    return UPoly(std::move(c));
}

UPoly UPoly::operator*(const UPoly& o) const {
    if (is_zero() || o.is_zero()) return UPoly();
    std::vector<Rational> c(c_.size() + o.c_.size() - 1);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
    return UPoly(std::move(c));
}

UPoly UPoly::derivative() const {
    std::vector<Rational> c;
    for (size_t i = 1; i < c_.size(); ++i) c.push_back(c_[i] * static_cast<long>(i));
    return UPoly(std::move(c));
}

UPoly UPoly::monic() const {
    if (is_zero()) return *this;
    std::vector<Rational> c = c_;
    Rational l = c.back();
    for (auto& v : c) v /= l;
    return UPoly(std::move(c));
}

std::pair<UPoly, UPoly> UPoly::divmod(const UPoly& d) const {
    if (d.is_zero()) throw Error(ErrorKind::ZeroInput, "division by zero polynomial");
    std::vector<Rational> r = c_;
    int dd = d.degree();
    std::vector<Rational> q(std::max(0, degree() - dd + 1));
    for (int i = degree(); i >= dd; --i) {
        Rational f = r[i] / d.c_[dd];
        if (f == 0) continue;
        q[i - dd] = f;
        for (int j = 0; j <= dd; ++j) r[i - dd + j] -= f * d.c_[j];
    }
    return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x.divmod(y).second;
        x = std::move(y);
        y = r.monic();
    }
    return x.monic();
}

std::vector<std::pair<UPoly, int>> squarefree_decomposition(const UPoly& p) {
    std::vector<std::pair<UPoly, int>> out;
    if (p.degree() <= 0) return out;
    UPoly f = p.monic();
    UPoly fp = f.derivative();
    UPoly a = gcd(f, fp);
    UPoly b = f.divmod(a).first;
    UPoly c = fp.divmod(a).first;
    UPoly d = c - b.derivative();
    int i = 1;
    while (b.degree() > 0) {
        UPoly g = gcd(b, d);
        if (g.degree() > 0) out.emplace_back(g.monic(), i);
        b = b.divmod(g).first;
        c = d.divmod(g).first;
        d = c - b.derivative();
        ++i;
    }
    return out;
}

namespace {

const std::vector<long>& small_primes() {
    static const std::vector<long> primes = [] {
        const long limit = 1000000;
        std::vector<bool> sieve(limit + 1, true);
        std::vector<long> ps;
        for (long i = 2; i <= limit; ++i) {
            if (!sieve[i]) continue;
            ps.push_back(i);
            for (long j = i * i; j <= limit; j += i) sieve[j] = false;
        }
        return ps;
    }();
    return primes;
}

// Divisors of n not exceeding bound, using only prime factors up to bound.
std::vector<long> bounded_divisors(Integer n, long bound) {
    if (n < 0) n = -n;
    std::vector<std::pair<long, int>> factors;
    bool exhausted = true;
    for (long p : small_primes()) {
        if (p > bound) break;
        if (Integer(p) * p > n) {
            exhausted = false;
            break;
        }
        int e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            n /= p;
            ++e;
        }
        if (e) factors.emplace_back(p, e);
    }
    if (!exhausted && n > 1 && n <= bound) factors.emplace_back(n.get_si(), 1);
    std::vector<long> divs{1};
    for (auto [p, e] : factors) {
        size_t base = divs.size();
        long pk = 1;
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            if (pk > bound) break;
            for (size_t i = 0; i < base; ++i)
                if (divs[i] <= bound / pk) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Roots of a squarefree polynomial with integer coefficients a (low first).
std::vector<Rational> squarefree_roots(std::vector<Integer> a, long height) {
    std::vector<Rational> roots;
    size_t shift = 0;
    while (shift < a.size() && a[shift] == 0) ++shift;
    if (shift > 0) {
        roots.emplace_back(0);
        a.erase(a.begin(), a.begin() + shift);
    }
    int n = static_cast<int>(a.size()) - 1;
    if (n <= 0) return roots;
    if (n == 1) {
        Rational r(-a[0], a[1]);
        r.canonicalize();
        if (abs(r.get_num()) <= height && r.get_den() <= height) roots.push_back(r);
        return roots;
    }
    auto ps = bounded_divisors(a[0], height);
    auto qs = bounded_divisors(a[n], height);
    if (static_cast<double>(ps.size()) * static_cast<double>(qs.size()) > 2.0e7)
        throw Error(ErrorKind::InternalLimit, "too many rational root candidates");
    Integer f1 = 0, fm1 = 0;
    for (int i = 0; i <= n; ++i) {
        f1 += a[i];
        fm1 += (i % 2 ? -a[i] : a[i]);
    }
    auto eval_zero = [&](const Integer& p, const Integer& q) {
        Integer s = 0, qp = 1;
        std::vector<Integer> qpow(n + 1);
        for (int i = 0; i <= n; ++i) {
            qpow[i] = qp;
            qp *= q;
        }
        Integer pp = 1;
        for (int i = 0; i <= n; ++i) {
            s += a[i] * pp * qpow[n - i];
            pp *= p;
        }
        return s == 0;
    };
    for (long q : qs) {
        for (long p : ps) {
            if (gcd(Integer(p), Integer(q)) != 1) continue;
            for (int sgn : {1, -1}) {
                Integer P = sgn * p, Q = q;
                Integer d1 = Q - P, d2 = Q + P;
                if (f1 != 0 && (d1 == 0 || !mpz_divisible_p(f1.get_mpz_t(), d1.get_mpz_t()))) continue;
                if (fm1 != 0 && (d2 == 0 || !mpz_divisible_p(fm1.get_mpz_t(), d2.get_mpz_t()))) continue;
                if (eval_zero(P, Q)) {
                    Rational r(P, Q);
                    r.canonicalize();
                    roots.push_back(r);
                    if (static_cast<int>(roots.size()) == n + (shift > 0 ? 1 : 0)) return roots;
                }
            }
        }
    }
    return roots;
}

std::vector<Integer> integer_coefficients(const UPoly& p) {
    Integer den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
    std::vector<Integer> a;
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        Rational v = c * den;
        a.push_back(v.get_num());
        g = gcd(g, a.back());
    }
    if (g > 1)
        for (auto& v : a) v /= g;
    return a;
}

}  // namespace

std::vector<std::pair<Rational, int>> rational_roots(const UPoly& p, long height) {
    std::vector<std::pair<Rational, int>> out;
    if (p.degree() <= 0) return out;
    for (const auto& [factor, mult] : squarefree_decomposition(p))
        for (const auto& r : squarefree_roots(integer_coefficients(factor), height)) out.emplace_back(r, mult);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

UPoly deflate_rational_roots(const UPoly& p, long height) {
    UPoly r = p.monic();
    for (const auto& [root, mult] : rational_roots(p, height))
        for (int i = 0; i < mult; ++i) r = r.divmod(UPoly({-root, Rational(1)})).first;
    return r;
}

}  // namespace curvecomp
