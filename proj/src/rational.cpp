#include "curvecomp/rational.hpp"

#include "curvecomp/errors.hpp"

#include <cctype>

namespace curvecomp {

namespace {

bool valid_integer_text(std::string_view s) {
    size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::string trim(std::string_view s) {
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

Integer parse_integer(std::string_view s) {
    std::string t = trim(s);
    if (!valid_integer_text(t)) throw Error(ErrorKind::ParseError, "malformed integer '" + t + "'");
    if (t[0] == '+') t.erase(0, 1);
    return Integer(t, 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string t = trim(text);
    auto slash = t.find('/');
    if (slash == std::string::npos) return Rational(parse_integer(t));
    Integer num = parse_integer(std::string_view(t).substr(0, slash));
    Integer den = parse_integer(std::string_view(t).substr(slash + 1));
    if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + t + "'");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const Integer& n) { return n.get_str(); }

Integer numerator(const Rational& q) { return q.get_num(); }
Integer denominator(const Rational& q) { return q.get_den(); }

Integer abs(const Integer& n) { return n < 0 ? Integer(-n) : n; }
Rational abs(const Rational& q) { return q < 0 ? Rational(-q) : q; }

Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

Integer isqrt(const Integer& n, bool* exact) {
    if (n < 0) {
        if (exact) *exact = false;
        return 0;
    }
    Integer r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    if (exact) *exact = (r * r == n);
    return r;
}

}  // namespace curvecomp
