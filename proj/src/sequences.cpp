#include "curvecomp/sequences.hpp"

#include "curvecomp/errors.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace curvecomp {

namespace {

long sum_sq(const std::vector<int>& s) {
    long t = 0;
    for (int v : s) t += static_cast<long>(v) * v;
    return t;
}

long sum_genus(const std::vector<int>& s) {
    long t = 0;
    for (int v : s) t += static_cast<long>(v) * (v - 1);
    return t;
}

bool non_increasing_ge2(const std::vector<int>& s) {
    for (size_t i = 0; i < s.size(); ++i) {
        if (s[i] < 2) return false;
        if (i > 0 && s[i] > s[i - 1]) return false;
    }
    return true;
}

bool is_constant(const std::vector<int>& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [&](int v) { return v == s[0]; });
}

/// (m_(k), (m−1)_(l)) with m >= 3, k, l >= 1.
bool one_step_shape(const std::vector<int>& s, int* m, int* k, int* l) {
    if (s.empty() || s[0] < 3) return false;
    size_t a = 0;
    while (a < s.size() && s[a] == s[0]) ++a;
    if (a == s.size()) return false;
    for (size_t i = a; i < s.size(); ++i)
        if (s[i] != s[0] - 1) return false;
    *m = s[0];
    *k = static_cast<int>(a);
    *l = static_cast<int>(s.size() - a);
    return true;
}

bool all_even_shape(const std::vector<int>& s, int* l_out) {
    if (s.empty() || s.back() != 2) return false;
    for (int v : s)
        if (v % 2) return false;
    size_t l = s.size();
    while (l > 0 && s[l - 1] == 2) --l;
    if (l == 0) return false;
    // m_j < m_{j+1} + ... + m_k for j <= l
    std::vector<long> suffix(s.size() + 1, 0);
    for (size_t i = s.size(); i-- > 0;) suffix[i] = suffix[i + 1] + s[i];
    for (size_t j = 0; j < l; ++j) {
        if (s[j] >= suffix[j + 1]) return false;
    }
    *l_out = static_cast<int>(l);
    return true;
}

const std::vector<std::pair<int, std::vector<int>>>& not_unicuspidal_list() {
    static const std::vector<std::pair<int, std::vector<int>>> list = {
        {6, {3, 2, 2, 2, 2, 2, 2, 2}},
        {7, {3, 3, 3, 3, 2, 2, 2}},
        {8, {4, 3, 3, 3, 3, 3}},
        {8, {4, 3, 3, 3, 3, 2, 2, 2}},
        {7, {5, 2, 2, 2, 2, 2}},
    };
    return list;
}

}  // namespace

std::string SequenceCandidate::to_string() const {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < entries.size();) {
        size_t j = i;
        while (j < entries.size() && entries[j] == entries[i]) ++j;
        if (i > 0) os << ",";
        os << entries[i];
        if (j - i > 1) os << "_(" << (j - i) << ")";
        i = j;
    }
    os << ")";
    return os.str();
}

nlohmann::json SequenceCandidate::to_json() const { return {{"degree", degree}, {"sequence", entries}}; }

std::vector<int> parse_sequence(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](unsigned char c) { return std::isspace(c); }), item.end());
        if (item.empty()) throw Error(ErrorKind::ParseError, "empty entry in sequence \"" + text + "\"");
        size_t us = item.find('_');
        try {
            size_t pos = 0;
            int value = std::stoi(item.substr(0, us), &pos);
            if (pos != (us == std::string::npos ? item.size() : us)) throw std::invalid_argument(item);
            int count = 1;
            if (us != std::string::npos) {
                std::string c = item.substr(us + 1);
                if (!c.empty() && c.front() == '(' && c.back() == ')') c = c.substr(1, c.size() - 2);
                count = std::stoi(c, &pos);
                if (pos != c.size() || count < 1) throw std::invalid_argument(item);
            }
            for (int i = 0; i < count; ++i) out.push_back(value);
        } catch (const std::logic_error&) {
            throw Error(ErrorKind::ParseError, "malformed sequence entry \"" + item + "\"");
        }
    }
    if (out.empty()) throw Error(ErrorKind::ParseError, "empty sequence");
    if (!non_increasing_ge2(out))
        throw Error(ErrorKind::ParseError, "sequence must be non-increasing with entries >= 2", {{"sequence", out}});
    return out;
}

GenusSquares genus_and_squares_check(const SequenceCandidate& c) {
    long d = c.degree;
    GenusSquares r;
    r.genus_ok = sum_genus(c.entries) == d * d - 3 * d + 2;
    r.squares_slack = d * d + 1 - sum_sq(c.entries);
    return r;
}

bool degree_bounds_check(const SequenceCandidate& c) {
    if (c.entries.empty()) return c.degree <= 2;
    int m1 = c.entries[0];
    int m2 = c.entries.size() > 1 ? c.entries[1] : 1;
    return m1 + m2 <= c.degree && c.degree < 3 * m1;
}

std::optional<SequenceCandidate> quadratic_reduction_filter(const SequenceCandidate& c, FilterPolicy policy) {
    const auto& s = c.entries;
    if (s.size() < 3) return std::nullopt;
    int d = c.degree, m1 = s[0], m2 = s[1], m3 = s[2];
    if (m1 + m2 + m3 <= d || m2 + m3 <= m1) return std::nullopt;
    if (policy == FilterPolicy::Published && !(m1 == m2 && m2 == m3)) return std::nullopt;
    SequenceCandidate r;
    r.degree = 2 * d - m1 - m2 - m3;
    std::vector<int> e = {d - m2 - m3, d - m1 - m3, d - m1 - m2};
    e.insert(e.end(), s.begin() + 3, s.end());
    for (int v : e)
        if (v >= 2) r.entries.push_back(v);
    std::sort(r.entries.begin(), r.entries.end(), std::greater<int>());
    return r;
}

Admissibility admissibility(const SequenceCandidate& c, FilterPolicy policy) {
    Admissibility a;
    if (!non_increasing_ge2(c.entries)) {
        a.reason = "entries must be non-increasing and >= 2";
        return a;
    }
    GenusSquares g = genus_and_squares_check(c);
    if (!g.genus_ok) {
        a.reason = "genus identity fails";
        return a;
    }
    if (g.squares_slack < 0) {
        a.reason = "sum of squares exceeds d^2 + 1";
        return a;
    }
    if (!degree_bounds_check(c)) {
        a.reason = "degree bounds m1 + m2 <= d < 3 m1 fail";
        return a;
    }
    SequenceCandidate cur = c;
    while (auto next = quadratic_reduction_filter(cur, policy)) {
        a.reductions.push_back(*next);
        if (!degree_bounds_check(*next)) {
            a.reason = "quadratic transformation gives " + std::to_string(next->degree) + " " + next->to_string() +
                       ", which violates the degree bounds";
            return a;
        }
        cur = *next;
    }
    a.admissible = true;
    return a;
}

std::vector<SequenceCandidate> enumerate_admissible(int d, FilterPolicy policy) {
    if (d < 3) throw Error(ErrorKind::InvalidArgument, "degree must be at least 3", {{"degree", d}});
    if (d > 40) throw Error(ErrorKind::InvalidArgument, "degree too large for enumeration", {{"degree", d}});
    long target = static_cast<long>(d) * d - 3L * d + 2;
    std::vector<SequenceCandidate> out;
    std::vector<int> cur;
    std::function<void(long, int)> rec = [&](long rest, int maxm) {
        if (rest == 0) {
            SequenceCandidate c{d, cur};
            if (admissibility(c, policy).admissible) out.push_back(c);
            return;
        }
        for (int m = std::min(maxm, d - 1); m >= 2; --m) {
            long g = static_cast<long>(m) * (m - 1);
            if (g > rest) continue;
            cur.push_back(m);
            rec(rest - g, m);
            cur.pop_back();
        }
    };
    rec(target, d - 1);
    std::sort(out.begin(), out.end(),
              [](const SequenceCandidate& a, const SequenceCandidate& b) { return a.entries > b.entries; });
    return out;
}

nlohmann::json enumerate_json(int d, FilterPolicy policy) {
    nlohmann::json seqs = nlohmann::json::array();
    for (const auto& c : enumerate_admissible(d, policy)) seqs.push_back(c.entries);
    return {{"degree", d}, {"sequences", seqs}};
}

bool homaloidal_check(int d, const std::vector<int>& mults) {
    long s = 0;
    for (int v : mults) s += v;
    return s == 3L * d - 3 && sum_sq(mults) == static_cast<long>(d) * d - 1;
}

bool jump_obstruction(const std::vector<int>& seq, std::pair<int, int>* witness) {
    int k = static_cast<int>(seq.size());
    auto m = [&](int i) { return seq[static_cast<size_t>(i - 1)]; };  // 1-based
    auto drop = [&](int r) { return m(r + 1) + m(r + 2) > m(r) && m(r) > m(r + 1); };
    for (int r = 1; r <= k - 2; ++r) {
        if (!drop(r)) continue;
        for (int s = r + 1; s <= k - 2; ++s) {
            if (drop(s) && m(s) + m(s + 1) > m(s - 1)) {
                if (witness) *witness = {r, s};
                return true;
            }
        }
    }
    return false;
}

const char* case_name(UnicuspidalCase c) {
    switch (c) {
        case UnicuspidalCase::Case_i: return "Case_i";
        case UnicuspidalCase::Case_ii: return "Case_ii";
        case UnicuspidalCase::Case_iii: return "Case_iii";
        case UnicuspidalCase::NoEmbedding: return "NoEmbedding";
    }
    return "?";
}

UnicuspidalCase unicuspidal_embedding_classifier(int d, const std::vector<int>& seq) {
    if (seq.empty()) throw Error(ErrorKind::InvalidArgument, "empty multiplicity sequence");
    long self = static_cast<long>(d) * d - sum_sq(seq);
    int mk = seq.back();
    bool has_prev = seq.size() >= 2;
    int mk1 = has_prev ? seq[seq.size() - 2] : 0;
    if (self == -1 && has_prev && mk1 - mk == 1) return UnicuspidalCase::Case_i;
    if (self - mk == -2 && mk == 2 && has_prev && mk1 != 3) return UnicuspidalCase::Case_ii;
    if (self - mk >= -1) return UnicuspidalCase::Case_iii;
    return UnicuspidalCase::NoEmbedding;
}

const char* tag_name(VerdictTag t) {
    switch (t) {
        case VerdictTag::ExtendsAlways: return "ExtendsAlways";
        case VerdictTag::NoNonExtendableEmbedding: return "NoNonExtendableEmbedding";
        case VerdictTag::EmbeddingExistsUnicuspidal: return "EmbeddingExistsUnicuspidal";
        case VerdictTag::RequiresUnicuspidal: return "RequiresUnicuspidal";
        case VerdictTag::SpecialPunctured: return "SpecialPunctured";
        case VerdictTag::Unknown: return "Unknown";
    }
    return "?";
}

nlohmann::json ClassifierVerdict::to_json() const {
    return {{"existence_unknown", existence_unknown},
            {"note", note},
            {"rule", rule},
            {"tag", tag_name(tag)},
            {"witness", witness}};
}

namespace {

ClassifierVerdict unicuspidal_verdict(int d, const std::vector<int>& seq) {
    ClassifierVerdict v;
    UnicuspidalCase c = unicuspidal_embedding_classifier(d, seq);
    long self = static_cast<long>(d) * d - sum_sq(seq);
    v.witness = {{"case", case_name(c)},
                 {"d2_minus_sum_squares", self},
                 {"d2_minus_sum_squares_minus_mk", self - seq.back()}};
    v.rule = "unicuspidal contractibility: cases (i) d^2 - sum m^2 = -1, m_{k-1} - m_k = 1; (ii) d^2 - sum m^2 - m_k = "
             "-2, m_k = 2, m_{k-1} != 3; (iii) d^2 - sum m^2 - m_k >= -1";
    if (c == UnicuspidalCase::NoEmbedding) {
        v.tag = VerdictTag::NoNonExtendableEmbedding;
        v.note = std::to_string(d) + "^2 - sum m^2 - m_k = " + std::to_string(self - seq.back()) +
                 " and none of the three cases holds";
    } else {
        v.tag = VerdictTag::EmbeddingExistsUnicuspidal;
        v.note = "non-extendable embeddings are possible; curves with isomorphic complements are projectively "
                 "equivalent";
    }
    return v;
}

/// Outcome of the non-unicuspidal rules; `branches` is 0 when unknown.
ClassifierVerdict non_unicuspidal(ClassifierVerdict v, int branches) {
    if (branches != 0) return v;
    if (v.tag == VerdictTag::ExtendsAlways) {
        v.tag = VerdictTag::RequiresUnicuspidal;
        v.note = "a non-extendable embedding forces C to be unicuspidal";
    } else {
        v.note += (v.note.empty() ? "" : "; ") + std::string("assuming C is not unicuspidal");
    }
    return v;
}

}  // namespace

ClassifierVerdict constant_sequence_theorem(int d, int m, int k, int branches) {
    std::vector<int> seq(static_cast<size_t>(k), m);
    if (branches == 1) return unicuspidal_verdict(d, seq);
    ClassifierVerdict v;
    v.rule = "constant sequences: a non-unicuspidal curve with (m_(k)) and a non-extendable embedding has "
             "(d, m, k) in {(8,3,7), (16,6,7)}";
    v.witness = {{"d", d}, {"k", k}, {"m", m}};
    if ((d == 8 && m == 3 && k == 7) || (d == 16 && m == 6 && k == 7)) {
        v.tag = VerdictTag::SpecialPunctured;
        v.note = "C minus Sing(C) is isomorphic to A^1 \\ {0}";
        v.existence_unknown = d == 16;
    } else {
        v.tag = VerdictTag::ExtendsAlways;
    }
    return non_unicuspidal(v, branches);
}

ClassifierVerdict classify(int d, const std::vector<int>& seq, int branches) {
    if (branches < 0) throw Error(ErrorKind::InvalidArgument, "branches must be >= 0");
    SequenceCandidate cand{d, seq};
    Admissibility adm = admissibility(cand);
    if (!adm.admissible)
        throw Error(ErrorKind::Inadmissible, "(" + std::to_string(d) + ", " + cand.to_string() + ") is not admissible: " +
                                                 adm.reason,
                    {{"degree", d}, {"reason", adm.reason}, {"sequence", seq}});

    std::pair<int, int> rs;
    if (jump_obstruction(seq, &rs)) {
        ClassifierVerdict v;
        v.tag = VerdictTag::ExtendsAlways;
        v.rule = "jump obstruction: m_{r+1} + m_{r+2} > m_r > m_{r+1} at r and s, and m_s + m_{s+1} > m_{s-1}";
        v.witness = {{"r", rs.first}, {"s", rs.second}};
        return v;
    }
    if (d == 7 && seq == std::vector<int>{5, 2, 2, 2, 2, 2}) {
        ClassifierVerdict v;
        v.tag = VerdictTag::ExtendsAlways;
        v.rule = "degree 7 with (5,2_(5)): the proximity of p_3 to p_1 forces every embedding to extend";
        return v;
    }
    if (d == 3) {
        if (branches == 1) return unicuspidal_verdict(d, seq);
        ClassifierVerdict v;
        v.tag = VerdictTag::SpecialPunctured;
        v.rule = "cubic curves: the nodal cubic complement has non-extendable automorphisms";
        v.note = "nodal cubic, C minus Sing(C) is isomorphic to A^1 \\ {0}";
        return non_unicuspidal(v, branches);
    }
    if (branches == 1) {
        for (const auto& [dd, s] : not_unicuspidal_list()) {
            if (dd == d && s == seq) {
                ClassifierVerdict v;
                v.tag = VerdictTag::NoNonExtendableEmbedding;
                v.rule = "not unicuspidal: C_k meets two disjoint exceptional curves";
                v.note = "no unicuspidal curve has this multiplicity sequence";
                return v;
            }
        }
        return unicuspidal_verdict(d, seq);
    }
    if (is_constant(seq)) return constant_sequence_theorem(d, seq[0], static_cast<int>(seq.size()), branches);

    int m = 0, k = 0, l = 0;
    if (one_step_shape(seq, &m, &k, &l)) {
        ClassifierVerdict v;
        v.rule = "one-step sequences (m_(k),(m-1)_(l)): a non-unicuspidal curve with a non-extendable embedding "
                 "is (6,(3,2_(7))) or (13,(5_(6),4))";
        v.witness = {{"k", k}, {"l", l}, {"m", m}};
        long dd = d;
        long delta_bi = dd * dd - static_cast<long>(k) * m * m - static_cast<long>(m - 1) * (m - 1) - (m - 2);
        if (d == 6 && seq == std::vector<int>{3, 2, 2, 2, 2, 2, 2, 2}) {
            v.tag = VerdictTag::SpecialPunctured;
            v.rule += "; the sextic case is settled by the three-conic normal form";
            v.note = "non-extendable embeddings may exist; curves with isomorphic complements are projectively "
                     "equivalent";
        } else if (d == 13 && seq == std::vector<int>{5, 5, 5, 5, 5, 5, 4}) {
            v.tag = VerdictTag::SpecialPunctured;
            v.note = "C minus Sing(C) is isomorphic to A^1 \\ {0}";
            v.existence_unknown = true;
        } else if (l == 1 && k >= 2 && delta_bi == -1) {
            v.tag = VerdictTag::Unknown;
            v.note = "the l = 1 subcase through E_k and E_{k+1} with self-intersection -1 has an integer solution here";
            v.witness["delta"] = delta_bi;
        } else {
            v.tag = VerdictTag::ExtendsAlways;
        }
        return non_unicuspidal(v, branches);
    }
    int lev = 0;
    if (all_even_shape(seq, &lev)) {
        ClassifierVerdict v;
        v.tag = VerdictTag::ExtendsAlways;
        v.rule = "all-even sequences ending in 2s with m_j < m_{j+1} + ... + m_k: non-extendable embeddings need a "
                 "unicuspidal curve";
        v.witness = {{"l", lev}};
        return non_unicuspidal(v, branches);
    }
    ClassifierVerdict v;
    v.tag = VerdictTag::Unknown;
    v.rule = "no rule applies";
    return v;
}

// ---------------------------------------------------------------------------
// Diophantine registry

namespace {

using ll = long long;

enum class Family { Constant, OneStepA, OneStepB };

struct CaseSpec {
    std::string id;
    Family family;
    std::string system;
    std::function<bool(ll, ll, ll, ll)> primary;  // (d, m, k, l); genus is enforced separately
    std::function<bool(ll, ll, ll, ll)> reduced;
    std::vector<std::string> projection;
    std::function<std::vector<ll>(ll, ll, ll, ll)> project;
};

ll delta_const(ll d, ll m, ll k) { return d * d - k * m * m - (m - 1); }
ll delta_a(ll d, ll m, ll l) { return d * d - m * m - l * (m - 1) * (m - 1) - (m - 1); }
ll delta_bi(ll d, ll m, ll k) { return d * d - k * m * m - (m - 1) * (m - 1) - (m - 2); }
ll delta_bii(ll d, ll m, ll k) { return d * d - k * m * m - (m - 1) * (m - 1) - (m - 1); }

const std::vector<CaseSpec>& registry() {
    auto dmk = [](ll d, ll m, ll k, ll) { return std::vector<ll>{d, m, k}; };
    auto dml = [](ll d, ll m, ll, ll l) { return std::vector<ll>{d, m, l}; };
    auto dm = [](ll d, ll m, ll, ll) { return std::vector<ll>{d, m}; };
    static const std::vector<CaseSpec> cases = {
        {"constant-delta=-1", Family::Constant,
         "d^2 - 3d + 2 = k m (m-1), d^2 - k m^2 - (m-1) = -1",
         [](ll d, ll m, ll k, ll) { return delta_const(d, m, k) == -1; },
         [](ll d, ll m, ll k, ll) { return m * k == 3 * d - m && d * d - 3 * d * m + m * m - m + 2 == 0; },
         {"d", "m", "k"}, dmk},
        {"constant-delta=0", Family::Constant,
         "d^2 - 3d + 2 = k m (m-1), k = m - 1, d^2 - k m^2 - (m-1) = 0",
         [](ll d, ll m, ll k, ll) { return k == m - 1 && delta_const(d, m, k) == 0; },
         [](ll d, ll m, ll k, ll) { return k == m - 1 && 3 * d == m * m + 1 && m * m - 9 * m + 10 == 0; },
         {"d", "m", "k"}, dmk},
        {"one-step-A1", Family::OneStepA,
         "k = 1, d^2 - 3d + 2 = m(m-1) + l(m-1)(m-2), d^2 - m^2 - l(m-1)^2 = -1",
         [](ll d, ll m, ll, ll l) { return d * d - m * m - l * (m - 1) * (m - 1) == -1; },
         [](ll d, ll m, ll, ll l) { return d == 3 * (m - 1) && (9 - l) * (m - 1) == m + 1; },
         {"m-1", "l"}, [](ll, ll m, ll, ll l) { return std::vector<ll>{m - 1, l}; }},
        {"one-step-A2", Family::OneStepA,
         "k = 1, genus, d^2 - m^2 - l(m-1)^2 - (m-1) = -1",
         [](ll d, ll m, ll, ll l) { return delta_a(d, m, l) == -1; },
         [](ll d, ll m, ll, ll l) { return l * (m - 1) == 3 * d - 2 * m && d * d == (m - 1) * (3 * d - m + 2); },
         {"d", "m", "l"}, dml},
        {"one-step-A3", Family::OneStepA,
         "k = 1, l = 1, genus, d^2 - m^2 - (m-1)^2 - (m-1) = 0",
         [](ll d, ll m, ll, ll l) { return l == 1 && delta_a(d, m, l) == 0; },
         [](ll d, ll m, ll, ll l) { return l == 1 && d == m && d * d - m * m - (m - 1) * (m - 1) - m + 1 == 0; },
         {"d", "m", "l"}, dml},
        {"one-step-A4", Family::OneStepA,
         "k = 1, m = 3, genus, d^2 - 9 - 4l - 2 = 1",
         [](ll d, ll m, ll, ll l) { return m == 3 && delta_a(d, m, l) == 1; },
         [](ll d, ll m, ll, ll l) { return m == 3 && 2 * l == 3 * d - 8 && d * d - 6 * d + 4 == 0; },
         {"d", "m", "l"}, dml},
        {"one-step-B-preamble", Family::OneStepB,
         "l = 1, k >= 2, genus, d^2 - k m^2 - (m-1)^2 = -1",
         [](ll d, ll m, ll k, ll) { return d * d - k * m * m - (m - 1) * (m - 1) == -1; },
         [](ll d, ll m, ll k, ll) { return k * m == 3 * d - m && d * d == m * (3 * d - 2); },
         {"d", "m"}, dm},
        {"one-step-Bi-delta=-1", Family::OneStepB,
         "l = 1, k >= 2, genus, d^2 - k m^2 - (m-1)^2 - (m-2) = -1",
         [](ll d, ll m, ll k, ll) { return delta_bi(d, m, k) == -1; },
         [](ll d, ll m, ll k, ll) { return k * m == 3 * d - 2 * m + 2 && d * d - 3 * d * m + m * m - m + 2 == 0; },
         {"d", "m"}, dm},
        {"one-step-Bi-delta=0", Family::OneStepB,
         "l = 1, k >= 2, genus, d^2 - k m^2 - (m-1)^2 - (m-2) = 0",
         [](ll d, ll m, ll k, ll) { return delta_bi(d, m, k) == 0; },
         [](ll d, ll m, ll k, ll) { return k * m == 3 * d - 2 * m + 1 && d * d - 3 * d * m + m * m + 1 == 0; },
         {"d", "m"}, dm},
        {"one-step-Bi-delta=1", Family::OneStepB,
         "l = 1, k >= 2, genus, d^2 - k m^2 - (m-1)^2 - (m-2) = 1",
         [](ll d, ll m, ll k, ll) { return delta_bi(d, m, k) == 1; },
         [](ll d, ll m, ll k, ll) { return k * m == 3 * d - 2 * m && d * d == m * (3 * d - m - 1); },
         {"d", "m"}, dm},
        {"one-step-Bii-delta=0", Family::OneStepB,
         "l = 1, k = m - 1, genus, d^2 - k m^2 - (m-1)^2 - (m-1) = 0",
         [](ll d, ll m, ll k, ll) { return k == m - 1 && delta_bii(d, m, k) == 0; },
         [](ll d, ll m, ll k, ll) { return k == m - 1 && d * d == m * (m * m - 1); },
         {"d", "m"}, dm},
    };
    return cases;
}

std::string normalize_id(std::string id) {
    auto replace = [&](const std::string& from, const std::string& to) {
        for (size_t p; (p = id.find(from)) != std::string::npos;) id.replace(p, from.size(), to);
    };
    replace("δ", "delta");
    replace("−", "-");
    replace("B.i.", "Bi-");
    replace("B.ii.", "Bii-");
    replace("A.", "A");
    return id;
}

const CaseSpec& find_case(const std::string& raw) {
    std::string id = normalize_id(raw);
    for (const auto& c : registry())
        if (c.id == id) return c;
    throw Error(ErrorKind::UnknownCase, "unknown Diophantine case \"" + raw + "\"", {{"known", diophantine_cases()}});
}

/// Root d >= 1 of d^2 - 3d + 2 = G, if integral.
std::optional<ll> degree_from_genus(ll G) {
    ll disc = 1 + 4 * G;
    ll r = static_cast<ll>(std::sqrt(static_cast<long double>(disc)));
    while (r * r > disc) --r;
    while ((r + 1) * (r + 1) <= disc) ++r;
    if (r * r != disc || (3 + r) % 2 != 0) return std::nullopt;
    return (3 + r) / 2;
}

void check_bound(ll bound) {
    if (bound < 1 || bound > 100000)
        throw Error(ErrorKind::InvalidArgument, "bound must lie in [1, 100000]", {{"bound", bound}});
}

}  // namespace

std::vector<std::string> diophantine_cases() {
    std::vector<std::string> ids;
    for (const auto& c : registry()) ids.push_back(c.id);
    return ids;
}

nlohmann::json DiophantineResult::to_json() const {
    return {{"bound", bound},
            {"id", id},
            {"projected", projected},
            {"projection", projection},
            {"solutions", solutions},
            {"system", system},
            {"variables", variables}};
}

DiophantineResult diophantine_case(const std::string& raw, ll bound) {
    check_bound(bound);
    const CaseSpec& c = find_case(raw);
    DiophantineResult r;
    r.id = c.id;
    r.system = c.system;
    r.bound = bound;
    r.projection = c.projection;
    r.variables = c.family == Family::OneStepA ? std::vector<std::string>{"d", "m", "l"}
                                               : std::vector<std::string>{"d", "m", "k"};
    auto consider = [&](ll m, ll k, ll l, ll genus) {
        auto d = degree_from_genus(genus);
        if (!d || *d < 1 || *d > bound) return;
        if (!c.primary(*d, m, k, l)) return;
        r.solutions.insert(c.family == Family::OneStepA ? std::vector<ll>{*d, m, l} : std::vector<ll>{*d, m, k});
        r.projected.insert(c.project(*d, m, k, l));
    };
    switch (c.family) {
        case Family::Constant:
            for (ll m = 2; m <= bound; ++m)
                for (ll k = 1; k <= bound; ++k) consider(m, k, 0, k * m * (m - 1));
            break;
        case Family::OneStepA:
            for (ll m = 3; m <= bound; ++m)
                for (ll l = 1; l <= bound; ++l) consider(m, 1, l, m * (m - 1) + l * (m - 1) * (m - 2));
            break;
        case Family::OneStepB:
            for (ll m = 3; m <= bound; ++m)
                for (ll k = 2; k <= bound; ++k) consider(m, k, 1, k * m * (m - 1) + (m - 1) * (m - 2));
            break;
    }
    return r;
}

std::set<std::vector<ll>> diophantine_reduced(const std::string& raw, ll bound) {
    check_bound(bound);
    const CaseSpec& c = find_case(raw);
    std::set<std::vector<ll>> out;
    for (ll d = 1; d <= bound; ++d) {
        for (ll m = c.family == Family::Constant ? 2 : 3; m <= bound; ++m) {
            switch (c.family) {
                case Family::Constant:
                    for (ll k = 1; k <= bound; ++k)
                        if (c.reduced(d, m, k, 0)) out.insert({d, m, k});
                    break;
                case Family::OneStepA:
                    for (ll l = 1; l <= bound; ++l)
                        if (c.reduced(d, m, 1, l)) out.insert({d, m, l});
                    break;
                case Family::OneStepB:
                    for (ll k = 2; k <= bound; ++k)
                        if (c.reduced(d, m, k, 1)) out.insert({d, m, k});
                    break;
            }
        }
    }
    return out;
}

}  // namespace curvecomp
