#pragma once

#include <json.hpp>

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace curvecomp {

/// A degree together with a non-increasing list of multiplicities >= 2.
struct SequenceCandidate {
    int degree = 0;
    std::vector<int> entries;

    bool operator==(const SequenceCandidate& o) const = default;
    /// "(4,3_(4),2_(3))" with runs of equal entries collapsed.
    std::string to_string() const;
    nlohmann::json to_json() const;  // {"degree": d, "sequence": [...]}
};

/// Parses "3,3,3" or "3_7,2" (run notation) into a non-increasing list; ParseError otherwise.
std::vector<int> parse_sequence(const std::string& text);

struct GenusSquares {
    bool genus_ok = false;
    long squares_slack = 0;  // d² + 1 − Σ m²
};

GenusSquares genus_and_squares_check(const SequenceCandidate& c);
/// m₁ + m₂ <= d < 3m₁ with m₂ = 1 for a single entry.
bool degree_bounds_check(const SequenceCandidate& c);

enum class FilterPolicy {
    Published,  // the transformation is applied when the first three entries are equal
    Strict,     // applied whenever the three base points admit a quadratic transformation
};

/// The quadratic transformation centred at the first three points, when it applies.
std::optional<SequenceCandidate> quadratic_reduction_filter(const SequenceCandidate& c,
                                                             FilterPolicy policy = FilterPolicy::Strict);

struct Admissibility {
    bool admissible = false;
    std::string reason;                      // first failing test
    std::vector<SequenceCandidate> reductions;  // chain of quadratic transforms that was followed
};

Admissibility admissibility(const SequenceCandidate& c, FilterPolicy policy = FilterPolicy::Published);

/// All admissible sequences of degree d, descending lexicographic order.
std::vector<SequenceCandidate> enumerate_admissible(int d, FilterPolicy policy = FilterPolicy::Published);
/// {"degree": d, "sequences": [[...], ...]} in enumeration order.
nlohmann::json enumerate_json(int d, FilterPolicy policy = FilterPolicy::Published);

/// Σ m = 3d − 3 and Σ m² = d² − 1.
bool homaloidal_check(int d, const std::vector<int>& mults);

/// Two indices r < s <= k − 2 with m_{r+1} + m_{r+2} > m_r > m_{r+1}, the same at s, and
/// m_s + m_{s+1} > m_{s−1}. On success the 1-based indices are stored in `witness`.
bool jump_obstruction(const std::vector<int>& seq, std::pair<int, int>* witness = nullptr);

enum class UnicuspidalCase { Case_i, Case_ii, Case_iii, NoEmbedding };
const char* case_name(UnicuspidalCase c);

UnicuspidalCase unicuspidal_embedding_classifier(int d, const std::vector<int>& seq);

enum class VerdictTag {
    ExtendsAlways,
    NoNonExtendableEmbedding,
    EmbeddingExistsUnicuspidal,
    RequiresUnicuspidal,
    SpecialPunctured,
    Unknown,
};
const char* tag_name(VerdictTag t);

struct ClassifierVerdict {
    VerdictTag tag = VerdictTag::Unknown;
    std::string rule;
    std::string note;
    bool existence_unknown = false;
    nlohmann::json witness;  // arithmetic trace of the rule
    nlohmann::json to_json() const;
};

/// branches: number of branches at the singular point; 0 when not known.
ClassifierVerdict constant_sequence_theorem(int d, int m, int k, int branches);

/// Applies the rules in a fixed order. Throws Inadmissible when (d, seq) is not admissible.
ClassifierVerdict classify(int d, const std::vector<int>& seq, int branches);

struct DiophantineResult {
    std::string id;
    std::string system;                          // the equations solved
    std::vector<std::string> variables;          // e.g. {"d","m","k"}
    std::set<std::vector<long long>> solutions;  // in `variables` order
    std::vector<std::string> projection;         // reported columns
    std::set<std::vector<long long>> projected;
    long long bound = 0;
    nlohmann::json to_json() const;
};

std::vector<std::string> diophantine_cases();
/// Solves the registered system with 1 <= d, m, k, l <= bound. Throws UnknownCase.
DiophantineResult diophantine_case(const std::string& id, long long bound = 200);
/// Solution set of the case's reduced single-equation form over the same box, brute force in d.
std::set<std::vector<long long>> diophantine_reduced(const std::string& id, long long bound = 200);

}  // namespace curvecomp
