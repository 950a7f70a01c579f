#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dclcs {

// Symbols are printable non-whitespace ASCII characters.
using Symbol = char;
using Sequence = std::string;

bool is_valid_symbol(Symbol c);

struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_) {}
};

struct SizingError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Set of constraint strings C_s. Members are kept sorted and unique.
struct StringConstraint {
    std::vector<Sequence> strings;

    StringConstraint() = default;
    explicit StringConstraint(std::vector<Sequence> members);

    bool empty() const { return strings.empty(); }
    std::size_t size() const { return strings.size(); }

    // Inserts a member; returns false if already present.
    bool insert(const Sequence& s);

    bool operator==(const StringConstraint&) const = default;
};

/// Per-symbol occurrence bound C_o. Symbols without an explicit entry get
/// `fallback`, which for parsed instances is |s1|+|s2|.
struct OccurrenceConstraint {
    std::map<Symbol, long> bounds;
    long fallback = 0;

    long at(Symbol c) const {
        auto it = bounds.find(c);
        return it == bounds.end() ? fallback : it->second;
    }

    static OccurrenceConstraint uniform(long v) {
        OccurrenceConstraint co;
        co.fallback = v;
        return co;
    }

    bool operator==(const OccurrenceConstraint&) const = default;
};

enum class Mode { LCS, CLCS, RFLCS, DCLCS };

struct Instance {
    Sequence s1;
    Sequence s2;
    StringConstraint cs;
    OccurrenceConstraint co;

    Mode mode() const;

    bool operator==(const Instance&) const = default;
};

/// Sorted distinct symbols occurring in s1, s2, C_s members, or explicit
/// C_o entries.
std::vector<Symbol> instance_alphabet(const Instance& inst);

/// A solution string plus its embeddings into s1 and s2 (0-based positions,
/// strictly increasing).
struct Solution {
    Sequence seq;
    std::vector<int> pos1;
    std::vector<int> pos2;

    int length() const { return static_cast<int>(seq.size()); }

    bool operator==(const Solution&) const = default;
};

/// True iff sol.pos1/pos2 are strictly increasing and select sol.seq from
/// s1/s2. Used by tests; solvers are expected to produce valid certificates.
bool check_certificates(const Solution& sol, const Sequence& s1, const Sequence& s2);

struct VerifyReport {
    bool common_subsequence = false;
    bool supersequence = false;
    bool within_occurrence = false;

    bool pass() const { return common_subsequence && supersequence && within_occurrence; }
};

/// Greedy left-to-right test: can `a` be obtained from `b` by deletions?
bool is_subsequence(const Sequence& a, const Sequence& b);

/// Number of positions of s holding sigma.
long occ(Symbol sigma, const Sequence& s);

/// Checks the three defining clauses of the DC-LCS problem for a candidate.
VerifyReport verify_solution(const Instance& inst, const Sequence& cand);

Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

std::string serialize_instance(const Instance& inst);

/// "LENGTH n\nSOLUTION s\n" on success, "INFEASIBLE\n" otherwise.
std::string format_solution_output(const std::optional<Solution>& sol);

}  // namespace dclcs
