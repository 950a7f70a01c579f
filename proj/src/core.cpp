#include "dclcs/core.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <set>
#include <sstream>

namespace dclcs {

bool is_valid_symbol(Symbol c) {
    unsigned char u = static_cast<unsigned char>(c);
    return u > 0x20 && u < 0x7f;
}

StringConstraint::StringConstraint(std::vector<Sequence> members) {
    for (auto& m : members) insert(m);
}

bool StringConstraint::insert(const Sequence& s) {
    auto it = std::lower_bound(strings.begin(), strings.end(), s);
    if (it != strings.end() && *it == s) return false;
    strings.insert(it, s);
    return true;
}

Mode Instance::mode() const {
    const long clcs_bound = static_cast<long>(s1.size() + s2.size());
    bool all_unbounded = true;
    bool all_one = true;
    for (Symbol c : instance_alphabet(*this)) {
        if (co.at(c) != clcs_bound) all_unbounded = false;
        if (co.at(c) != 1) all_one = false;
    }
    if (all_unbounded) return cs.empty() ? Mode::LCS : Mode::CLCS;
    if (cs.empty() && all_one) return Mode::RFLCS;
    return Mode::DCLCS;
}

std::vector<Symbol> instance_alphabet(const Instance& inst) {
    std::set<Symbol> seen(inst.s1.begin(), inst.s1.end());
    seen.insert(inst.s2.begin(), inst.s2.end());
    for (const auto& m : inst.cs.strings) seen.insert(m.begin(), m.end());
    for (const auto& [c, _] : inst.co.bounds) seen.insert(c);
    return {seen.begin(), seen.end()};
}

bool check_certificates(const Solution& sol, const Sequence& s1, const Sequence& s2) {
    auto check = [](const std::vector<int>& pos, const Sequence& seq, const Sequence& host) {
        if (pos.size() != seq.size()) return false;
        int prev = -1;
        for (std::size_t t = 0; t < pos.size(); ++t) {
            if (pos[t] <= prev || pos[t] >= static_cast<int>(host.size())) return false;
            if (host[pos[t]] != seq[t]) return false;
            prev = pos[t];
        }
        return true;
    };
    return check(sol.pos1, sol.seq, s1) && check(sol.pos2, sol.seq, s2);
}

bool is_subsequence(const Sequence& a, const Sequence& b) {
    std::size_t i = 0;
    for (std::size_t j = 0; i < a.size() && j < b.size(); ++j) {
        if (a[i] == b[j]) ++i;
    }
    return i == a.size();
}

long occ(Symbol sigma, const Sequence& s) {
    return static_cast<long>(std::count(s.begin(), s.end(), sigma));
}

VerifyReport verify_solution(const Instance& inst, const Sequence& cand) {
    VerifyReport r;
    r.common_subsequence = is_subsequence(cand, inst.s1) && is_subsequence(cand, inst.s2);
    r.supersequence = true;
    for (const auto& m : inst.cs.strings) {
        if (!is_subsequence(m, cand)) {
            r.supersequence = false;
            break;
        }
    }
    r.within_occurrence = true;
    std::set<Symbol> seen(cand.begin(), cand.end());
    for (Symbol c : seen) {
        if (occ(c, cand) > inst.co.at(c)) {
            r.within_occurrence = false;
            break;
        }
    }
    return r;
}

namespace {

void require_symbols(const Sequence& s, int line) {
    for (Symbol c : s) {
        if (!is_valid_symbol(c)) throw ParseError(line, "invalid symbol in string");
    }
}

}  // namespace

Instance parse_instance(std::istream& in) {
    Instance inst;
    bool have_s1 = false;
    bool have_s2 = false;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (!raw.empty() && raw.back() == '\r') raw.pop_back();
        std::size_t first = raw.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (raw[first] == '%') continue;

        std::istringstream ls(raw);
        std::string directive;
        ls >> directive;
        if (directive == "S1" || directive == "S2") {
            std::string value;
            ls >> value;  // absent token means the empty sequence
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens after " + directive);
            require_symbols(value, line_no);
            bool& have = directive == "S1" ? have_s1 : have_s2;
            if (have) throw ParseError(line_no, "duplicate " + directive + " line");
            have = true;
            (directive == "S1" ? inst.s1 : inst.s2) = value;
        } else if (directive == "CS") {
            std::string value;
            if (!(ls >> value)) throw ParseError(line_no, "CS requires a string");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens after CS");
            require_symbols(value, line_no);
            if (!inst.cs.insert(value)) throw ParseError(line_no, "duplicate constraint string");
        } else if (directive == "CO") {
            std::string sym, bound;
            if (!(ls >> sym >> bound)) throw ParseError(line_no, "CO requires a symbol and a bound");
            std::string extra;
            if (ls >> extra) throw ParseError(line_no, "trailing tokens after CO");
            if (sym.size() != 1 || !is_valid_symbol(sym[0]))
                throw ParseError(line_no, "CO symbol must be a single printable character");
            if (bound.empty() || bound.find_first_not_of("0123456789") != std::string::npos)
                throw ParseError(line_no, "CO bound must be a non-negative integer");
            if (inst.co.bounds.count(sym[0]))
                throw ParseError(line_no, "duplicate CO entry for symbol");
            inst.co.bounds[sym[0]] = std::stol(bound);
        } else {
            throw ParseError(line_no, "unknown directive '" + directive + "'");
        }
    }
    if (!have_s1) throw ParseError(line_no, "missing S1 line");
    if (!have_s2) throw ParseError(line_no, "missing S2 line");
    inst.co.fallback = static_cast<long>(inst.s1.size() + inst.s2.size());
    return inst;
}

Instance parse_instance(const std::string& text) {
    std::istringstream in(text);
    return parse_instance(in);
}

std::string serialize_instance(const Instance& inst) {
    std::ostringstream out;
    out << "S1 " << inst.s1 << "\n";
    out << "S2 " << inst.s2 << "\n";
    for (const auto& m : inst.cs.strings) out << "CS " << m << "\n";
    for (const auto& [c, b] : inst.co.bounds) out << "CO " << c << ' ' << b << "\n";
    return out.str();
}

std::string format_solution_output(const std::optional<Solution>& sol) {
    if (!sol) return "INFEASIBLE\n";
    return "LENGTH " + std::to_string(sol->length()) + "\nSOLUTION " + sol->seq + "\n";
}

}  // namespace dclcs
