#include "dclcs/reduction.hpp"

#include <algorithm>
#include <set>

#include "dclcs/oracle.hpp"

namespace dclcs {

ScsInstance ScsInstance::make(std::vector<Sequence> strings, std::vector<Symbol> alphabet) {
    std::set<Symbol> symbols(alphabet.begin(), alphabet.end());
    for (const auto& s : strings) {
        for (Symbol c : s) {
            if (c == kDelimiter) throw InputError("scs strings must not contain the delimiter '#'");
            if (!is_valid_symbol(c)) throw InputError("scs strings must use printable symbols");
            symbols.insert(c);
        }
    }
    if (symbols.count(kDelimiter)) throw InputError("alphabet must not contain the delimiter '#'");
    std::sort(strings.begin(), strings.end());
    strings.erase(std::unique(strings.begin(), strings.end()), strings.end());
    return {std::move(strings), {symbols.begin(), symbols.end()}};
}

Sequence interleave(const Sequence& r) {
    Sequence out;
    out.reserve(2 * r.size());
    for (Symbol c : r) {
        if (c == kDelimiter) throw InputError("interleave input must not contain the delimiter");
        out.push_back(c);
        out.push_back(kDelimiter);
    }
    return out;
}

ReductionOutput build_reduction(const ScsInstance& scs, int l) {
    if (l < 1) throw InputError("reduction requires l >= 1");
    ReductionOutput out;
    out.l = l;
    out.w.assign(scs.alphabet.begin(), scs.alphabet.end());

    Sequence rev_w(out.w.rbegin(), out.w.rend());
    for (int i = 0; i < l; ++i) {
        out.s1 += out.w + kDelimiter;
        out.s2 += rev_w + kDelimiter;
    }
    out.cs.insert(Sequence(static_cast<std::size_t>(l), kDelimiter));
    for (const auto& r : scs.strings) out.cs.insert(interleave(r));
    return out;
}

Instance reduction_instance(const ReductionOutput& out) {
    Instance inst;
    inst.s1 = out.s1;
    inst.s2 = out.s2;
    inst.cs = out.cs;
    inst.co = OccurrenceConstraint::uniform(static_cast<long>(out.s1.size() + out.s2.size()));
    return inst;
}

bool verify_equivalence(const ScsInstance& scs, int l) {
    const Sequence scs_solution = brute_force_scs(scs.strings);
    const bool scs_fits = static_cast<int>(scs_solution.size()) <= l;

    const Instance inst = reduction_instance(build_reduction(scs, l));
    const auto best = brute_force_dclcs(inst);
    const bool has_2l_solution = best.has_value() && best->length() == 2 * l;

    return scs_fits == has_2l_solution;
}

}  // namespace dclcs
