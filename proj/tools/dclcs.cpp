#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "dclcs/constraint_enum.hpp"
#include "dclcs/core.hpp"
#include "dclcs/fpt_solver.hpp"
#include "dclcs/oracle.hpp"
#include "dclcs/reduction.hpp"

namespace {

// Exit codes: 0 solution, 1 infeasible, 2 refused/parse error, 3 internal
// verification failure.
constexpr int kExitSolution = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitRefused = 2;
constexpr int kExitInternal = 3;

struct SolveFlags {
    std::string instance_path;
    std::string family = "random";
    double delta = 1e-3;
    std::uint64_t seed = 0;
    int max_k = 16;
    std::uint64_t memory_budget = std::uint64_t{2} << 30;
    bool parallel = true;
    std::string report = "plain";
};

void add_solver_flags(CLI::App* cmd, SolveFlags& flags) {
    cmd->add_option("--instance", flags.instance_path, "instance file")->required();
    cmd->add_option("--family", flags.family, "hash family: exhaustive|random")
        ->check(CLI::IsMember({"exhaustive", "random"}))
        ->capture_default_str();
    cmd->add_option("--delta", flags.delta, "randomized failure probability")
        ->capture_default_str();
    cmd->add_option("--seed", flags.seed, "randomized family seed")->capture_default_str();
    cmd->add_option("--max-k", flags.max_k, "cap on the solution-length parameter k")
        ->capture_default_str();
    cmd->add_option("--memory-budget", flags.memory_budget, "dp table budget in bytes")
        ->capture_default_str();
    cmd->add_flag("--parallel,!--no-parallel", flags.parallel, "run trials in parallel")
        ->capture_default_str();
    cmd->add_option("--report", flags.report, "report format: plain|json-lines")
        ->check(CLI::IsMember({"plain", "json-lines"}))
        ->capture_default_str();
}

dclcs::SolverConfig make_config(const SolveFlags& flags) {
    dclcs::SolverConfig cfg;
    cfg.family.kind = flags.family == "exhaustive" ? dclcs::FamilyKind::exhaustive
                                                   : dclcs::FamilyKind::randomized;
    cfg.family.delta = flags.delta;
    cfg.family.seed = flags.seed;
    cfg.max_k = flags.max_k;
    cfg.memory_budget = flags.memory_budget;
    cfg.parallel_trials = flags.parallel;
    return cfg;
}

std::optional<dclcs::Instance> load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "error: cannot open instance file '" << path << "'\n";
        return std::nullopt;
    }
    try {
        return dclcs::parse_instance(in);
    } catch (const dclcs::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return std::nullopt;
    }
}

void emit_report(const SolveFlags& flags, const std::string& outcome,
                 const std::optional<dclcs::Solution>& sol, const dclcs::SolveStats& stats,
                 double wall_ms) {
    if (flags.report != "json-lines") return;
    nlohmann::ordered_json report;
    report["outcome"] = outcome;
    if (sol) {
        report["length"] = sol->length();
        report["solution"] = sol->seq;
    }
    report["trials_used"] = stats.trials_used;
    report["k_tested"] = stats.k_tested;
    report["wall_time_ms"] = wall_ms;
    report["seed"] = flags.seed;
    report["delta"] = flags.delta;
    report["family"] = flags.family;
    std::cerr << report.dump() << "\n";
}

int finish_solution(const SolveFlags& flags, const dclcs::Instance& inst,
                    const std::optional<dclcs::Solution>& sol, const dclcs::SolveStats& stats,
                    double wall_ms) {
    if (sol) {
        if (!dclcs::verify_solution(inst, sol->seq).pass()) {
            std::cerr << "internal error: produced solution failed verification\n";
            return kExitInternal;
        }
        std::cout << dclcs::format_solution_output(sol);
        emit_report(flags, "solution", sol, stats, wall_ms);
        return kExitSolution;
    }
    std::cout << dclcs::format_solution_output(std::nullopt);
    emit_report(flags, "infeasible", sol, stats, wall_ms);
    return kExitInfeasible;
}

int cmd_solve(const SolveFlags& flags) {
    const auto inst = load_instance(flags.instance_path);
    if (!inst) return kExitRefused;
    dclcs::SolveStats stats;
    const auto start = std::chrono::steady_clock::now();
    std::optional<dclcs::Solution> sol;
    try {
        sol = dclcs::solve_dclcs(*inst, make_config(flags), &stats);
    } catch (const dclcs::SizingError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        emit_report(flags, "refused", std::nullopt, stats, 0.0);
        return kExitRefused;
    }
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return finish_solution(flags, *inst, sol, stats, wall_ms);
}

int cmd_oracle(const SolveFlags& flags, int cap) {
    const auto inst = load_instance(flags.instance_path);
    if (!inst) return kExitRefused;
    dclcs::SolveStats stats;
    const auto start = std::chrono::steady_clock::now();
    std::optional<dclcs::Solution> sol;
    try {
        sol = dclcs::brute_force_dclcs(*inst, cap);
    } catch (const dclcs::SizingError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    }
    const double wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    return finish_solution(flags, *inst, sol, stats, wall_ms);
}

int cmd_reduce_scs(const std::string& strings_path, int length, const std::string& alphabet,
                   bool verify) {
    std::ifstream in(strings_path);
    if (!in) {
        std::cerr << "error: cannot open strings file '" << strings_path << "'\n";
        return kExitRefused;
    }
    std::vector<dclcs::Sequence> strings;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '%') continue;
        strings.push_back(line);
    }
    try {
        const auto scs = dclcs::ScsInstance::make(
            strings, std::vector<dclcs::Symbol>(alphabet.begin(), alphabet.end()));
        const auto out = dclcs::build_reduction(scs, length);

        std::cout << "% scs-to-clcs reduction\n";
        std::cout << "% l " << out.l << "\n";
        std::cout << "% w " << out.w << "\n";
        std::cout << "% |Cs| " << out.cs.size() << "\n";
        std::cout << "% |Sigma| " << scs.alphabet.size() << "\n";
        for (const auto& r : scs.strings) std::cout << "% R " << r << "\n";
        std::cout << dclcs::serialize_instance(dclcs::reduction_instance(out));
        if (verify) {
            std::cout << "% verify_equivalence "
                      << (dclcs::verify_equivalence(scs, length) ? "true" : "false") << "\n";
        }
        return kExitSolution;
    } catch (const dclcs::InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefused;
    } catch (const dclcs::SizingError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return kExitRefused;
    }
}

int cmd_bench(int n, const std::string& k_range, int repeats, std::uint64_t seed, int trials) {
    int k_lo = 0, k_hi = 0;
    const auto dots = k_range.find("..");
    try {
        if (dots == std::string::npos) {
            k_lo = k_hi = std::stoi(k_range);
        } else {
            k_lo = std::stoi(k_range.substr(0, dots));
            k_hi = std::stoi(k_range.substr(dots + 2));
        }
    } catch (const std::exception&) {
        std::cerr << "error: --k-range must be A..B\n";
        return kExitRefused;
    }
    if (k_lo < 1 || k_hi < k_lo) {
        std::cerr << "error: k range must satisfy 1 <= A <= B\n";
        return kExitRefused;
    }
    if (n < 1 || repeats < 1 || trials < 1) {
        std::cerr << "error: --n, --repeats and --trials must be >= 1\n";
        return kExitRefused;
    }

    std::cout << "k,n,cells_filled,trials,wall_time_ms,found\n";
    for (int k = k_lo; k <= k_hi; ++k) {
        const int alphabet = std::min(k, 26);
        for (int rep = 0; rep < repeats; ++rep) {
            std::mt19937_64 rng(seed ^ (static_cast<std::uint64_t>(k) << 32) ^
                                static_cast<std::uint64_t>(rep));
            dclcs::Sequence s1, s2;
            for (int i = 0; i < n; ++i) s1.push_back('a' + static_cast<int>(rng() % alphabet));
            for (int i = 0; i < n; ++i) s2.push_back('a' + static_cast<int>(rng() % alphabet));

            // Repetition-free style workload: one colored slot per symbol.
            const auto c_eff =
                dclcs::effective_occ(s1, s2, dclcs::OccurrenceConstraint::uniform(1));
            const auto alpha = dclcs::build_colored_alphabet(c_eff);
            dclcs::FamilySpec spec;
            spec.kind = dclcs::FamilyKind::randomized;
            spec.seed = seed + rep;
            const dclcs::HashFamily family(alpha, k, spec);

            bool found = false;
            std::uint64_t cells = 0;
            const auto start = std::chrono::steady_clock::now();
            for (int t = 0; t < trials; ++t) {
                const auto l = dclcs::label_function(
                    family.assignment(static_cast<std::uint64_t>(t)), alpha);
                const auto table = dclcs::dp_fill(s1, s2, {}, l, k);
                cells = table.cell_count();
                found = found || table.get(n, n, 0, (std::uint32_t{1} << k) - 1);
            }
            const double wall_ms =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() -
                                                          start)
                    .count();
            std::cout << k << ',' << n << ',' << cells << ',' << trials << ',' << wall_ms << ','
                      << (found ? 1 : 0) << "\n";
        }
    }
    return kExitSolution;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"doubly-constrained longest common subsequence toolkit"};
    app.require_subcommand(1);

    SolveFlags solve_flags;
    auto* solve = app.add_subcommand("solve", "solve an instance with the color-coding solver");
    add_solver_flags(solve, solve_flags);

    SolveFlags oracle_flags;
    int oracle_cap = 20;
    auto* oracle = app.add_subcommand("oracle", "solve an instance by exhaustive search");
    oracle->add_option("--instance", oracle_flags.instance_path, "instance file")->required();
    oracle->add_option("--cap", oracle_cap, "max length of the shorter input")
        ->capture_default_str();

    std::string strings_path, alphabet;
    int length = 0;
    bool verify = false;
    auto* reduce = app.add_subcommand("reduce-scs", "emit the SCS-to-C-LCS reduction instance");
    reduce->add_option("--strings", strings_path, "file with one SCS string per line")
        ->required();
    reduce->add_option("--length", length, "target SCS length l")->required();
    reduce->add_option("--alphabet", alphabet, "extra alphabet symbols to include in w");
    reduce->add_flag("--verify", verify, "also check the equivalence with the oracle");

    int bench_n = 20, bench_repeats = 3, bench_trials = 4;
    std::string bench_range = "1..8";
    std::uint64_t bench_seed = 0;
    auto* bench = app.add_subcommand("bench", "dp cell-count and wall-time benchmark (CSV)");
    bench->add_option("--n", bench_n, "input length")->capture_default_str();
    bench->add_option("--k-range", bench_range, "k values, A..B")->capture_default_str();
    bench->add_option("--repeats", bench_repeats, "instances per k")->capture_default_str();
    bench->add_option("--seed", bench_seed, "instance generator seed")->capture_default_str();
    bench->add_option("--trials", bench_trials, "dp fills per instance")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitRefused;
    }

    try {
        if (solve->parsed()) return cmd_solve(solve_flags);
        if (oracle->parsed()) return cmd_oracle(oracle_flags, oracle_cap);
        if (reduce->parsed()) return cmd_reduce_scs(strings_path, length, alphabet, verify);
        if (bench->parsed()) return cmd_bench(bench_n, bench_range, bench_repeats, bench_seed,
                                              bench_trials);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitRefused;
    }
    return kExitRefused;
}
