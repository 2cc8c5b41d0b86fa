#ifndef VSMP_BENCH_HPP
#define VSMP_BENCH_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vsmp/graph.hpp"
#include "vsmp/instances.hpp"

namespace vsmp {

/// One benchmark row: a heuristic applied to one instance for a number of
/// seeded runs. seed is the master seed the runs were derived from, so the
/// row can be reproduced with `solve --seed <seed>`.
struct HeuristicRun {
    std::string instance_id;
    std::string class_tag;
    int n = 0;
    int m = 0;
    std::string heuristic;
    std::uint64_t seed = 0;
    int runs = 0;
    int best_vs = 0;
    double mean_vs = 0.0;
    double time_ms = 0.0;
};

/// Aggregated view of a run list: average best VS per (class, heuristic),
/// and per heuristic the number of instances on which it attains the
/// minimum best VS among the compared heuristics. Ties credit every tied
/// heuristic. Classes and heuristics keep first-appearance order.
struct BenchReport {
    std::vector<std::string> classes;
    std::vector<std::string> heuristics;
    std::vector<int> class_sizes;                  // instances per class
    std::vector<std::vector<double>> avg_best_vs;  // [class][heuristic]
    std::vector<std::vector<int>> best_counts;     // [class][heuristic]
    std::vector<int> total_best_counts;            // [heuristic]
};

/// Builds the report. Every (instance, heuristic) pair may appear at most
/// once; a repeat raises DuplicateRun.
BenchReport summarize(const std::vector<HeuristicRun>& runs);

void print_report(const BenchReport& report, std::ostream& out);

/// CSV with header instance_id,class,n,m,heuristic,seed,runs,best_vs,
/// mean_vs,time_ms and one row per run. Only time_ms varies between
/// repetitions with the same manifest and seed.
std::string to_csv(const std::vector<HeuristicRun>& runs);

/// Manifest text: one instance per line, `<class> <family-or-file>
/// <params>`, e.g. `grid grid 3 3`, `tree tree 12 7`, `hb file a/b.mtx`.
/// `#` comments and blank lines are ignored. Relative file paths resolve
/// against base_dir.
std::vector<InstanceSpec> parse_manifest(const std::string& text,
                                         const std::string& base_dir);

/// Reads and parses a manifest file; relative instance paths resolve
/// against the manifest's own directory.
std::vector<InstanceSpec> load_manifest(const std::string& path);

struct SolveResult {
    HeuristicRun run;
    Layout layout;
    std::optional<int> exact_vs;
};

/// Best-of-`runs` protocol on one instance; prints the result to out. With
/// exact set, also computes the oracle optimum and the gap (the instance
/// must be within the exact solver's size limit).
SolveResult cmd_solve(const InstanceSpec& spec, const std::string& heuristic,
                      int runs, std::uint64_t master_seed, bool exact,
                      std::ostream& out);

struct BenchResult {
    std::vector<HeuristicRun> runs;
    BenchReport report;
};

/// Runs every heuristic on every manifest instance with per-pair seeds
/// derived from master_seed, writes the CSV to csv_path (unless empty),
/// and prints the report to out.
BenchResult cmd_bench(const std::vector<InstanceSpec>& manifest,
                      const std::vector<std::string>& heuristics, int runs,
                      std::uint64_t master_seed, const std::string& csv_path,
                      std::ostream& out);

} // namespace vsmp

#endif // VSMP_BENCH_HPP
