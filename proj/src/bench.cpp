#include "vsmp/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <unordered_set>

#include "vsmp/error.hpp"
#include "vsmp/exact.hpp"
#include "vsmp/heuristics.hpp"
#include "vsmp/rng.hpp"
#include "vsmp/separation.hpp"

namespace vsmp {

namespace {

std::size_t index_of(std::vector<std::string>& order, const std::string& name) {
    const auto it = std::find(order.begin(), order.end(), name);
    if (it != order.end()) return static_cast<std::size_t>(it - order.begin());
    order.push_back(name);
    return order.size() - 1;
}

} // namespace

BenchReport summarize(const std::vector<HeuristicRun>& runs) {
    BenchReport report;
    std::unordered_set<std::string> seen_pairs;
    std::vector<std::string> instance_order;
    std::vector<std::size_t> instance_class;
    // best_vs[instance][heuristic]; -1 marks a pair that never ran
    std::vector<std::vector<int>> best;

    for (const HeuristicRun& run : runs) {
        const std::string pair = run.instance_id + "\x1f" + run.heuristic;
        if (!seen_pairs.insert(pair).second) {
            throw DuplicateRun("instance '" + run.instance_id + "' with heuristic '" +
                               run.heuristic + "' listed twice");
        }
        const std::size_t c = index_of(report.classes, run.class_tag);
        const std::size_t h = index_of(report.heuristics, run.heuristic);
        const std::size_t i = index_of(instance_order, run.instance_id);
        if (i == instance_class.size()) instance_class.push_back(c);
        if (i == best.size()) best.emplace_back();
        best[i].resize(report.heuristics.size(), -1);
        best[i][h] = run.best_vs;
    }

    const std::size_t nc = report.classes.size();
    const std::size_t nh = report.heuristics.size();
    report.class_sizes.assign(nc, 0);
    report.avg_best_vs.assign(nc, std::vector<double>(nh, 0.0));
    report.best_counts.assign(nc, std::vector<int>(nh, 0));
    report.total_best_counts.assign(nh, 0);

    std::vector<std::vector<int>> cell_counts(nc, std::vector<int>(nh, 0));
    for (std::size_t i = 0; i < instance_order.size(); ++i) {
        const std::size_t c = instance_class[i];
        report.class_sizes[c] += 1;
        best[i].resize(nh, -1);
        int min_vs = -1;
        for (std::size_t h = 0; h < nh; ++h) {
            const int vs = best[i][h];
            if (vs < 0) continue;
            report.avg_best_vs[c][h] += vs;
            cell_counts[c][h] += 1;
            if (min_vs < 0 || vs < min_vs) min_vs = vs;
        }
        for (std::size_t h = 0; h < nh; ++h) {
            if (best[i][h] == min_vs && min_vs >= 0) {
                report.best_counts[c][h] += 1;
                report.total_best_counts[h] += 1;
            }
        }
    }
    for (std::size_t c = 0; c < nc; ++c) {
        for (std::size_t h = 0; h < nh; ++h) {
            report.avg_best_vs[c][h] = cell_counts[c][h] > 0
                                           ? report.avg_best_vs[c][h] / cell_counts[c][h]
                                           : std::nan("");
        }
    }
    return report;
}

void print_report(const BenchReport& report, std::ostream& out) {
    std::size_t label = 9;  // fits "heuristic"
    for (const auto& c : report.classes) label = std::max(label, c.size());
    std::size_t cell = 6;
    for (const auto& h : report.heuristics) cell = std::max(cell, h.size());
    const int lw = static_cast<int>(label) + 2;
    const int cw = static_cast<int>(cell) + 2;
    const auto flags = out.flags();
    const auto precision = out.precision();

    out << "average best vertex separation\n";
    out << std::left << std::setw(lw) << "class" << std::setw(cw) << "size";
    for (const auto& h : report.heuristics) out << std::setw(cw) << h;
    out << '\n';
    out << std::fixed << std::setprecision(2);
    for (std::size_t c = 0; c < report.classes.size(); ++c) {
        out << std::setw(lw) << report.classes[c] << std::setw(cw)
            << report.class_sizes[c];
        for (std::size_t h = 0; h < report.heuristics.size(); ++h) {
            const double v = report.avg_best_vs[c][h];
            if (std::isnan(v)) {
                out << std::setw(cw) << "-";
            } else {
                out << std::setw(cw) << v;
            }
        }
        out << '\n';
    }

    out << "\nbest-solution counts\n";
    out << std::setw(lw) << "heuristic";
    for (const auto& c : report.classes) out << std::setw(cw) << c;
    out << std::setw(cw) << "total" << '\n';
    for (std::size_t h = 0; h < report.heuristics.size(); ++h) {
        out << std::setw(lw) << report.heuristics[h];
        for (std::size_t c = 0; c < report.classes.size(); ++c) {
            out << std::setw(cw) << report.best_counts[c][h];
        }
        out << std::setw(cw) << report.total_best_counts[h] << '\n';
    }
    out.flags(flags);
    out.precision(precision);
}

std::string to_csv(const std::vector<HeuristicRun>& runs) {
    std::ostringstream out;
    out << "instance_id,class,n,m,heuristic,seed,runs,best_vs,mean_vs,time_ms\n";
    for (const HeuristicRun& r : runs) {
        out << r.instance_id << ',' << r.class_tag << ',' << r.n << ',' << r.m << ','
            << r.heuristic << ',' << r.seed << ',' << r.runs << ',' << r.best_vs << ','
            << r.mean_vs << ',' << r.time_ms << '\n';
    }
    return out.str();
}

std::vector<InstanceSpec> parse_manifest(const std::string& text,
                                         const std::string& base_dir) {
    std::vector<InstanceSpec> specs;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string tok;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty() || toks.front().front() == '#') continue;
        if (toks.size() < 3) {
            throw ParseError(line_no, "expected '<class> <family-or-file> <params>'");
        }
        if (toks[1] == "file" && toks.size() != 3) {
            throw ParseError(line_no, "file instance takes exactly one path");
        }
        std::string spec_text = toks[1];
        for (std::size_t i = 2; i < toks.size(); ++i) spec_text += ":" + toks[i];
        InstanceSpec spec;
        try {
            spec = parse_instance_spec(spec_text);
        } catch (const Error& e) {
            throw ParseError(line_no, e.what());
        }
        spec.class_tag = toks[0];
        if (spec.family == "file" && !base_dir.empty() && spec.path.front() != '/') {
            spec.path = base_dir + "/" + spec.path;
        }
        specs.push_back(std::move(spec));
    }
    return specs;
}

std::vector<InstanceSpec> load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::size_t slash = path.find_last_of('/');
    const std::string base_dir = slash == std::string::npos ? "" : path.substr(0, slash);
    return parse_manifest(buffer.str(), base_dir);
}

namespace {

struct PairOutcome {
    HeuristicRun row;
    BestOfRuns best;
};

PairOutcome run_pair(const Graph& g, const InstanceSpec& spec,
                     const std::string& heuristic, int runs,
                     std::uint64_t pair_seed) {
    const auto t0 = std::chrono::steady_clock::now();
    BestOfRuns best = best_of_runs(g, heuristic, runs, pair_seed);
    const auto t1 = std::chrono::steady_clock::now();
    HeuristicRun row;
    row.instance_id = instance_id(spec);
    row.class_tag = spec.class_tag;
    row.n = g.num_vertices();
    row.m = g.num_edges();
    row.heuristic = heuristic;
    row.seed = pair_seed;
    row.runs = runs;
    row.best_vs = best.vs;
    row.mean_vs = best.mean_vs;
    row.time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return PairOutcome{std::move(row), std::move(best)};
}

} // namespace

SolveResult cmd_solve(const InstanceSpec& spec, const std::string& heuristic,
                      int runs, std::uint64_t master_seed, bool exact,
                      std::ostream& out) {
    const Graph g = realize_instance(spec);
    PairOutcome outcome = run_pair(g, spec, heuristic, runs, master_seed);

    out << "instance " << outcome.row.instance_id << " n=" << outcome.row.n
        << " m=" << outcome.row.m << '\n';
    out << "heuristic " << heuristic << " runs=" << runs << " seed=" << master_seed
        << '\n';
    out << "best_vs " << outcome.best.vs << " (run " << outcome.best.best_run
        << ", mean " << outcome.best.mean_vs << ")\n";
    out << "layout";
    for (Vertex v : outcome.best.layout.sequence()) out << ' ' << v;
    out << '\n';

    SolveResult result{std::move(outcome.row), std::move(outcome.best.layout),
                       std::nullopt};
    if (exact) {
        const ExactResult oracle = optimal_vs(g);
        result.exact_vs = oracle.vs;
        out << "exact_vs " << oracle.vs << " (gap " << result.run.best_vs - oracle.vs
            << ")\n";
    }
    out << "time_ms " << result.run.time_ms << '\n';
    return result;
}

BenchResult cmd_bench(const std::vector<InstanceSpec>& manifest,
                      const std::vector<std::string>& heuristics, int runs,
                      std::uint64_t master_seed, const std::string& csv_path,
                      std::ostream& out) {
    if (heuristics.empty()) {
        throw InvalidParameter("no heuristics given");
    }
    if (manifest.empty()) {
        throw InvalidParameter("manifest has no instances");
    }
    for (std::size_t i = 0; i < heuristics.size(); ++i) {
        parse_heuristic(heuristics[i]);
        for (std::size_t j = i + 1; j < heuristics.size(); ++j) {
            if (heuristics[i] == heuristics[j]) {
                throw DuplicateRun("heuristic '" + heuristics[i] + "' listed twice");
            }
        }
    }

    BenchResult result;
    for (std::size_t ii = 0; ii < manifest.size(); ++ii) {
        const InstanceSpec& spec = manifest[ii];
        const Graph g = [&] {
            try {
                return realize_instance(spec);
            } catch (const Error& e) {
                throw Error("instance '" + instance_id(spec) + "': " + e.what());
            }
        }();
        const std::uint64_t instance_seed = derive_run_seed(master_seed, ii);
        for (std::size_t hi = 0; hi < heuristics.size(); ++hi) {
            const std::uint64_t pair_seed = derive_run_seed(instance_seed, hi);
            result.runs.push_back(
                run_pair(g, spec, heuristics[hi], runs, pair_seed).row);
        }
    }

    if (!csv_path.empty()) {
        std::ofstream csv(csv_path);
        if (!csv) {
            throw IoError("cannot write '" + csv_path + "'");
        }
        csv << to_csv(result.runs);
        if (!csv) {
            throw IoError("cannot write '" + csv_path + "'");
        }
    }

    result.report = summarize(result.runs);
    print_report(result.report, out);
    return result;
}

} // namespace vsmp
