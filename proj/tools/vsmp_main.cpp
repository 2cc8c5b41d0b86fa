#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "vsmp/bench.hpp"
#include "vsmp/error.hpp"
#include "vsmp/instances.hpp"

namespace {

int run_solve(const std::string& instance, const std::string& heuristic, int runs,
              std::uint64_t seed, bool exact) {
    const vsmp::InstanceSpec spec = vsmp::parse_instance_spec(instance);
    vsmp::cmd_solve(spec, heuristic, runs, seed, exact, std::cout);
    return 0;
}

int run_bench(const std::string& manifest_path,
              const std::vector<std::string>& heuristics, int runs,
              std::uint64_t seed, const std::string& out_csv) {
    const auto manifest = vsmp::load_manifest(manifest_path);
    vsmp::cmd_bench(manifest, heuristics, runs, seed, out_csv, std::cout);
    if (!out_csv.empty()) std::cout << "csv written to " << out_csv << '\n';
    return 0;
}

int run_gen(const std::string& family, std::vector<long long> params,
            std::uint64_t seed, bool seed_given, const std::string& out_path) {
    vsmp::InstanceSpec spec;
    spec.family = family == "random-tree" ? "tree" : family;
    spec.class_tag = spec.family;
    spec.params = std::move(params);
    if (spec.family == "tree" && seed_given && spec.params.size() == 1) {
        spec.params.push_back(static_cast<long long>(seed));
    }
    const vsmp::Graph g = vsmp::realize_instance(spec);
    std::ofstream out(out_path);
    if (!out) {
        throw vsmp::IoError("cannot write '" + out_path + "'");
    }
    out << vsmp::to_edge_list(g);
    if (!out) {
        throw vsmp::IoError("cannot write '" + out_path + "'");
    }
    std::cout << "wrote " << out_path << " (" << vsmp::instance_id(spec)
              << ", n=" << g.num_vertices() << ", m=" << g.num_edges() << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vertex separation layouts: construction heuristics, an exact "
                 "solver and a benchmark harness"};
    app.require_subcommand(1);

    std::string instance;
    std::string heuristic;
    std::string manifest_path;
    std::string out_path;
    std::string family;
    std::vector<std::string> heuristics;
    std::vector<long long> params;
    int runs = 30;
    std::uint64_t seed = 1;
    bool exact = false;

    auto* solve = app.add_subcommand("solve", "run one heuristic on one instance");
    solve->add_option("--instance", instance,
                      "instance spec, e.g. grid:3:3, tree:12:7, file:g.txt")
        ->required();
    solve->add_option("--heuristic", heuristic, "h1, h2, h3 or random")->required();
    solve->add_option("--runs", runs, "seeded runs to take the best of");
    solve->add_option("--seed", seed, "master seed");
    solve->add_flag("--exact", exact, "also compute the exact optimum");

    auto* bench = app.add_subcommand("bench", "run heuristics over a manifest");
    bench->add_option("--manifest", manifest_path, "instance list file")->required();
    bench->add_option("--heuristics", heuristics, "heuristics to compare")
        ->required()
        ->delimiter(',');
    bench->add_option("--runs", runs, "seeded runs per (instance, heuristic)");
    bench->add_option("--seed", seed, "master seed");
    bench->add_option("--out", out_path, "CSV output path");

    auto* gen = app.add_subcommand("gen", "write a generated instance as an edge list");
    gen->add_option("--family", family, "grid, path, cycle, complete, star or tree")
        ->required();
    gen->add_option("params", params, "family parameters, e.g. rows cols");
    auto* gen_seed = gen->add_option("--seed", seed, "tree generation seed");
    gen->add_option("--out", out_path, "output path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) return run_solve(instance, heuristic, runs, seed, exact);
        if (bench->parsed()) {
            return run_bench(manifest_path, heuristics, runs, seed, out_path);
        }
        return run_gen(family, params, seed, gen_seed->count() > 0, out_path);
    } catch (const vsmp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "unexpected error: " << e.what() << '\n';
        return 1;
    }
}
