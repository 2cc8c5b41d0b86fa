#include <limits>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "support.hpp"

#include "vsmp/error.hpp"
#include "vsmp/exact.hpp"
#include "vsmp/heuristics.hpp"
#include "vsmp/instances.hpp"
#include "vsmp/separation.hpp"

using vsmp::Graph;
using vsmp::Layout;
using vsmp::PartialLayoutState;
using vsmp::RandomSource;
using vsmp::Vertex;

namespace {

/// Re-statement of the h1 selection rules on plain sets, sharing no state
/// with the library implementation. S keeps the placed vertices with the
/// least positive number of unvisited neighbours; when all are saturated, S
/// is empty and P covers every unvisited vertex. Must replay the library's
/// random draws exactly: candidates in ascending order, one draw per step,
/// no draw for singleton candidate sets.
Layout reference_h1(const Graph& g, RandomSource& rng) {
    const int n = g.num_vertices();
    std::set<Vertex> unvisited;
    for (Vertex v = 1; v <= n; ++v) unvisited.insert(v);
    std::vector<Vertex> layout;

    const auto count_in = [&](Vertex v, const std::set<Vertex>& s) {
        int c = 0;
        for (Vertex w : g.neighbors(v)) c += s.count(w) ? 1 : 0;
        return c;
    };
    const auto pick = [&](const std::vector<Vertex>& cand) {
        return cand.size() == 1 ? cand.front()
                                : cand[rng.next_uint(cand.size())];
    };

    std::vector<Vertex> cand;
    int least = std::numeric_limits<int>::max();
    for (Vertex v : unvisited) {
        if (g.degree(v) < least) {
            least = g.degree(v);
            cand.clear();
        }
        if (g.degree(v) == least) cand.push_back(v);
    }
    Vertex v0 = pick(cand);
    layout.push_back(v0);
    unvisited.erase(v0);

    while (!unvisited.empty()) {
        int least_s = std::numeric_limits<int>::max();
        for (Vertex v : layout) {
            const int c = count_in(v, unvisited);
            if (c > 0) least_s = std::min(least_s, c);
        }
        std::set<Vertex> s;
        for (Vertex v : layout) {
            if (count_in(v, unvisited) == least_s) s.insert(v);
        }
        int largest = 0;
        for (Vertex w : unvisited) largest = std::max(largest, count_in(w, s));
        int least_q = std::numeric_limits<int>::max();
        for (Vertex w : unvisited) {
            if (count_in(w, s) == largest) least_q = std::min(least_q, count_in(w, unvisited));
        }
        cand.clear();
        for (Vertex w : unvisited) {
            if (count_in(w, s) == largest && count_in(w, unvisited) == least_q) {
                cand.push_back(w);
            }
        }
        const Vertex v = pick(cand);
        layout.push_back(v);
        unvisited.erase(v);
    }
    return Layout(layout);
}

} // namespace

TEST_CASE("h1 matches its from-scratch restatement") {
    std::mt19937_64 eng(11);
    std::uniform_int_distribution<int> size(1, 22);
    std::uniform_real_distribution<double> density(0.0, 0.8);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = size(eng);
        const Graph g = vsmp_tests::random_graph(eng, n, trial % 5 == 0 ? 0.05 : density(eng));
        for (std::uint64_t seed = 1; seed <= 3; ++seed) {
            RandomSource a(seed);
            RandomSource b(seed);
            CHECK(construct_h1(g, a).sequence() == reference_h1(g, b).sequence());
        }
    }
}

TEST_CASE("partial layout state tracks remaining degrees") {
    std::mt19937_64 eng(17);
    for (int trial = 0; trial < 20; ++trial) {
        const int n = 1 + static_cast<int>(eng() % 18);
        const Graph g = vsmp_tests::random_graph(eng, n, 0.4);
        PartialLayoutState state(g);
        const auto order = vsmp_tests::shuffled_layout(eng, n).sequence();
        std::set<Vertex> placed;
        for (Vertex v : order) {
            CHECK_FALSE(state.is_placed(v));
            state.place(v);
            placed.insert(v);
            for (Vertex w = 1; w <= n; ++w) {
                int outside = 0;
                for (Vertex x : g.neighbors(w)) outside += placed.count(x) ? 0 : 1;
                CHECK(state.remaining_degree(w) == outside);
            }
            CHECK(state.placed_count() == static_cast<int>(placed.size()));
        }
        CHECK(state.complete());
        CHECK(state.unvisited().empty());
        CHECK(state.finish().sequence() == order);
    }
}

TEST_CASE("partial layout state rejects misuse") {
    const Graph g = vsmp::gen_path(3);
    PartialLayoutState state(g);
    state.place(2);
    CHECK_THROWS_AS(state.place(2), vsmp::NotABijection);
    CHECK_THROWS_AS(state.place(9), vsmp::InvalidVertex);
    CHECK_THROWS_AS(state.finish(), vsmp::NotABijection);
    CHECK(state.unvisited() == std::vector<Vertex>{1, 3});
}

TEST_CASE("every heuristic returns a valid bijection") {
    std::mt19937_64 eng(23);
    std::uniform_int_distribution<int> size(1, 50);
    const double densities[] = {0.0, 0.04, 0.15, 0.5, 0.9};
    for (int trial = 0; trial < 60; ++trial) {
        const int n = size(eng);
        const Graph g = vsmp_tests::random_graph(eng, n, densities[trial % 5]);
        for (const char* id : {"h1", "h2", "h3", "random"}) {
            RandomSource rng(trial);
            const Layout layout = construct(g, vsmp::parse_heuristic(id), rng);
            REQUIRE(layout.size() == n);
            for (Vertex v = 1; v <= n; ++v) {
                REQUIRE(layout.vertex_at(layout.position_of(v)) == v);
            }
        }
    }
}

TEST_CASE("heuristics are seed-deterministic") {
    std::mt19937_64 eng(29);
    const Graph g = vsmp_tests::random_graph(eng, 30, 0.2);
    for (const char* id : {"h1", "h2", "h3", "random"}) {
        const auto h = vsmp::parse_heuristic(id);
        RandomSource a(99);
        RandomSource b(99);
        CHECK(construct(g, h, a).sequence() == construct(g, h, b).sequence());
    }
}

TEST_CASE("h2 and h3 ignore the random source") {
    std::mt19937_64 eng(31);
    const Graph g = vsmp_tests::random_graph(eng, 25, 0.3);
    RandomSource a(1);
    RandomSource b(999);
    CHECK(construct_h2(g, a).sequence() == construct_h2(g, b).sequence());
    RandomSource c(1);
    RandomSource d(999);
    CHECK(construct_h3(g, c).sequence() == construct_h3(g, d).sequence());
}

TEST_CASE("h2 walks a path in order") {
    const Graph g = vsmp::gen_path(4);
    RandomSource rng(1);
    CHECK(construct_h2(g, rng).sequence() == std::vector<Vertex>{1, 2, 3, 4});
    CHECK(construct_h3(g, rng).sequence() == std::vector<Vertex>{1, 2, 3, 4});
}

TEST_CASE("stars get unit separation from every constructor") {
    const Graph g = vsmp::gen_star(4);
    RandomSource rng(5);
    CHECK(construct_h2(g, rng).sequence() == std::vector<Vertex>{2, 1, 3, 4, 5});
    CHECK(construct_h3(g, rng).sequence() == std::vector<Vertex>{2, 1, 3, 4, 5});
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        RandomSource r(seed);
        CHECK(vertex_separation(g, construct_h1(g, r)) == 1);
    }
}

TEST_CASE("h3's layout preference departs from h2") {
    // Star around 1 with a pendant hanging off 4: h2 chases the globally
    // rarest vertex and pays 2, h3 drains the earliest placed vertex first
    // and pays 1.
    const Graph g(5, {{1, 2}, {1, 3}, {1, 4}, {4, 5}});
    RandomSource rng(1);
    const Layout h2 = construct_h2(g, rng);
    const Layout h3 = construct_h3(g, rng);
    CHECK(h2.sequence() == std::vector<Vertex>{2, 1, 4, 5, 3});
    CHECK(h3.sequence() == std::vector<Vertex>{2, 1, 3, 4, 5});
    CHECK(vertex_separation(g, h2) == 2);
    CHECK(vertex_separation(g, h3) == 1);
}

TEST_CASE("isolated leftovers are appended by identifier") {
    const Graph g(6, {{2, 3}});
    RandomSource rng(1);
    CHECK(construct_h2(g, rng).sequence() == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
    RandomSource rng2(1);
    CHECK(construct_h3(g, rng2).sequence() == std::vector<Vertex>{1, 2, 3, 4, 5, 6});
}

TEST_CASE("single vertex graph") {
    const Graph g(1, {});
    for (const char* id : {"h1", "h2", "h3", "random"}) {
        RandomSource rng(3);
        CHECK(construct(g, vsmp::parse_heuristic(id), rng).sequence() ==
              std::vector<Vertex>{1});
    }
}

TEST_CASE("no heuristic beats the oracle") {
    std::mt19937_64 eng(37);
    std::uniform_int_distribution<int> size(1, 9);
    std::uniform_real_distribution<double> density(0.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = size(eng);
        const Graph g = vsmp_tests::random_graph(eng, n, density(eng));
        const int opt = vsmp::optimal_vs(g).vs;
        for (const char* id : {"h1", "h2", "h3", "random"}) {
            RandomSource rng(trial + 1);
            const Layout layout = construct(g, vsmp::parse_heuristic(id), rng);
            CHECK(vertex_separation(g, layout) >= opt);
        }
    }
}

TEST_CASE("random_layout is roughly uniform") {
    const Graph g = vsmp::gen_path(3);
    RandomSource rng(2024);
    std::map<std::vector<Vertex>, int> counts;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        counts[random_layout(g, rng).sequence()] += 1;
    }
    CHECK(counts.size() == 6);
    for (const auto& [perm, count] : counts) {
        const double freq = static_cast<double>(count) / draws;
        CHECK(freq > 1.0 / 6 - 0.02);
        CHECK(freq < 1.0 / 6 + 0.02);
    }
}

TEST_CASE("best_of_runs keeps the earliest best run") {
    const Graph k4 = vsmp::gen_complete(4);
    const auto res = vsmp::best_of_runs(k4, "random", 30, 7);
    CHECK(res.vs == 3);
    CHECK(res.mean_vs == 3.0);
    CHECK(res.best_run == 0);
    CHECK(vertex_separation(k4, res.layout) == 3);
}

TEST_CASE("best_of_runs with one run equals a single seeded run") {
    std::mt19937_64 eng(41);
    const Graph g = vsmp_tests::random_graph(eng, 15, 0.3);
    const auto res = vsmp::best_of_runs(g, "h1", 1, 1234);
    RandomSource rng(vsmp::derive_run_seed(1234, 0));
    CHECK(res.layout.sequence() == construct_h1(g, rng).sequence());
    CHECK(res.mean_vs == static_cast<double>(res.vs));
}

TEST_CASE("best_of_runs finds grid optima") {
    const auto g23 = vsmp::gen_grid(2, 3);
    CHECK(vsmp::best_of_runs(g23, "h1", 30, 5).vs == 2);
    const auto g33 = vsmp::gen_grid(3, 3);
    const auto res = vsmp::best_of_runs(g33, "h1", 30, 5);
    CHECK(res.vs == 3);
    CHECK(res.vs == vsmp::optimal_vs(g33).vs);
}

TEST_CASE("best_of_runs argument validation") {
    const Graph g = vsmp::gen_path(3);
    CHECK_THROWS_AS(vsmp::best_of_runs(g, "h9", 5, 1), vsmp::UnknownHeuristic);
    CHECK_THROWS_AS(vsmp::best_of_runs(g, "h1", 0, 1), vsmp::InvalidParameter);
}

TEST_CASE("heuristic identifiers round-trip") {
    for (const char* id : {"h1", "h2", "h3", "random"}) {
        CHECK(vsmp::heuristic_name(vsmp::parse_heuristic(id)) == id);
    }
    CHECK_THROWS_AS(vsmp::parse_heuristic("H1"), vsmp::UnknownHeuristic);
    CHECK_THROWS_AS(vsmp::parse_heuristic(""), vsmp::UnknownHeuristic);
}
