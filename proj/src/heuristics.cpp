#include "vsmp/heuristics.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

#include "vsmp/error.hpp"
#include "vsmp/separation.hpp"

namespace vsmp {

PartialLayoutState::PartialLayoutState(const Graph& g)
    : g_(&g),
      n_(g.num_vertices()),
      placed_(static_cast<std::size_t>(n_) + 1, 0),
      remaining_(static_cast<std::size_t>(n_) + 1, 0) {
    layout_.reserve(static_cast<std::size_t>(n_));
    for (Vertex w = 1; w <= n_; ++w) remaining_[static_cast<std::size_t>(w)] = g.degree(w);
}

void PartialLayoutState::place(Vertex v) {
    if (v < 1 || v > n_) {
        throw InvalidVertex("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(n_));
    }
    if (placed_[static_cast<std::size_t>(v)]) {
        throw NotABijection("vertex " + std::to_string(v) + " placed twice");
    }
    placed_[static_cast<std::size_t>(v)] = 1;
    layout_.push_back(v);
    for (Vertex w : g_->neighbors(v)) remaining_[static_cast<std::size_t>(w)] -= 1;
}

bool PartialLayoutState::is_placed(Vertex v) const {
    if (v < 1 || v > n_) {
        throw InvalidVertex("vertex " + std::to_string(v) + " outside 1.." +
                            std::to_string(n_));
    }
    return placed_[static_cast<std::size_t>(v)] != 0;
}

std::vector<Vertex> PartialLayoutState::unvisited() const {
    std::vector<Vertex> out;
    out.reserve(static_cast<std::size_t>(n_ - placed_count()));
    for (Vertex w = 1; w <= n_; ++w) {
        if (!placed_[static_cast<std::size_t>(w)]) out.push_back(w);
    }
    return out;
}

int PartialLayoutState::remaining_degree(Vertex w) const {
    if (w < 1 || w > n_) {
        throw InvalidVertex("vertex " + std::to_string(w) + " outside 1.." +
                            std::to_string(n_));
    }
    return remaining_[static_cast<std::size_t>(w)];
}

Layout PartialLayoutState::finish() const {
    if (!complete()) {
        throw NotABijection("layout has " + std::to_string(placed_count()) +
                            " of " + std::to_string(n_) + " vertices");
    }
    return Layout(layout_);
}

namespace {

Vertex pick(const std::vector<Vertex>& candidates, RandomSource& rng) {
    if (candidates.size() == 1) return candidates.front();
    return candidates[rng.next_uint(candidates.size())];
}

} // namespace

Layout construct_h1(const Graph& g, RandomSource& rng) {
    const int n = g.num_vertices();
    PartialLayoutState state(g);

    std::vector<Vertex> candidates;
    int least = std::numeric_limits<int>::max();
    for (Vertex v = 1; v <= n; ++v) {
        const int d = g.degree(v);
        if (d < least) {
            least = d;
            candidates.clear();
        }
        if (d == least) candidates.push_back(v);
    }
    state.place(pick(candidates, rng));

    std::vector<int> adj_to_s(static_cast<std::size_t>(n) + 1, 0);
    while (!state.complete()) {
        // S: placed vertices with the fewest unplaced neighbours, not
        // counting the ones with none left. If every placed vertex is
        // saturated the unplaced part is disconnected from the layout,
        // S stays empty and P below degrades to all unplaced vertices.
        least = std::numeric_limits<int>::max();
        for (Vertex v : state.layout()) {
            const int d = state.remaining_degree(v);
            if (d > 0) least = std::min(least, d);
        }
        std::fill(adj_to_s.begin(), adj_to_s.end(), 0);
        if (least != std::numeric_limits<int>::max()) {
            for (Vertex v : state.layout()) {
                if (state.remaining_degree(v) != least) continue;
                for (Vertex w : g.neighbors(v)) {
                    if (!state.is_placed(w)) adj_to_s[static_cast<std::size_t>(w)] += 1;
                }
            }
        }
        // P: unplaced vertices adjacent to the most members of S.
        int largest = 0;
        for (Vertex w = 1; w <= n; ++w) {
            if (!state.is_placed(w)) largest = std::max(largest, adj_to_s[static_cast<std::size_t>(w)]);
        }
        // Q: members of P with the fewest unplaced neighbours.
        least = std::numeric_limits<int>::max();
        for (Vertex w = 1; w <= n; ++w) {
            if (state.is_placed(w) || adj_to_s[static_cast<std::size_t>(w)] != largest) continue;
            least = std::min(least, state.remaining_degree(w));
        }
        candidates.clear();
        for (Vertex w = 1; w <= n; ++w) {
            if (state.is_placed(w) || adj_to_s[static_cast<std::size_t>(w)] != largest) continue;
            if (state.remaining_degree(w) == least) candidates.push_back(w);
        }
        state.place(pick(candidates, rng));
    }
    return state.finish();
}

namespace {

/// Appends v's unplaced neighbours in ascending remaining-degree order,
/// smallest identifier first. The sort key is taken before any of the
/// block is placed.
void flush_neighbors(const Graph& g, PartialLayoutState& state, Vertex v) {
    std::vector<std::pair<int, Vertex>> block;
    for (Vertex w : g.neighbors(v)) {
        if (!state.is_placed(w)) block.emplace_back(state.remaining_degree(w), w);
    }
    std::sort(block.begin(), block.end());
    for (const auto& entry : block) state.place(entry.second);
}

Layout construct_sweep(const Graph& g, RandomSource&, bool prefer_layout_order) {
    const int n = g.num_vertices();
    PartialLayoutState state(g);

    Vertex start = 1;
    for (Vertex v = 2; v <= n; ++v) {
        if (g.degree(v) < g.degree(start)) start = v;
    }
    state.place(start);
    {
        std::vector<std::pair<int, Vertex>> block;
        for (Vertex w : g.neighbors(start)) block.emplace_back(g.degree(w), w);
        std::sort(block.begin(), block.end());
        for (const auto& entry : block) state.place(entry.second);
    }

    while (!state.complete()) {
        Vertex v = 0;
        if (prefer_layout_order) {
            for (Vertex u : state.layout()) {
                if (state.remaining_degree(u) > 0) {
                    v = u;
                    break;
                }
            }
        }
        if (v == 0) {
            int least = std::numeric_limits<int>::max();
            for (Vertex w = 1; w <= n; ++w) {
                const int d = state.remaining_degree(w);
                if (d > 0 && d < least) {
                    least = d;
                    v = w;
                }
            }
        }
        if (v == 0) {
            // Only vertices without unplaced neighbours remain, which means
            // the rest of the graph is isolated vertices. Append the one
            // with the smallest (degree, identifier) and re-enter the loop.
            Vertex best = 0;
            for (Vertex w = 1; w <= n; ++w) {
                if (state.is_placed(w)) continue;
                if (best == 0 || g.degree(w) < g.degree(best)) best = w;
            }
            state.place(best);
            continue;
        }
        if (!state.is_placed(v)) state.place(v);
        flush_neighbors(g, state, v);
    }
    return state.finish();
}

} // namespace

Layout construct_h2(const Graph& g, RandomSource& rng) {
    return construct_sweep(g, rng, false);
}

Layout construct_h3(const Graph& g, RandomSource& rng) {
    return construct_sweep(g, rng, true);
}

Layout random_layout(const Graph& g, RandomSource& rng) {
    return Layout(rng.permutation(g.num_vertices()));
}

Heuristic parse_heuristic(const std::string& id) {
    if (id == "h1") return Heuristic::h1;
    if (id == "h2") return Heuristic::h2;
    if (id == "h3") return Heuristic::h3;
    if (id == "random") return Heuristic::random;
    throw UnknownHeuristic("unknown heuristic '" + id +
                           "' (expected h1, h2, h3 or random)");
}

std::string heuristic_name(Heuristic h) {
    switch (h) {
        case Heuristic::h1: return "h1";
        case Heuristic::h2: return "h2";
        case Heuristic::h3: return "h3";
        case Heuristic::random: return "random";
    }
    throw UnknownHeuristic("unknown heuristic enum value");
}

Layout construct(const Graph& g, Heuristic h, RandomSource& rng) {
    switch (h) {
        case Heuristic::h1: return construct_h1(g, rng);
        case Heuristic::h2: return construct_h2(g, rng);
        case Heuristic::h3: return construct_h3(g, rng);
        case Heuristic::random: return random_layout(g, rng);
    }
    throw UnknownHeuristic("unknown heuristic enum value");
}

BestOfRuns best_of_runs(const Graph& g, const std::string& heuristic, int runs,
                        std::uint64_t master_seed) {
    const Heuristic h = parse_heuristic(heuristic);
    if (runs < 1) {
        throw InvalidParameter("runs must be at least 1, got " + std::to_string(runs));
    }
    std::optional<Layout> best_layout;
    int best_vs = 0;
    int best_run = 0;
    long long total_vs = 0;
    for (int i = 0; i < runs; ++i) {
        RandomSource rng(derive_run_seed(master_seed, static_cast<std::uint64_t>(i)));
        Layout layout = construct(g, h, rng);
        const int vs = vertex_separation(g, layout);
        total_vs += vs;
        if (!best_layout || vs < best_vs) {
            best_layout = std::move(layout);
            best_vs = vs;
            best_run = i;
        }
    }
    return BestOfRuns{std::move(*best_layout), best_vs, best_run,
                      static_cast<double>(total_vs) / runs};
}

} // namespace vsmp
