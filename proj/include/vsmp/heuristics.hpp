#ifndef VSMP_HEURISTICS_HPP
#define VSMP_HEURISTICS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "vsmp/graph.hpp"
#include "vsmp/rng.hpp"

namespace vsmp {

/// Working state shared by the construction heuristics: the layout built so
/// far, the set of vertices still to place, and for every vertex w the count
/// |N(w) \ layout| of its neighbours not yet placed (kept incrementally).
class PartialLayoutState {
public:
    explicit PartialLayoutState(const Graph& g);

    void place(Vertex v);
    bool is_placed(Vertex v) const;
    bool complete() const { return placed_count() == n_; }
    int placed_count() const { return static_cast<int>(layout_.size()); }

    const std::vector<Vertex>& layout() const { return layout_; }
    std::vector<Vertex> unvisited() const;  // ascending

    /// Number of w's neighbours outside the layout.
    int remaining_degree(Vertex w) const;

    /// The finished layout. Requires every vertex placed.
    Layout finish() const;

private:
    const Graph* g_;
    int n_;
    std::vector<Vertex> layout_;
    std::vector<char> placed_;        // index by vertex, 0 unused
    std::vector<int> remaining_;      // index by vertex, 0 unused
};

/// Construction heuristics. All four produce a valid layout for any graph,
/// including disconnected graphs and isolated vertices. Identical (graph,
/// seed) pairs produce identical layouts. Random tie-breaks draw one
/// uniform index into the candidate list in ascending vertex order, and
/// only when there are at least two candidates; h2 and h3 break every tie
/// by smallest vertex identifier and never touch the random source.
///
/// h1 grows the layout from a least-degree start vertex. Each step ranks
/// the placed vertices by fewest unplaced neighbours (S), then picks an
/// unplaced vertex adjacent to the most members of S, preferring fewer
/// unplaced neighbours, ties at random. When no unplaced vertex touches S
/// (exhausted component), every unplaced vertex is a candidate.
Layout construct_h1(const Graph& g, RandomSource& rng);

/// h2 starts at the smallest least-degree vertex, appends its neighbours in
/// ascending degree order, then repeatedly selects the vertex with the
/// least non-zero remaining degree and flushes that vertex's unplaced
/// neighbours in ascending remaining-degree order. If only isolated
/// vertices remain they are appended by (degree, identifier).
Layout construct_h2(const Graph& g, RandomSource& rng);

/// h3 is h2 with one change: the selection step prefers the earliest-placed
/// layout vertex that still has unplaced neighbours, falling back to h2's
/// rule when the layout has none.
Layout construct_h3(const Graph& g, RandomSource& rng);

/// Uniform random permutation of the vertices.
Layout random_layout(const Graph& g, RandomSource& rng);

enum class Heuristic { h1, h2, h3, random };

/// Maps a CLI identifier ("h1", "h2", "h3", "random") to the heuristic.
Heuristic parse_heuristic(const std::string& id);
std::string heuristic_name(Heuristic h);

Layout construct(const Graph& g, Heuristic h, RandomSource& rng);

struct BestOfRuns {
    Layout layout;     // best layout found; ties keep the earliest run
    int vs = 0;        // its vertex separation
    int best_run = 0;  // 0-based index of the winning run
    double mean_vs = 0.0;
};

/// Runs the heuristic `runs` times with per-run seeds derived from
/// master_seed via derive_run_seed and keeps the best layout.
BestOfRuns best_of_runs(const Graph& g, const std::string& heuristic, int runs,
                        std::uint64_t master_seed);

} // namespace vsmp

#endif // VSMP_HEURISTICS_HPP
