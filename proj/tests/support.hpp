#ifndef VSMP_TESTS_SUPPORT_HPP
#define VSMP_TESTS_SUPPORT_HPP

#include <algorithm>
#include <random>
#include <vector>

#include "vsmp/graph.hpp"

namespace vsmp_tests {

/// Definitional cut evaluation, edge-driven so it shares no code with the
/// library's adjacency-based evaluators: a left-side vertex counts when
/// some incident edge crosses the cut.
inline int naive_cut(const vsmp::Graph& g, const vsmp::Layout& layout, int i) {
    std::vector<char> counted(static_cast<std::size_t>(g.num_vertices()) + 1, 0);
    for (const auto& e : g.edges()) {
        const int pu = layout.position_of(e.first);
        const int pv = layout.position_of(e.second);
        if (pu <= i && pv > i) counted[static_cast<std::size_t>(e.first)] = 1;
        if (pv <= i && pu > i) counted[static_cast<std::size_t>(e.second)] = 1;
    }
    int total = 0;
    for (char c : counted) total += c;
    return total;
}

inline int naive_vs(const vsmp::Graph& g, const vsmp::Layout& layout) {
    int best = 0;
    for (int i = 1; i <= g.num_vertices(); ++i) {
        const int c = naive_cut(g, layout, i);
        if (c > best) best = c;
    }
    return best;
}

/// Erdos-Renyi style graph; p = 0 gives isolated vertices, and small p
/// gives disconnected graphs.
inline vsmp::Graph random_graph(std::mt19937_64& eng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<vsmp::Edge> edges;
    for (vsmp::Vertex u = 1; u <= n; ++u) {
        for (vsmp::Vertex v = u + 1; v <= n; ++v) {
            if (coin(eng)) edges.emplace_back(u, v);
        }
    }
    return vsmp::Graph(n, edges);
}

inline vsmp::Layout shuffled_layout(std::mt19937_64& eng, int n) {
    std::vector<vsmp::Vertex> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) seq[static_cast<std::size_t>(i)] = i + 1;
    std::shuffle(seq.begin(), seq.end(), eng);
    return vsmp::Layout(std::move(seq));
}

} // namespace vsmp_tests

#endif // VSMP_TESTS_SUPPORT_HPP
