#include "vsmp/exact.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "vsmp/error.hpp"
#include "vsmp/separation.hpp"

namespace vsmp {

namespace {

/// Adjacency of each vertex as a bitmask; bit k stands for vertex k+1.
std::vector<std::uint64_t> neighbor_masks(const Graph& g) {
    const int n = g.num_vertices();
    std::vector<std::uint64_t> nbr(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v = 1; v <= n; ++v) {
        for (Vertex w : g.neighbors(v)) {
            nbr[static_cast<std::size_t>(v)] |= std::uint64_t{1} << (w - 1);
        }
    }
    return nbr;
}

} // namespace

int boundary(const Graph& g, const std::vector<Vertex>& s) {
    const int n = g.num_vertices();
    std::vector<char> in_s(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex v : s) {
        if (v < 1 || v > n) {
            throw InvalidVertex("vertex " + std::to_string(v) + " outside 1.." +
                                std::to_string(n));
        }
        in_s[static_cast<std::size_t>(v)] = 1;
    }
    int count = 0;
    for (Vertex v = 1; v <= n; ++v) {
        if (!in_s[static_cast<std::size_t>(v)]) continue;
        for (Vertex w : g.neighbors(v)) {
            if (!in_s[static_cast<std::size_t>(w)]) {
                ++count;
                break;
            }
        }
    }
    return count;
}

ExactResult optimal_vs(const Graph& g, int max_vertices) {
    const int n = g.num_vertices();
    if (max_vertices < 1 || max_vertices > 25) {
        throw InvalidParameter("exact vertex limit must be in 1..25, got " +
                               std::to_string(max_vertices));
    }
    if (n > max_vertices) {
        throw InstanceTooLarge("graph has " + std::to_string(n) +
                               " vertices, exact limit is " +
                               std::to_string(max_vertices));
    }

    const auto nbr = neighbor_masks(g);
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    std::vector<std::uint8_t> opt(static_cast<std::size_t>(full) + 1, 0);
    std::vector<std::uint8_t> last(static_cast<std::size_t>(full) + 1, 0);

    for (std::uint64_t s = 1; s <= full; ++s) {
        int bnd = 0;
        const std::uint64_t outside = full & ~s;
        for (std::uint64_t t = s; t != 0; t &= t - 1) {
            const int v = std::countr_zero(t) + 1;
            if (nbr[static_cast<std::size_t>(v)] & outside) ++bnd;
        }
        int best = std::numeric_limits<int>::max();
        int best_v = 0;
        for (std::uint64_t t = s; t != 0; t &= t - 1) {
            const int v = std::countr_zero(t) + 1;
            const int sub = opt[s & ~(t & -t)];
            if (sub < best) {
                best = sub;
                best_v = v;
            }
        }
        opt[s] = static_cast<std::uint8_t>(std::max(bnd, best));
        last[s] = static_cast<std::uint8_t>(best_v);
    }

    std::vector<Vertex> seq(static_cast<std::size_t>(n), 0);
    std::uint64_t s = full;
    for (int i = n; i >= 1; --i) {
        const Vertex v = last[s];
        seq[static_cast<std::size_t>(i - 1)] = v;
        s &= ~(std::uint64_t{1} << (v - 1));
    }
    return ExactResult{Layout(std::move(seq)), opt[full]};
}

int optimal_vs_exhaustive(const Graph& g) {
    const int n = g.num_vertices();
    if (n > 9) {
        throw InstanceTooLarge("graph has " + std::to_string(n) +
                               " vertices, exhaustive limit is 9");
    }
    std::vector<Vertex> seq(static_cast<std::size_t>(n));
    std::iota(seq.begin(), seq.end(), 1);
    int best = std::numeric_limits<int>::max();
    do {
        best = std::min(best, vertex_separation(g, Layout(seq)));
    } while (std::next_permutation(seq.begin(), seq.end()));
    return best;
}

} // namespace vsmp
