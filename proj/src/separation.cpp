#include "vsmp/separation.hpp"

#include <algorithm>
#include <string>

#include "vsmp/error.hpp"

namespace vsmp {

int CutProfile::at(Position i) const {
    if (i < 1 || i > size()) {
        throw InvalidPosition("position " + std::to_string(i) + " outside 1.." +
                              std::to_string(size()));
    }
    return values_[static_cast<std::size_t>(i - 1)];
}

namespace {

void check_same_size(const Graph& g, const Layout& layout) {
    if (g.num_vertices() != layout.size()) {
        throw SizeMismatch("graph has " + std::to_string(g.num_vertices()) +
                           " vertices but layout has " + std::to_string(layout.size()));
    }
}

} // namespace

int cut_value(const Graph& g, const Layout& layout, Position i) {
    check_same_size(g, layout);
    const int n = layout.size();
    if (i < 1 || i > n) {
        throw InvalidPosition("position " + std::to_string(i) + " outside 1.." +
                              std::to_string(n));
    }
    int count = 0;
    for (Position p = 1; p <= i; ++p) {
        const Vertex u = layout.vertex_at(p);
        for (Vertex v : g.neighbors(u)) {
            if (layout.position_of(v) > i) {
                ++count;
                break;
            }
        }
    }
    return count;
}

CutProfile cut_profile(const Graph& g, const Layout& layout) {
    check_same_size(g, layout);
    const int n = g.num_vertices();
    std::vector<int> diff(static_cast<std::size_t>(n) + 1, 0);
    for (Vertex u = 1; u <= n; ++u) {
        const auto& nb = g.neighbors(u);
        if (nb.empty()) continue;
        Position hi = 0;
        for (Vertex v : nb) hi = std::max(hi, layout.position_of(v));
        const Position lo = layout.position_of(u);
        if (lo < hi) {
            diff[static_cast<std::size_t>(lo - 1)] += 1;
            diff[static_cast<std::size_t>(hi - 1)] -= 1;
        }
    }
    std::vector<int> values(static_cast<std::size_t>(n), 0);
    int running = 0;
    int vs = 0;
    for (int k = 0; k < n; ++k) {
        running += diff[static_cast<std::size_t>(k)];
        values[static_cast<std::size_t>(k)] = running;
        vs = std::max(vs, running);
    }
    return CutProfile(std::move(values), vs);
}

int vertex_separation(const Graph& g, const Layout& layout) {
    return cut_profile(g, layout).vs();
}

} // namespace vsmp
