#include "vsmp/graph.hpp"

#include <algorithm>
#include <string>

namespace vsmp {

Graph::Graph(int n, const std::vector<Edge>& edges) {
    if (n < 1)
        throw InvalidParameter("vertex count must be at least 1, got " + std::to_string(n));
    n_ = n;
    adj_.assign(static_cast<std::size_t>(n) + 1, {});
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n)
            throw InvalidVertex("edge endpoint " + std::to_string(u) + " outside 1.." + std::to_string(n));
        if (v < 1 || v > n)
            throw InvalidVertex("edge endpoint " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (u == v)
            throw SelfLoop("self-loop at vertex " + std::to_string(u));
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (Vertex u = 1; u <= n_; ++u) {
        auto& nbrs = adj_[u];
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        const int d = static_cast<int>(nbrs.size());
        m_ += d;
        max_degree_ = std::max(max_degree_, d);
    }
    m_ /= 2;
}

void Graph::check_vertex(Vertex u) const {
    if (u < 1 || u > n_)
        throw InvalidVertex("vertex " + std::to_string(u) + " outside 1.." + std::to_string(n_));
}

const std::vector<Vertex>& Graph::neighbors(Vertex u) const {
    check_vertex(u);
    return adj_[u];
}

int Graph::degree(Vertex u) const {
    check_vertex(u);
    return static_cast<int>(adj_[u].size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const auto& nbrs = adj_[u];
    return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 1; u <= n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v)
                out.emplace_back(u, v);
    return out;
}

Layout::Layout(std::vector<Vertex> sequence) : sequence_(std::move(sequence)) {
    const int n = static_cast<int>(sequence_.size());
    if (n == 0)
        throw NotABijection("layout sequence is empty");
    position_of_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (Position i = 1; i <= n; ++i) {
        const Vertex v = sequence_[i - 1];
        if (v < 1 || v > n)
            throw NotABijection("vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
        if (position_of_[v] != 0)
            throw NotABijection("vertex " + std::to_string(v) + " appears more than once");
        position_of_[v] = i;
    }
}

Position Layout::position_of(Vertex v) const {
    if (v < 1 || v > size())
        throw InvalidVertex("vertex " + std::to_string(v) + " outside 1.." + std::to_string(size()));
    return position_of_[v];
}

Vertex Layout::vertex_at(Position i) const {
    if (i < 1 || i > size())
        throw InvalidPosition("position " + std::to_string(i) + " outside 1.." + std::to_string(size()));
    return sequence_[i - 1];
}

} // namespace vsmp
