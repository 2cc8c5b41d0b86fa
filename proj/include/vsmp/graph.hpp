#ifndef VSMP_GRAPH_HPP
#define VSMP_GRAPH_HPP

#include <utility>
#include <vector>

#include "vsmp/error.hpp"

namespace vsmp {

/// Vertices are dense 1-based identifiers 1..n.
using Vertex = int;
/// Layout positions are 1..n.
using Position = int;
using Edge = std::pair<Vertex, Vertex>;

/// Immutable undirected simple graph. Self-loops are rejected at
/// construction, duplicate edges are collapsed, and adjacency lists are
/// kept sorted. Safe to share between threads once built.
class Graph {
public:
    /// Builds a graph on vertices 1..n from unordered endpoint pairs.
    /// Throws InvalidVertex for endpoints outside 1..n and SelfLoop for
    /// edges of the form (u,u).
    Graph(int n, const std::vector<Edge>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return m_; }
    int max_degree() const { return max_degree_; }

    /// Neighbours of u in ascending order.
    const std::vector<Vertex>& neighbors(Vertex u) const;
    int degree(Vertex u) const;
    bool has_edge(Vertex u, Vertex v) const;

    /// All edges as (u,v) pairs with u < v, in ascending order.
    std::vector<Edge> edges() const;

private:
    void check_vertex(Vertex u) const;

    int n_ = 0;
    int m_ = 0;
    int max_degree_ = 0;
    std::vector<std::vector<Vertex>> adj_; // index 0 unused
};

/// A linear layout: a bijection between vertices and positions 1..n,
/// queryable in both directions.
class Layout {
public:
    /// Builds the layout whose i-th position holds sequence[i-1].
    /// Throws NotABijection if the sequence is not a permutation of 1..n.
    explicit Layout(std::vector<Vertex> sequence);

    int size() const { return static_cast<int>(sequence_.size()); }

    Position position_of(Vertex v) const;
    Vertex vertex_at(Position i) const;

    /// The vertices in position order 1..n.
    const std::vector<Vertex>& sequence() const { return sequence_; }

private:
    std::vector<Vertex> sequence_;       // position i-1 -> vertex
    std::vector<Position> position_of_;  // index by vertex, 0 unused
};

} // namespace vsmp

#endif // VSMP_GRAPH_HPP
