#ifndef VSMP_SEPARATION_HPP
#define VSMP_SEPARATION_HPP

#include <vector>

#include "vsmp/graph.hpp"

namespace vsmp {

/// The cut values of a (graph, layout) pair. The cut at position i splits
/// the layout into L = positions 1..i and R = positions i+1..n; its value
/// is the number of L vertices with at least one neighbour in R. The
/// vertex separation of the layout is the maximum cut value.
class CutProfile {
public:
    CutProfile(std::vector<int> values, int vs)
        : values_(std::move(values)), vs_(vs) {}

    /// Cut value at position i, 1 <= i <= n. The value at i = n is 0.
    int at(Position i) const;

    /// All cut values; entry k holds the cut at position k+1.
    const std::vector<int>& values() const { return values_; }

    int vs() const { return vs_; }
    int size() const { return static_cast<int>(values_.size()); }

private:
    std::vector<int> values_;
    int vs_;
};

/// Cut value at a single position, evaluated directly from the definition:
/// walks the left side and looks for a right neighbour of each vertex.
int cut_value(const Graph& g, const Layout& layout, Position i);

/// Full profile in O(n + m): vertex u is cut at position i exactly when
/// position_of(u) <= i < max position among u's neighbours, so each vertex
/// contributes one interval to a difference array. Vertices without
/// neighbours contribute nothing.
CutProfile cut_profile(const Graph& g, const Layout& layout);

/// Maximum cut value of the layout.
int vertex_separation(const Graph& g, const Layout& layout);

} // namespace vsmp

#endif // VSMP_SEPARATION_HPP
