#ifndef VSMP_EXACT_HPP
#define VSMP_EXACT_HPP

#include <vector>

#include "vsmp/graph.hpp"

namespace vsmp {

/// Number of vertices in s with at least one neighbour outside s. Equals
/// the cut value at position |s| of any layout whose first |s| vertices
/// are exactly s.
int boundary(const Graph& g, const std::vector<Vertex>& s);

struct ExactResult {
    Layout layout;
    int vs = 0;
};

inline constexpr int kDefaultExactLimit = 20;

/// Minimum vertex separation over all layouts, with a witness layout.
///
/// Subset dynamic program over bitmasks: opt(S) is the best achievable
/// maximum cut while placing exactly the vertices of S first, via
/// opt(S) = max(boundary(S), min over v in S of opt(S minus v)). Table
/// size is 2^n entries, hence the vertex limit. Back-pointer ties go to
/// the smallest vertex identifier, so the witness is deterministic.
ExactResult optimal_vs(const Graph& g, int max_vertices = kDefaultExactLimit);

/// Minimum vertex separation by enumerating all n! layouts. Only for
/// cross-checking the subset program; n is capped at 9.
int optimal_vs_exhaustive(const Graph& g);

} // namespace vsmp

#endif // VSMP_EXACT_HPP
