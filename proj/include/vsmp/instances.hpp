#ifndef VSMP_INSTANCES_HPP
#define VSMP_INSTANCES_HPP

#include <string>
#include <vector>

#include "vsmp/graph.hpp"
#include "vsmp/rng.hpp"

namespace vsmp {

/// rows x cols lattice; vertex (r, c) gets identifier (r-1)*cols + c and is
/// joined to its horizontal and vertical neighbours.
Graph gen_grid(int rows, int cols);

/// Uniform random labelled tree on n vertices (random Prufer sequence).
Graph gen_random_tree(int n, RandomSource& rng);

Graph gen_path(int n);
Graph gen_cycle(int n);     // n >= 3
Graph gen_complete(int n);
Graph gen_star(int k);      // K_{1,k}: centre 1, leaves 2..k+1

/// Edge-list text: first significant line "n m", then one "u v" line per
/// edge with 1-based labels. Lines beginning with '#' and blank lines are
/// ignored. Duplicate edges collapse; the header's m must match the number
/// of distinct edges.
Graph parse_edge_list(const std::string& text);

/// The inverse of parse_edge_list: "n m" header and one line per edge,
/// smaller endpoint first, in ascending order.
std::string to_edge_list(const Graph& g);

/// MatrixMarket coordinate file. Accepted headers: object "matrix", format
/// "coordinate", field pattern/real/integer/complex, symmetry symmetric or
/// general; the matrix must be square. The graph is the off-diagonal
/// nonzero pattern: diagonal entries are dropped, (i,j) and (j,i) merge,
/// and values are ignored.
Graph parse_matrix_market(const std::string& text);

/// Reads a file and parses it as MatrixMarket when it opens with the
/// %%MatrixMarket banner, as edge-list text otherwise.
Graph load_instance_file(const std::string& path);

/// A named instance: either a generator family with numeric parameters or
/// an external file. class_tag groups instances in benchmark reports.
struct InstanceSpec {
    std::string class_tag;
    std::string family;              // grid|path|cycle|complete|star|tree|file
    std::vector<long long> params;   // family parameters (tree: size[, seed])
    std::string path;                // family "file" only
};

/// Parses "family:param:param" or "file:path", e.g. "grid:3:3", "path:10",
/// "tree:12:7" (trailing seed optional). "random-tree" is accepted as an
/// alias for "tree". The class tag defaults to the family name.
InstanceSpec parse_instance_spec(const std::string& text);

/// Stable identifier used in reports, e.g. "grid-3x3", "tree-12-s7", or
/// the file's basename.
std::string instance_id(const InstanceSpec& spec);

/// Builds or loads the graph that `spec` describes.
Graph realize_instance(const InstanceSpec& spec);

} // namespace vsmp

#endif // VSMP_INSTANCES_HPP
