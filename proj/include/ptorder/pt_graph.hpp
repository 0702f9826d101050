#pragma once

#include "ptorder/int_matrix.hpp"

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ptorder {

/// Ordered arc between 1-based vertices.
struct Arc {
    int from = 0, to = 0;
    auto operator<=>(const Arc&) const = default;
};

/// 2-arc-coloured digraph of a (0,1,-1)-matrix: a blue arc (i,j) per +1 entry
/// and a red arc (i,j) per -1 entry. Arc sets are kept sorted and disjoint.
struct PTGraph {
    int n = 0;
    std::vector<Arc> blue;
    std::vector<Arc> red;

    bool has_blue(int from, int to) const;
    bool has_red(int from, int to) const;
    bool operator==(const PTGraph&) const = default;
};

/// Requires entries in {-1, 0, 1}; throws otherwise.
PTGraph build_graph(const IntMatrix& a);
IntMatrix matrix_from_graph(const PTGraph& g);

/// All arcs reversed, colours kept; corresponds to matrix transposition.
PTGraph reverse_graph(const PTGraph& g);

/// Connected components of the underlying undirected graph, each a sorted
/// vertex list, ordered by smallest vertex.
std::vector<std::vector<int>> weak_components(const PTGraph& g);

/// Subgraph on the given vertices, relabelled 1..k in increasing order of the
/// original labels.
PTGraph induced_subgraph(const PTGraph& g, const std::vector<int>& vertices);

/// Counts of k-walks from u to v split by sign: a walk is negative when it
/// uses an odd number of red arcs (with repetition). Dynamic programming over
/// (vertex, parity) states.
std::pair<Int, Int> signed_walk_counts(const PTGraph& g, int u, int v, int k);

/// GraphViz output; blue arcs solid, red arcs dashed.
std::string to_dot(const PTGraph& g);

enum class GraphType {
    Permutation,
    Type1,
    Type2a,
    Type2b,
    Type2c,
    Type2d,
    Type3a,
    Type3b,
    Type3c,
    Type4,
    NonElementary,
    NotPT,
};

const char* to_string(GraphType t);

/// Result of classifying a PT-graph. `params` is the type-specific standard
/// form parameter tuple:
///   Type1  {n, d, j1, j2}   for C_n + T(1, j1, d+1, j2), d <= n/2
///   Type2b {m1, m2, k1, k2} for C_m1 (+) C_m2 + T(1, m1+k2, m1+1, k1)
///   Type2c {p, q, h, l}     for C_p (+) C_q + T(1, n, h+1, n-l)
///   Type2d {p, q, i1, i2}   for C_p (+) C_q + T(i1, n, i2, p)
///   Type3c {p, q, m, i}     for C_p (+) C_q (+) C_m + T(1, p+q, i, p+q+m)
/// and empty for the remaining types, whose structure is carried by
/// `cycle_lengths` alone. When `transposed` is set the parameters describe the
/// reverse graph, i.e. the transposed matrix. For types with parameters,
/// `ordering` maps standard-form positions to original vertices, so that
/// conjugating the (possibly transposed) source matrix by it reproduces the
/// standard-form matrix exactly.
struct Classification {
    GraphType type = GraphType::NotPT;
    bool transposed = false;
    std::vector<int> cycle_lengths;  // permutation-part cycles, descending
    std::vector<int> params;
    std::optional<Permutation> ordering;
    std::vector<int> core_vertices;     // NonElementary: component holding the T-block
    std::vector<int> satellite_cycles;  // NonElementary: lengths of the other components
    std::string detail;                 // NotPT reason
};

/// Classifies a graph built from a (0,1,-1)-matrix into the PT taxonomy.
/// Graphs with zero red arcs classify as Permutation; graphs that are not of
/// the form P + T (wrong red count, -1s sharing a line, missing T arcs,
/// leftover not a permutation) as NotPT; disconnected PT-graphs as
/// NonElementary, with the component containing the T-block reported for
/// separate classification.
Classification classify(const PTGraph& g);

}  // namespace ptorder
