#pragma once

#include <cstddef>
#include <set>
#include <utility>

#include "sqperc/graph.hpp"

namespace sqperc {

/// Two cyclic layers of m vertices: top [0, m), bottom [m, 2m).
struct LadderParams {
  std::size_t m = 11;  // vertices per layer
  std::size_t s = 6;   // shift of the second family of cross edges
};

void validate(const LadderParams& p);  // throws InvalidParams unless m >= 4 and 0 < s < m

/// Cyclic ladder on two layers of m vertices:
///  - cross edges i -- ((i +- 1) mod m) + m
///  - each layer is a cycle (steps of 1) with chords at distance 2
Graph build_ladder_base(std::size_t m);
/// Cross edges i -- ((i + s +- 1) mod m) + m only.
Graph build_shifted_cross(const LadderParams& p);
/// Union of the two; throws OverlapDetected if they share an edge.
Graph build_ladder_family(const LadderParams& p);

Graph build_g_prime();         // ladder base with m = 11: 22 vertices, 66 edges
Graph build_g_double_prime();  // shifted cross edges with m = 11, s = 6: 22 edges
Graph build_g();               // G' ∪ G'': 88 edges

using DiagonalSet = std::set<VertexPair>;

/// Diagonals i -- ((i + o) mod m) + m for offsets o in {0, +-2} (first set) and {s, s +- 2} (second).
std::pair<DiagonalSet, DiagonalSet> expected_diagonal_sets(const LadderParams& p = {});

/// K_{a,b} with parts [0, a) and [a, a + b).
Graph build_complete_bipartite(std::size_t a, std::size_t b);

/// Copy of g with one edge added (throws DuplicateEdge) or removed (throws InvalidParams).
Graph with_edge(const Graph& g, VertexPair e);
Graph without_edge(const Graph& g, VertexPair e);

}  // namespace sqperc
