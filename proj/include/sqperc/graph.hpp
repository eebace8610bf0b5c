#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "sqperc/bitset.hpp"

namespace sqperc {

using Vertex = std::uint32_t;
using PairIndex = std::uint64_t;

/// Unordered vertex pair stored with a < b.
struct VertexPair {
  Vertex a = 0;
  Vertex b = 0;

  friend constexpr auto operator<=>(const VertexPair&, const VertexPair&) = default;
};

/// Orders the endpoints; throws SelfLoop when u == v.
VertexPair make_pair(Vertex u, Vertex v);

constexpr PairIndex pair_count(std::size_t n) { return static_cast<PairIndex>(n) * (n == 0 ? 0 : n - 1) / 2; }

/// Lexicographic rank of (a, b) among all pairs of [0, n).
PairIndex pair_index(VertexPair p, std::size_t n);
VertexPair pair_of_index(PairIndex index, std::size_t n);

// Unchecked rank, used in hot loops where a < b < n already holds.
constexpr PairIndex pair_index_unchecked(Vertex a, Vertex b, std::size_t n) {
  const PairIndex ua = a;
  return ua * (2 * static_cast<PairIndex>(n) - ua - 1) / 2 + (b - a - 1);
}

/// Immutable undirected simple graph on vertices 0..n-1 with dense bit rows.
class Graph {
 public:
  Graph() = default;
  /// Throws OutOfRange, SelfLoop or DuplicateEdge.
  Graph(std::size_t n, std::span<const VertexPair> edges);

  std::size_t n() const noexcept { return n_; }
  std::uint64_t m() const noexcept { return m_; }
  std::size_t words_per_row() const noexcept { return words_; }

  bool adjacent(Vertex u, Vertex v) const noexcept {
    return (adj_[static_cast<std::size_t>(u) * words_ + v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  std::span<const Word> row(Vertex v) const noexcept {
    return {adj_.data() + static_cast<std::size_t>(v) * words_, words_};
  }
  std::size_t degree(Vertex v) const noexcept { return popcount(row(v)); }

  /// Edges sorted by pair index.
  std::vector<VertexPair> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  friend class GraphBuilder;

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::uint64_t m_ = 0;
  std::vector<Word> adj_;
};

/// Incremental construction; the only way to produce a Graph besides the edge-list constructor.
class GraphBuilder {
 public:
  explicit GraphBuilder(std::size_t n);

  /// Throws OutOfRange, SelfLoop or DuplicateEdge.
  void add_edge(Vertex u, Vertex v);
  // No validation; caller guarantees u != v, both < n, and the pair is new.
  void add_edge_unchecked(Vertex u, Vertex v) noexcept;
  bool has_edge(Vertex u, Vertex v) const noexcept;

  Graph build() &&;

 private:
  Graph g_;
};

Graph complement(const Graph& g);

/// Vertices outside s adjacent to every vertex of s. Throws EmptyQuerySet, OutOfRange.
Bitset common_neighbors(const Graph& g, std::span<const Vertex> s);

/// Non-edges sorted by pair index.
std::vector<VertexPair> non_edges(const Graph& g);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // original[i] is the vertex of g mapped to i
};

/// Throws OutOfRange, Duplicate.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s);

/// Number of edges of g with both endpoints in s.
std::uint64_t edges_within(const Graph& g, const Bitset& s);

}  // namespace sqperc
