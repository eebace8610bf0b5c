#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "sqperc/graph.hpp"

namespace sqperc {

/// An induced 4-cycle, identified by its two diagonals (both non-edges; all four cross pairs are edges).
struct InducedSquare {
  std::array<Vertex, 4> vertices{};  // sorted
  VertexPair diag1;                  // pair_index(diag1) < pair_index(diag2)
  VertexPair diag2;

  static InducedSquare from_diagonals(VertexPair f, VertexPair g);

  bool contains(Vertex v) const noexcept {
    return v == vertices[0] || v == vertices[1] || v == vertices[2] || v == vertices[3];
  }
  friend bool operator==(const InducedSquare&, const InducedSquare&) = default;
  friend auto operator<=>(const InducedSquare& x, const InducedSquare& y) {
    return std::tie(x.diag1, x.diag2) <=> std::tie(y.diag1, y.diag2);
  }
};

/// Visits every induced square exactly once as visit(f, f2) with pair_index(f) < pair_index(f2).
///
/// For each non-edge f = {a, b} the common neighbourhood N(a) ∩ N(b) is formed word-parallel,
/// restricted to vertices above a; every non-edge {c, d} inside it closes a square. The smaller
/// diagonal of a square is the one holding its minimum vertex, so the restriction to c > a is
/// exactly the dedup rule. Cost is the sum over non-edges of C(|N(a) ∩ N(b)|, 2).
template <class Visit>
void for_each_square(const Graph& g, Visit&& visit) {
  const std::size_t n = g.n();
  const std::size_t words = g.words_per_row();
  std::vector<Vertex> common;
  common.reserve(n);
  for (Vertex a = 0; a + 3 < n; ++a) {
    const auto ra = g.row(a);
    const std::size_t first = (a + 1) / kWordBits;
    const Word above_a = ~Word{0} << ((a + 1) % kWordBits);
    for (std::size_t wb = first; wb < words; ++wb) {
      Word cand = ~ra[wb];
      if (wb == first) cand &= above_a;
      if (wb + 1 == words && n % kWordBits != 0) cand &= (Word{1} << (n % kWordBits)) - 1;
      while (cand != 0) {
        const auto b = static_cast<Vertex>(wb * kWordBits + static_cast<std::size_t>(std::countr_zero(cand)));
        cand &= cand - 1;
        const auto rb = g.row(b);
        common.clear();
        for (std::size_t w = first; w < words; ++w) {
          Word x = ra[w] & rb[w];
          if (w == first) x &= above_a;
          while (x != 0) {
            common.push_back(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x))));
            x &= x - 1;
          }
        }
        const std::size_t k = common.size();
        for (std::size_t i = 0; i + 1 < k; ++i) {
          const Vertex c = common[i];
          const Word* rc = g.row(c).data();
          for (std::size_t j = i + 1; j < k; ++j) {
            const Vertex d = common[j];
            if (((rc[d / kWordBits] >> (d % kWordBits)) & 1U) == 0) visit(VertexPair{a, b}, VertexPair{c, d});
          }
        }
      }
    }
  }
}

/// Fast enumeration, sorted by (diag1, diag2).
std::vector<InducedSquare> enumerate_squares(const Graph& g);
std::uint64_t count_squares(const Graph& g);

/// O(n^4) scan of all 4-subsets. Throws TooLarge when n > max_n.
std::vector<InducedSquare> enumerate_squares_bruteforce(const Graph& g, std::size_t max_n = 64);

/// Non-edges f2 such that f ∪ f2 induces a square, sorted. Throws NotANonEdge, OutOfRange.
std::vector<VertexPair> t1_neighbors(const Graph& g, VertexPair f);

/// T1: one vertex per non-edge of the base graph (indexed by rank in pair-index order),
/// adjacent when the two non-edges are the diagonals of an induced square.
class T1View {
 public:
  static constexpr std::uint64_t kDefaultEdgeCap = 20'000'000;

  /// Throws EdgeCapExceeded when materializing more than edge_cap edges.
  T1View(Graph base, bool materialize, std::uint64_t edge_cap = kDefaultEdgeCap);

  const Graph& base() const noexcept { return base_; }
  std::size_t vertex_count() const noexcept { return pairs_.size(); }
  const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }
  VertexPair pair(std::size_t i) const { return pairs_.at(i); }
  std::optional<std::size_t> index_of(VertexPair p) const;

  bool materialized() const noexcept { return materialized_; }
  /// Sorted neighbour ranks; computed on demand unless materialized.
  std::vector<std::uint32_t> neighbors(std::size_t i) const;
  std::size_t degree(std::size_t i) const;
  /// Equals the number of induced squares of the base graph.
  std::uint64_t edge_count() const;

 private:
  Graph base_;
  std::vector<VertexPair> pairs_;
  bool materialized_ = false;
  std::uint64_t edge_count_ = 0;
  std::vector<std::vector<std::uint32_t>> adjacency_;
};

T1View build_t1(const Graph& g, bool materialize, std::uint64_t edge_cap = T1View::kDefaultEdgeCap);

/// S: one vertex per induced square, adjacent when two squares share a diagonal (the line graph of T1).
struct SGraph {
  std::vector<InducedSquare> squares;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // i < j, sorted
};

inline constexpr std::uint64_t kDefaultSquareCap = 2'000'000;

/// Throws SquareCapExceeded.
SGraph build_s(const Graph& g, std::uint64_t square_cap = kDefaultSquareCap);

}  // namespace sqperc
