#include "sqperc/square_graph.hpp"

#include <algorithm>
#include <string>

#include "sqperc/error.hpp"

namespace sqperc {

InducedSquare InducedSquare::from_diagonals(VertexPair f, VertexPair g) {
  if (g < f) std::swap(f, g);
  InducedSquare sq;
  sq.diag1 = f;
  sq.diag2 = g;
  sq.vertices = {f.a, f.b, g.a, g.b};
  std::sort(sq.vertices.begin(), sq.vertices.end());
  return sq;
}

std::vector<InducedSquare> enumerate_squares(const Graph& g) {
  std::vector<InducedSquare> out;
  for_each_square(g, [&](VertexPair f, VertexPair h) { out.push_back(InducedSquare::from_diagonals(f, h)); });
  // Visit order is by (a, b) then (c, d), which is already the canonical order.
  return out;
}

std::uint64_t count_squares(const Graph& g) {
  std::uint64_t count = 0;
  for_each_square(g, [&](VertexPair, VertexPair) { ++count; });
  return count;
}

std::vector<InducedSquare> enumerate_squares_bruteforce(const Graph& g, std::size_t max_n) {
  const std::size_t n = g.n();
  if (n > max_n)
    throw Error(ErrorKind::TooLarge, "brute-force enumeration limited to n <= " + std::to_string(max_n));
  std::vector<InducedSquare> out;
  const auto nv = static_cast<Vertex>(n);
  for (Vertex v0 = 0; v0 < nv; ++v0)
    for (Vertex v1 = v0 + 1; v1 < nv; ++v1)
      for (Vertex v2 = v1 + 1; v2 < nv; ++v2)
        for (Vertex v3 = v2 + 1; v3 < nv; ++v3) {
          const std::array<Vertex, 4> s{v0, v1, v2, v3};
          // Each of the three perfect matchings of the 4-set is a candidate diagonal pair.
          const std::array<std::array<int, 4>, 3> matchings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
          for (const auto& mt : matchings) {
            const VertexPair f{s[mt[0]], s[mt[1]]};
            const VertexPair h{s[mt[2]], s[mt[3]]};
            if (g.adjacent(f.a, f.b) || g.adjacent(h.a, h.b)) continue;
            if (g.adjacent(f.a, h.a) && g.adjacent(f.a, h.b) && g.adjacent(f.b, h.a) && g.adjacent(f.b, h.b))
              out.push_back(InducedSquare::from_diagonals(f, h));
          }
        }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexPair> t1_neighbors(const Graph& g, VertexPair f) {
  if (!(f.a < f.b) || f.b >= g.n())
    throw Error(ErrorKind::OutOfRange, "pair (" + std::to_string(f.a) + "," + std::to_string(f.b) + ")");
  if (g.adjacent(f.a, f.b))
    throw Error(ErrorKind::NotANonEdge, "(" + std::to_string(f.a) + "," + std::to_string(f.b) + ") is an edge");
  const std::array<Vertex, 2> ends{f.a, f.b};
  const Bitset common = common_neighbors(g, ends);
  const auto members = common.to_vector();
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) {
      const auto c = static_cast<Vertex>(members[i]);
      const auto d = static_cast<Vertex>(members[j]);
      if (!g.adjacent(c, d)) out.push_back({c, d});
    }
  return out;
}

T1View::T1View(Graph base, bool materialize, std::uint64_t edge_cap)
    : base_(std::move(base)), pairs_(non_edges(base_)), materialized_(materialize) {
  edge_count_ = count_squares(base_);
  if (!materialize) return;
  if (edge_count_ > edge_cap)
    throw Error(ErrorKind::EdgeCapExceeded,
                std::to_string(edge_count_) + " T1 edges exceed cap " + std::to_string(edge_cap));
  adjacency_.resize(pairs_.size());
  for_each_square(base_, [&](VertexPair f, VertexPair h) {
    const auto i = static_cast<std::uint32_t>(*index_of(f));
    const auto j = static_cast<std::uint32_t>(*index_of(h));
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  });
  for (auto& adj : adjacency_) std::sort(adj.begin(), adj.end());
}

std::optional<std::size_t> T1View::index_of(VertexPair p) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), p);
  if (it == pairs_.end() || *it != p) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

std::vector<std::uint32_t> T1View::neighbors(std::size_t i) const {
  if (materialized_) return adjacency_.at(i);
  std::vector<std::uint32_t> out;
  for (const auto& h : t1_neighbors(base_, pair(i))) out.push_back(static_cast<std::uint32_t>(*index_of(h)));
  return out;
}

std::size_t T1View::degree(std::size_t i) const {
  return materialized_ ? adjacency_.at(i).size() : t1_neighbors(base_, pair(i)).size();
}

std::uint64_t T1View::edge_count() const { return edge_count_; }

T1View build_t1(const Graph& g, bool materialize, std::uint64_t edge_cap) { return T1View(g, materialize, edge_cap); }

SGraph build_s(const Graph& g, std::uint64_t square_cap) {
  const std::uint64_t total = count_squares(g);
  if (total > square_cap)
    throw Error(ErrorKind::SquareCapExceeded,
                std::to_string(total) + " squares exceed cap " + std::to_string(square_cap));
  SGraph s;
  s.squares = enumerate_squares(g);
  // Group squares by diagonal; squares sharing a diagonal form a clique in S.
  std::vector<std::pair<PairIndex, std::uint32_t>> incidence;
  incidence.reserve(2 * s.squares.size());
  for (std::uint32_t i = 0; i < s.squares.size(); ++i) {
    incidence.emplace_back(pair_index_unchecked(s.squares[i].diag1.a, s.squares[i].diag1.b, g.n()), i);
    incidence.emplace_back(pair_index_unchecked(s.squares[i].diag2.a, s.squares[i].diag2.b, g.n()), i);
  }
  std::sort(incidence.begin(), incidence.end());
  for (std::size_t lo = 0; lo < incidence.size();) {
    std::size_t hi = lo;
    while (hi < incidence.size() && incidence[hi].first == incidence[lo].first) ++hi;
    for (std::size_t x = lo; x < hi; ++x)
      for (std::size_t y = x + 1; y < hi; ++y) s.edges.emplace_back(incidence[x].second, incidence[y].second);
    lo = hi;
  }
  // Two distinct squares share at most one diagonal, so no duplicates arise.
  std::sort(s.edges.begin(), s.edges.end());
  return s;
}

}  // namespace sqperc
