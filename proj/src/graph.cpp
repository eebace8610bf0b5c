#include "sqperc/graph.hpp"

#include <cmath>
#include <string>

#include "sqperc/error.hpp"

namespace sqperc {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutOfRange: return "OutOfRange";
    case ErrorKind::SelfLoop: return "SelfLoop";
    case ErrorKind::DuplicateEdge: return "DuplicateEdge";
    case ErrorKind::Duplicate: return "Duplicate";
    case ErrorKind::EmptyQuerySet: return "EmptyQuerySet";
    case ErrorKind::InvalidProbability: return "InvalidProbability";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotANonEdge: return "NotANonEdge";
    case ErrorKind::EdgeCapExceeded: return "EdgeCapExceeded";
    case ErrorKind::SquareCapExceeded: return "SquareCapExceeded";
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::CompleteGraph: return "CompleteGraph";
    case ErrorKind::InvalidParams: return "InvalidParams";
    case ErrorKind::OverlapDetected: return "OverlapDetected";
    case ErrorKind::BracketInvalid: return "BracketInvalid";
    case ErrorKind::Parse: return "Parse";
    case ErrorKind::Io: return "Io";
  }
  return "Unknown";
}

VertexPair make_pair(Vertex u, Vertex v) {
  if (u == v) throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(u));
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

PairIndex pair_index(VertexPair p, std::size_t n) {
  if (!(p.a < p.b) || p.b >= n)
    throw Error(ErrorKind::OutOfRange,
                "pair (" + std::to_string(p.a) + "," + std::to_string(p.b) + ") for n=" + std::to_string(n));
  return pair_index_unchecked(p.a, p.b, n);
}

VertexPair pair_of_index(PairIndex index, std::size_t n) {
  if (index >= pair_count(n))
    throw Error(ErrorKind::OutOfRange, "pair index " + std::to_string(index) + " for n=" + std::to_string(n));
  // Row a starts at a*(2n-a-1)/2. Estimate a from the quadratic, then correct rounding.
  const double nn = static_cast<double>(n);
  const double disc = (2 * nn - 1) * (2 * nn - 1) - 8.0 * static_cast<double>(index);
  auto a = static_cast<PairIndex>(std::floor(((2 * nn - 1) - std::sqrt(disc > 0 ? disc : 0)) / 2));
  auto row_start = [n](PairIndex r) { return r * (2 * static_cast<PairIndex>(n) - r - 1) / 2; };
  while (a > 0 && row_start(a) > index) --a;
  while (a + 1 < n && row_start(a + 1) <= index) ++a;
  const PairIndex b = a + 1 + (index - row_start(a));
  return {static_cast<Vertex>(a), static_cast<Vertex>(b)};
}

GraphBuilder::GraphBuilder(std::size_t n) {
  g_.n_ = n;
  g_.words_ = words_for(n);
  g_.adj_.assign(n * g_.words_, 0);
}

bool GraphBuilder::has_edge(Vertex u, Vertex v) const noexcept { return g_.adjacent(u, v); }

void GraphBuilder::add_edge_unchecked(Vertex u, Vertex v) noexcept {
  const std::size_t w = g_.words_;
  g_.adj_[static_cast<std::size_t>(u) * w + v / kWordBits] |= Word{1} << (v % kWordBits);
  g_.adj_[static_cast<std::size_t>(v) * w + u / kWordBits] |= Word{1} << (u % kWordBits);
  ++g_.m_;
}

void GraphBuilder::add_edge(Vertex u, Vertex v) {
  if (u >= g_.n_ || v >= g_.n_)
    throw Error(ErrorKind::OutOfRange, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                           ") with n=" + std::to_string(g_.n_));
  if (u == v) throw Error(ErrorKind::SelfLoop, "vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw Error(ErrorKind::DuplicateEdge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
  add_edge_unchecked(u, v);
}

Graph GraphBuilder::build() && { return std::move(g_); }

Graph::Graph(std::size_t n, std::span<const VertexPair> edges) {
  GraphBuilder b(n);
  for (const auto& e : edges) b.add_edge(e.a, e.b);
  *this = std::move(b).build();
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    const auto r = row(u);
    for_each_bit(r, [&](std::size_t v) {
      if (v > u) out.push_back({u, static_cast<Vertex>(v)});
    });
  }
  return out;
}

Graph complement(const Graph& g) {
  const auto n = static_cast<Vertex>(g.n());
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) b.add_edge_unchecked(u, v);
  return std::move(b).build();
}

Bitset common_neighbors(const Graph& g, std::span<const Vertex> s) {
  if (s.empty()) throw Error(ErrorKind::EmptyQuerySet, "common_neighbors of an empty set");
  Bitset out(g.n());
  auto words = out.words();
  for (std::size_t i = 0; i < words.size(); ++i) words[i] = ~Word{0};
  if (g.n() % kWordBits != 0 && !words.empty()) words.back() = (Word{1} << (g.n() % kWordBits)) - 1;
  for (Vertex v : s) {
    if (v >= g.n()) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v));
    const auto r = g.row(v);
    for (std::size_t i = 0; i < words.size(); ++i) words[i] &= r[i];
  }
  for (Vertex v : s) out.reset(v);
  return out;
}

std::vector<VertexPair> non_edges(const Graph& g) {
  std::vector<VertexPair> out;
  out.reserve(pair_count(g.n()) - g.m());
  const auto n = static_cast<Vertex>(g.n());
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) out.push_back({u, v});
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> s) {
  Bitset seen(g.n());
  for (Vertex v : s) {
    if (v >= g.n()) throw Error(ErrorKind::OutOfRange, "vertex " + std::to_string(v));
    if (seen.test(v)) throw Error(ErrorKind::Duplicate, "vertex " + std::to_string(v));
    seen.set(v);
  }
  GraphBuilder b(s.size());
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (g.adjacent(s[i], s[j])) b.add_edge_unchecked(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return {std::move(b).build(), std::vector<Vertex>(s.begin(), s.end())};
}

std::uint64_t edges_within(const Graph& g, const Bitset& s) {
  std::uint64_t twice = 0;
  const auto sw = s.words();
  s.for_each([&](std::size_t v) {
    const auto r = g.row(static_cast<Vertex>(v));
    for (std::size_t i = 0; i < sw.size(); ++i) twice += static_cast<std::uint64_t>(std::popcount(r[i] & sw[i]));
  });
  return twice / 2;
}

}  // namespace sqperc
