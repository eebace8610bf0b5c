#include "sqperc/constructions.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "sqperc/error.hpp"

namespace sqperc {
namespace {

Vertex top(std::size_t i, std::size_t m) { return static_cast<Vertex>(i % m); }
Vertex bottom(std::size_t i, std::size_t m) { return static_cast<Vertex>(m + i % m); }

void add_unique(GraphBuilder& b, Vertex u, Vertex v) {
  if (!b.has_edge(u, v)) b.add_edge(u, v);
}

}  // namespace

void validate(const LadderParams& p) {
  if (p.m < 4 || p.s == 0 || p.s >= p.m)
    throw Error(ErrorKind::InvalidParams,
                "ladder needs m >= 4 and 0 < s < m (m=" + std::to_string(p.m) + ", s=" + std::to_string(p.s) + ")");
}

Graph build_ladder_base(std::size_t m) {
  validate({m, 1});
  GraphBuilder b(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    add_unique(b, top(i, m), bottom(i + 1, m));
    add_unique(b, top(i, m), bottom(i + m - 1, m));
    for (std::size_t step : {std::size_t{1}, std::size_t{2}}) {
      add_unique(b, top(i, m), top(i + step, m));
      add_unique(b, bottom(i, m), bottom(i + step, m));
    }
  }
  return std::move(b).build();
}

Graph build_shifted_cross(const LadderParams& p) {
  validate(p);
  GraphBuilder b(2 * p.m);
  for (std::size_t i = 0; i < p.m; ++i) {
    add_unique(b, top(i, p.m), bottom(i + p.s + 1, p.m));
    add_unique(b, top(i, p.m), bottom(i + p.s + p.m - 1, p.m));
  }
  return std::move(b).build();
}

Graph build_ladder_family(const LadderParams& p) {
  validate(p);
  const Graph base = build_ladder_base(p.m);
  const Graph shifted = build_shifted_cross(p);
  GraphBuilder b(2 * p.m);
  for (const auto& e : base.edges()) b.add_edge_unchecked(e.a, e.b);
  for (const auto& e : shifted.edges()) {
    if (b.has_edge(e.a, e.b))
      throw Error(ErrorKind::OverlapDetected,
                  "edge (" + std::to_string(e.a) + "," + std::to_string(e.b) + ") lies in both edge sets");
    b.add_edge_unchecked(e.a, e.b);
  }
  return std::move(b).build();
}

Graph build_g_prime() { return build_ladder_base(11); }
Graph build_g_double_prime() { return build_shifted_cross({11, 6}); }
Graph build_g() { return build_ladder_family({11, 6}); }

std::pair<DiagonalSet, DiagonalSet> expected_diagonal_sets(const LadderParams& p) {
  validate(p);
  const std::size_t m = p.m;
  DiagonalSet first, second;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t o : {std::size_t{0}, std::size_t{2}, m - 2}) first.insert({top(i, m), bottom(i + o, m)});
    for (std::size_t o : {p.s, p.s + 2, p.s + m - 2}) second.insert({top(i, m), bottom(i + o, m)});
  }
  return {first, second};
}

Graph build_complete_bipartite(std::size_t a, std::size_t b) {
  if (a == 0 || b == 0) throw Error(ErrorKind::InvalidParams, "both parts must be non-empty");
  GraphBuilder builder(a + b);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = a; j < a + b; ++j) builder.add_edge_unchecked(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return std::move(builder).build();
}

Graph with_edge(const Graph& g, VertexPair e) {
  auto edges = g.edges();
  edges.push_back(e);
  return Graph(g.n(), edges);
}

Graph without_edge(const Graph& g, VertexPair e) {
  auto edges = g.edges();
  const auto it = std::find(edges.begin(), edges.end(), e);
  if (it == edges.end())
    throw Error(ErrorKind::InvalidParams, "(" + std::to_string(e.a) + "," + std::to_string(e.b) + ") is not an edge");
  edges.erase(it);
  return Graph(g.n(), edges);
}

}  // namespace sqperc
