#include <algorithm>
#include <set>

#include "doctest.h"
#include "helpers.hpp"
#include "sqperc/constructions.hpp"
#include "sqperc/sampler.hpp"
#include "sqperc/square_graph.hpp"

using namespace sqperc;
using test::kind_of;
using test::vp;

namespace {

// K_{2,3}: x0 = 0, x1 = 1, y = 2, 3, 4.
Graph k23() { return build_complete_bipartite(2, 3); }

// Definition-level oracle: f ~ g iff disjoint non-edges whose four cross pairs are all edges.
bool t1_adjacent_oracle(const Graph& g, VertexPair f, VertexPair h) {
  if (g.adjacent(f.a, f.b) || g.adjacent(h.a, h.b)) return false;
  if (f.a == h.a || f.a == h.b || f.b == h.a || f.b == h.b) return false;
  return g.adjacent(f.a, h.a) && g.adjacent(f.a, h.b) && g.adjacent(f.b, h.a) && g.adjacent(f.b, h.b);
}

}  // namespace

TEST_CASE("squares of small graphs") {
  const auto c4 = enumerate_squares(test::cycle(4));
  REQUIRE(c4.size() == 1);
  CHECK(c4[0].diag1 == vp(0, 2));
  CHECK(c4[0].diag2 == vp(1, 3));
  CHECK(c4[0].vertices == std::array<Vertex, 4>{0, 1, 2, 3});

  CHECK(enumerate_squares(test::complete(4)).empty());
  CHECK(enumerate_squares(test::cycle(5)).empty());
  CHECK(count_squares(k23()) == 3);
  CHECK(enumerate_squares(test::make_graph(10, {})).empty());
  CHECK(enumerate_squares_bruteforce(test::make_graph(10, {})).empty());
  CHECK(count_squares(test::two_c4()) == 2);
  // K_{3,3}: choose 2 from each side.
  CHECK(count_squares(build_complete_bipartite(3, 3)) == 9);
}

TEST_CASE("square from diagonals") {
  const auto sq = InducedSquare::from_diagonals(vp(1, 3), vp(0, 2));
  CHECK(sq.diag1 == vp(0, 2));
  CHECK(sq.diag2 == vp(1, 3));
  CHECK(sq.contains(3));
  CHECK_FALSE(sq.contains(4));
}

TEST_CASE("fast enumeration matches brute force") {
  for (std::uint64_t t = 0; t < 150; ++t) {
    const std::size_t n = 4 + t % 27;
    const double p = 0.05 + 0.06 * static_cast<double>(t % 15);
    const Graph g = sample_gnp(n, p, derive_trial_seed(31, t));
    const auto fast = enumerate_squares(g);
    REQUIRE(fast == enumerate_squares_bruteforce(g));
    REQUIRE(count_squares(g) == fast.size());
    REQUIRE(std::is_sorted(fast.begin(), fast.end()));
  }
  // Rows spanning several words.
  const Graph g = sample_gnp(64, 0.5, derive_trial_seed(1, 1));
  CHECK(enumerate_squares(g) == enumerate_squares_bruteforce(g));
  CHECK(kind_of([] { enumerate_squares_bruteforce(test::make_graph(70, {})); }) == ErrorKind::TooLarge);
}

TEST_CASE("squares of the construction graphs") {
  const Graph g = build_g();
  CHECK(enumerate_squares(g) == enumerate_squares_bruteforce(g));
  const Graph ladder = build_ladder_family({22, 12});
  CHECK(enumerate_squares(ladder) == enumerate_squares_bruteforce(ladder));
}

TEST_CASE("T1 neighbours") {
  CHECK(t1_neighbors(test::cycle(4), vp(0, 2)) == std::vector<VertexPair>{vp(1, 3)});
  CHECK(t1_neighbors(k23(), vp(0, 1)) == std::vector<VertexPair>{vp(2, 3), vp(2, 4), vp(3, 4)});
  for (const auto& f : non_edges(test::cycle(5))) CHECK(t1_neighbors(test::cycle(5), f).empty());
  CHECK(kind_of([] { t1_neighbors(test::cycle(4), vp(0, 1)); }) == ErrorKind::NotANonEdge);
  CHECK(kind_of([] { t1_neighbors(test::cycle(4), vp(0, 9)); }) == ErrorKind::OutOfRange);

  SUBCASE("agrees with the definition") {
    for (std::uint64_t t = 0; t < 30; ++t) {
      const Graph g = sample_gnp(14, 0.5, derive_trial_seed(2, t));
      const auto ne = non_edges(g);
      for (const auto& f : ne) {
        std::vector<VertexPair> expect;
        for (const auto& h : ne)
          if (t1_adjacent_oracle(g, f, h)) expect.push_back(h);
        REQUIRE(t1_neighbors(g, f) == expect);
      }
    }
  }
}

TEST_CASE("T1 view") {
  const Graph g = k23();
  for (bool materialize : {false, true}) {
    const T1View t1(g, materialize);
    CHECK(t1.vertex_count() == 4);  // 01, 23, 24, 34
    CHECK(t1.edge_count() == 3);
    const auto i01 = t1.index_of(vp(0, 1));
    REQUIRE(i01);
    CHECK(t1.degree(*i01) == 3);
    CHECK_FALSE(t1.index_of(vp(0, 2)));
    std::uint64_t deg_sum = 0;
    for (std::size_t i = 0; i < t1.vertex_count(); ++i) deg_sum += t1.degree(i);
    CHECK(deg_sum == 2 * t1.edge_count());
  }
  CHECK(kind_of([] { T1View(build_complete_bipartite(10, 10), true, 5); }) == ErrorKind::EdgeCapExceeded);
}

TEST_CASE("S graph") {
  const SGraph c4 = build_s(test::cycle(4));
  CHECK(c4.squares.size() == 1);
  CHECK(c4.edges.empty());

  const SGraph tri = build_s(k23());
  CHECK(tri.squares.size() == 3);
  CHECK(tri.edges == std::vector<std::pair<std::uint32_t, std::uint32_t>>{{0, 1}, {0, 2}, {1, 2}});

  const SGraph two = build_s(test::two_c4());
  CHECK(two.squares.size() == 2);
  CHECK(two.edges.empty());

  CHECK(kind_of([] { build_s(build_complete_bipartite(6, 6), 10); }) == ErrorKind::SquareCapExceeded);
}

TEST_CASE("S is the line graph of T1") {
  for (std::uint64_t t = 0; t < 40; ++t) {
    const Graph g = sample_gnp(6 + t % 20, 0.2 + 0.015 * static_cast<double>(t), derive_trial_seed(4, t));
    const SGraph s = build_s(g);
    const T1View t1(g, true);
    std::uint64_t law = 0;
    for (std::size_t i = 0; i < t1.vertex_count(); ++i) {
      const std::uint64_t d = t1.degree(i);
      law += d * (d == 0 ? 0 : d - 1) / 2;
    }
    REQUIRE(s.edges.size() == law);
    std::set<std::pair<std::uint32_t, std::uint32_t>> expect;
    for (std::uint32_t i = 0; i < s.squares.size(); ++i)
      for (std::uint32_t j = i + 1; j < s.squares.size(); ++j) {
        const auto& x = s.squares[i];
        const auto& y = s.squares[j];
        if (x.diag1 == y.diag1 || x.diag1 == y.diag2 || x.diag2 == y.diag1 || x.diag2 == y.diag2) expect.emplace(i, j);
      }
    REQUIRE(std::set<std::pair<std::uint32_t, std::uint32_t>>(s.edges.begin(), s.edges.end()) == expect);
  }
}
