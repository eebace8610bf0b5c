#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include "doctest.h"
#include "sqperc/error.hpp"
#include "sqperc/graph.hpp"

namespace test {

inline sqperc::Graph make_graph(std::size_t n, std::initializer_list<std::pair<int, int>> edges) {
  sqperc::GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(static_cast<sqperc::Vertex>(u), static_cast<sqperc::Vertex>(v));
  return std::move(b).build();
}

inline sqperc::Graph cycle(std::size_t n) {
  sqperc::GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    b.add_edge(static_cast<sqperc::Vertex>(i), static_cast<sqperc::Vertex>((i + 1) % n));
  return std::move(b).build();
}

inline sqperc::Graph complete(std::size_t n) {
  sqperc::GraphBuilder b(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) b.add_edge(static_cast<sqperc::Vertex>(i), static_cast<sqperc::Vertex>(j));
  return std::move(b).build();
}

// Two vertex-disjoint 4-cycles: 0-1-2-3 and 4-5-6-7.
inline sqperc::Graph two_c4() {
  return make_graph(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}});
}

inline std::string data_path(const std::string& name) { return std::string(SQPERC_TEST_DATA) + "/" + name; }

inline sqperc::VertexPair vp(int a, int b) {
  return {static_cast<sqperc::Vertex>(a), static_cast<sqperc::Vertex>(b)};
}

// Kind of the Error thrown by f; fails the test when nothing is thrown.
inline sqperc::ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const sqperc::Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return sqperc::ErrorKind::Io;
}

}  // namespace test
