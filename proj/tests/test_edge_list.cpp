#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "sqperc/constructions.hpp"
#include "sqperc/edge_list.hpp"
#include "sqperc/sampler.hpp"

using namespace sqperc;
using test::kind_of;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string parse_error(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Parse);
    return e.what();
  }
  FAIL("parsed: " << text);
  return {};
}

}  // namespace

TEST_CASE("edge-list text") {
  CHECK(to_edge_list(test::make_graph(4, {})) == "4 0\n");
  CHECK(to_edge_list(test::cycle(4)) == "4 4\n0 1\n0 3\n1 2\n2 3\n");
  CHECK(parse_edge_list("4 4\n0 1\n0 3\n1 2\n2 3\n") == test::cycle(4));
  CHECK(parse_edge_list("# a comment\n4 1\n# another\n1 2\n\n") == test::make_graph(4, {{1, 2}}));
  CHECK(parse_edge_list("0 0\n").n() == 0);
}

TEST_CASE("round trip is byte exact") {
  for (std::uint64_t t = 0; t < 10; ++t) {
    const Graph g = sample_gnp(3 + t * 5, 0.3, derive_trial_seed(8, t));
    const std::string text = to_edge_list(g);
    CHECK(parse_edge_list(text) == g);
    CHECK(to_edge_list(parse_edge_list(text)) == text);
  }
}

TEST_CASE("golden construction files") {
  CHECK(to_edge_list(build_g_prime()) == slurp(test::data_path("g_prime.txt")));
  CHECK(to_edge_list(build_g_double_prime()) == slurp(test::data_path("g_double_prime.txt")));
  CHECK(to_edge_list(build_g()) == slurp(test::data_path("g.txt")));
  CHECK(to_edge_list(build_complete_bipartite(2, 4)) == slurp(test::data_path("k24.txt")));
  CHECK(load_edge_list(test::data_path("c4.txt")) == test::cycle(4));
}

TEST_CASE("file save and load") {
  const auto path = std::filesystem::temp_directory_path() / "sqperc_edge_list_test.txt";
  const Graph g = sample_gnp(30, 0.5, derive_trial_seed(1, 0));
  save_edge_list(path, g);
  CHECK(load_edge_list(path) == g);
  std::filesystem::remove(path);
  CHECK(kind_of([&] { load_edge_list(path); }) == ErrorKind::Io);
}

TEST_CASE("malformed input names the line") {
  CHECK(parse_error("").find("header") != std::string::npos);
  CHECK(parse_error("4 x\n").find("line 1") != std::string::npos);
  CHECK(parse_error("4 7\n").find("line 1") != std::string::npos);  // more edges than pairs
  CHECK(parse_error("4 1\n1 0\n").find("line 2") != std::string::npos);
  CHECK(parse_error("4 1\n1 1\n").find("line 2") != std::string::npos);
  CHECK(parse_error("4 1\n0 4\n").find("line 2") != std::string::npos);
  CHECK(parse_error("4 2\n0 2\n0 1\n").find("line 3") != std::string::npos);  // unsorted
  CHECK(parse_error("4 2\n0 1\n0 1\n").find("line 3") != std::string::npos);  // duplicate
  CHECK(parse_error("4 2\n0 1\n").find("declared 2") != std::string::npos);
  CHECK(parse_error("4 1\n0 1\n0 2\n").find("line 3") != std::string::npos);
  CHECK(parse_error("4 1\n0 1 2\n").find("line 2") != std::string::npos);
}
