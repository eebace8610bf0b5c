#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "sqperc/graph.hpp"

namespace sqperc {

// Edge-list text format:
//   line 1:   "n m"
//   m lines:  "u v" with u < v, sorted by pair index
// Lines starting with '#' are comments. Writing then reading is byte-exact.

void write_edge_list(std::ostream& out, const Graph& g);
std::string to_edge_list(const Graph& g);

/// Throws Error(Parse) with the offending line number.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);

void save_edge_list(const std::filesystem::path& path, const Graph& g);
Graph load_edge_list(const std::filesystem::path& path);

}  // namespace sqperc
