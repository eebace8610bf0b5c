#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "sqperc/bitset.hpp"
#include "sqperc/graph.hpp"
#include "sqperc/square_graph.hpp"

namespace sqperc {

/// Connected components of T1 ("square components"), built by union-find over non-edges
/// while scanning squares, so T1 is never materialized.
///
/// Component ids are assigned in order of each component's smallest non-edge. Isolated
/// T1-vertices (non-edges lying in no square) are size-1 components.
struct ComponentDecomposition {
  std::size_t n = 0;
  std::uint64_t num_edges = 0;
  std::uint64_t num_squares = 0;
  std::vector<VertexPair> non_edges;  // T1 vertices in pair-index order
  std::vector<std::uint32_t> labels;  // labels[i] is the component of non_edges[i]
  std::vector<std::uint64_t> component_sizes;
  std::vector<Bitset> supports;  // supp(C); left empty (size 0) for size-1 components
  std::uint64_t isolated_count = 0;
  std::uint64_t largest = 0;
  std::uint64_t second_largest = 0;

  std::size_t num_components() const noexcept { return component_sizes.size(); }
  std::size_t num_nontrivial() const noexcept;
  std::vector<std::uint32_t> nontrivial_ids() const;
  std::vector<std::uint32_t> full_support_ids() const;
  /// Non-edges of component id, sorted.
  std::vector<VertexPair> members(std::uint32_t id) const;
  std::uint64_t largest_nontrivial() const;
  std::uint64_t second_largest_nontrivial() const;
};

ComponentDecomposition t1_components(const Graph& g);

/// connected is vacuously true when degenerate (at most one vertex in the graph checked).
struct Connectivity {
  bool connected = true;
  bool degenerate = false;
};

Connectivity t1_connectivity(const ComponentDecomposition& d);
/// S is connected iff at most one component of T1 holds a square.
Connectivity s_connectivity(const ComponentDecomposition& d);

/// Throws CompleteGraph when T1 has no vertices.
bool is_t1_connected(const Graph& g);
bool is_s_connected(const Graph& g);

/// Non-edges whose endpoints have no common neighbour; each is an isolated T1-vertex.
std::uint64_t count_no_common_neighbour(const Graph& g);

/// Second-largest component size, isolated vertices counting as 1; 0 with fewer than two components.
std::uint64_t second_largest_component_size(const ComponentDecomposition& d);

inline constexpr std::size_t kDefaultDiameterVertexCap = 30'000;

/// Checks every pair of T1-vertices is adjacent or has a common neighbour, using bit rows.
/// Throws CompleteGraph, CapExceeded.
bool t1_diameter_at_most_two(const Graph& g, std::size_t vertex_cap = kDefaultDiameterVertexCap);

/// Exact diameter by BFS from every vertex; nullopt when T1 is disconnected.
/// Throws CompleteGraph, CapExceeded.
std::optional<std::uint32_t> t1_diameter(const Graph& g, std::size_t vertex_cap = 5'000);

/// Some other square of all_squares shares exactly three vertices with sq.
bool is_bonded_definition(const InducedSquare& sq, std::span<const InducedSquare> all_squares);
/// Some vertex outside sq is adjacent to both endpoints of exactly one diagonal.
bool is_bonded_characterization(const Graph& g, const InducedSquare& sq);

struct BondedReport {
  std::uint64_t total_squares = 0;
  std::vector<InducedSquare> non_bonded;
  bool all_bonded = true;
  bool vacuous = false;  // no squares at all
};

BondedReport bonded_report(const Graph& g);
std::uint64_t count_non_bonded(const Graph& g);

/// Component ids C with e(G[supp C]) < 2|supp C| - 4. Expected empty.
std::vector<std::uint32_t> check_extremal_bound(const Graph& g, const ComponentDecomposition& d);
/// Component ids violating |C| >= ceil(|supp C| / 2) or |supp C| >= 4. Expected empty.
std::vector<std::uint32_t> check_support_bounds(const ComponentDecomposition& d);

struct AnalysisReport {
  static constexpr int kSchemaVersion = 1;

  std::size_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t num_squares = 0;
  std::uint64_t num_components = 0;
  std::uint64_t num_nontrivial = 0;
  std::uint64_t largest = 0;
  std::uint64_t second_largest = 0;
  std::uint64_t isolated_count = 0;
  std::vector<std::uint32_t> full_support_component_ids;
  bool t1_connected = true;
  bool t1_empty = false;
  bool s_connected = true;
  bool s_degenerate = false;
  bool all_bonded = true;
  std::uint64_t non_bonded_count = 0;
  std::vector<std::uint32_t> extremal_violations;
};

AnalysisReport analyze(const Graph& g);
nlohmann::json to_json(const AnalysisReport& r);
std::string to_text(const AnalysisReport& r);

}  // namespace sqperc
