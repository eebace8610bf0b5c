#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sqperc/analysis.hpp"
#include "sqperc/constructions.hpp"
#include "sqperc/graph.hpp"

namespace sqperc {

struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Outcome of checking a construction's claims, with the decomposition as a printable certificate.
struct ConstructionVerdict {
  std::string family;
  std::vector<Check> checks;
  std::string certificate;  // component id -> diagonals, one line per non-trivial component

  bool passed() const;
  const Check* first_failure() const;
};

enum class Family { GPrime, G, Ladder, BipartiteDemo };

std::optional<Family> parse_family(const std::string& name);

/// Ladder params are used only for Family::Ladder; min_full_support is the claimed lower bound
/// on full-support components there.
ConstructionVerdict verify_construction(Family family, const LadderParams& ladder = {22, 12},
                                        std::size_t min_full_support = 3);

/// Renders the non-trivial components of d as "component <id> (size k, support s): a-b c-d ...".
std::string describe_components(const ComponentDecomposition& d);

/// One discrepancy between a fast routine and its oracle.
struct OracleFailure {
  std::size_t instance = 0;
  std::string check;
  std::string detail;
  Graph graph;
};

struct OracleSummary {
  std::size_t instances = 0;
  std::uint64_t squares_checked = 0;
  std::optional<OracleFailure> failure;  // first discrepancy; the run stops there
};

/// Checks one graph: fast vs brute-force squares, union-find vs BFS components,
/// bonded definition vs characterization, and the line-graph edge law for S.
std::optional<OracleFailure> check_oracles(const Graph& g, std::size_t instance = 0);

/// Random instances: instance i has n uniform in [2, n_max] and p = 0.1 * (1 + i mod 9).
/// Throws InvalidParams when n_max is outside [2, 64] or trials is 0.
OracleSummary run_oracle_suite(std::size_t n_max, std::size_t trials, std::uint64_t seed);

}  // namespace sqperc
