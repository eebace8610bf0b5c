#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "json.hpp"
#include "sqperc/analysis.hpp"
#include "sqperc/sampler.hpp"

namespace sqperc {

// Closed forms. Both are evaluated in log space.

/// Expected number of non-edges of G(n,p) with no common neighbour, C(n,2) (1-p) (1-p^2)^(n-2).
/// Each such non-edge is an isolated T1-vertex, so this bounds E[isolated] from below. Requires n >= 2.
double expected_isolated_t1(std::size_t n, double p);
/// Expected number of non-bonded induced squares: C(n,4) 3p^4 (1-p)^2 (1 - 2p^2(1-p^2))^(n-4). Requires n >= 4.
double expected_nonbonded_squares(std::size_t n, double p);
/// c * sqrt(ln n / n); throws OutOfRange when the result leaves [0, 1].
double threshold_p(double c, std::size_t n);

enum class Metric {
  T1Connected,
  SConnected,
  IsolatedT1,
  SecondLargest,
  Largest,
  NumSquares,
  NonBondedCount,
  DiameterAtMostTwo,
  T1Diameter,
  NoCommonNeighbour,
};

inline constexpr Metric kAllMetrics[] = {Metric::T1Connected,   Metric::SConnected,     Metric::IsolatedT1,
                                         Metric::SecondLargest, Metric::Largest,        Metric::NumSquares,
                                         Metric::NonBondedCount, Metric::DiameterAtMostTwo, Metric::T1Diameter,
                                         Metric::NoCommonNeighbour};

std::string_view metric_name(Metric m);    // flag spelling, e.g. "sConnected"
std::string_view metric_column(Metric m);  // CSV column, e.g. "s_connected"
bool is_boolean(Metric m);
std::optional<Metric> parse_metric(std::string_view name);

struct ExplicitP {
  std::vector<double> values;
};
/// p = c * sqrt(ln n / n) for each constant.
struct ScaledC {
  std::vector<double> constants;
};
using PSpec = std::variant<ExplicitP, ScaledC>;

struct Caps {
  std::size_t diameter_vertex_cap = kDefaultDiameterVertexCap;
  std::size_t t1_diameter_vertex_cap = 5'000;
};

struct ExperimentConfig {
  std::size_t n = 0;
  PSpec p_spec = ExplicitP{};
  std::uint64_t trials = 1;
  std::uint64_t master_seed = 0;
  std::vector<Metric> metrics;
  Caps caps;
  unsigned workers = 1;
  bool keep_raw = true;
};

/// Throws InvalidParams / InvalidProbability.
void validate(const ExperimentConfig& config);
/// (p, c) pairs in grid order; c is empty for explicit p.
std::vector<std::pair<double, std::optional<double>>> grid_points(const ExperimentConfig& config);

/// One sampled graph. Columns for metrics that were not requested stay empty.
struct TrialRecord {
  std::size_t n = 0;
  double p = 0;
  std::optional<double> c;
  std::uint64_t trial = 0;
  std::uint64_t seed = 0;  // derived stream key
  std::uint64_t num_edges = 0;
  std::uint64_t num_non_edges = 0;

  std::optional<std::uint64_t> num_squares;
  std::optional<std::uint64_t> num_components;
  std::optional<std::uint64_t> num_nontrivial;
  std::optional<std::uint64_t> largest;
  std::optional<std::uint64_t> second_largest;
  std::optional<std::uint64_t> second_largest_nontrivial;
  std::optional<std::uint64_t> isolated;
  std::optional<bool> t1_connected;
  std::optional<bool> s_connected;
  std::optional<std::uint64_t> non_bonded;
  std::optional<bool> diam_le2;
  std::optional<std::int64_t> t1_diameter;  // -1 when T1 is disconnected
  std::optional<std::uint64_t> no_common_neighbour;

  bool t1_empty = false;      // complete graph: T1 connectivity is vacuous
  bool s_degenerate = false;  // at most one square

  friend bool operator==(const TrialRecord&, const TrialRecord&) = default;
};

TrialRecord run_trial(std::size_t n, double p, std::optional<double> c, const SamplerSeed& seed,
                      const std::vector<Metric>& metrics, const Caps& caps = {});

/// Reads a metric off a record; booleans map to 0/1, an infinite diameter to nullopt.
std::optional<double> metric_value(const TrialRecord& r, Metric m);

struct AggregateRow {
  std::size_t n = 0;
  double p = 0;
  std::optional<double> c;
  std::uint64_t trials = 0;
  std::vector<std::pair<std::string, double>> columns;  // <metric>_freq or <metric>_mean/_sd/_max

  std::optional<double> get(std::string_view column) const;  // nullopt when absent or undefined
};

struct SweepTable {
  std::vector<std::string> aggregate_header;
  std::vector<AggregateRow> rows;
  std::vector<TrialRecord> raw;  // sorted by (p, trial)
};

/// Full factorial over the p grid and trials. Output does not depend on the worker count.
SweepTable sweep(const ExperimentConfig& config);

extern const char* const kRawCsvHeader;
std::string raw_csv(const std::vector<TrialRecord>& records);
std::string aggregate_csv(const SweepTable& table);
nlohmann::json raw_json(const std::vector<TrialRecord>& records);
nlohmann::json aggregate_json(const SweepTable& table);

/// Empirical frequency of a boolean metric at p = c * sqrt(ln n / n) over trials 0..trials-1.
double metric_frequency(std::size_t n, Metric metric, double c, std::uint64_t trials, std::uint64_t seed,
                        unsigned workers = 1, const Caps& caps = {});

struct CrossingEstimate {
  double estimate = 0;
  std::vector<std::pair<double, double>> evaluations;  // (c, frequency) in evaluation order
};

/// Bisection on c for the point where the frequency of a boolean metric crosses 1/2,
/// stopping when the bracket half-width drops to half_width. Every evaluation reuses the same
/// trial seeds, so graphs are nested in c. Throws BracketInvalid.
CrossingEstimate estimate_crossing(std::size_t n, Metric metric, double c_low, double c_high, std::uint64_t trials,
                                   std::uint64_t seed, double half_width = 0.02, unsigned workers = 1,
                                   const Caps& caps = {});

struct Preset {
  std::string name;
  std::string description;
  ExperimentConfig config;
};

/// Named desk-scale configurations; the seed is left for the caller to set.
const std::vector<Preset>& presets();
const Preset* find_preset(std::string_view name);

}  // namespace sqperc
