#include "sqperc/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include "sqperc/error.hpp"

namespace sqperc {
namespace {

double log_choose(std::size_t n, std::size_t k) {
  return std::lgamma(static_cast<double>(n) + 1) - std::lgamma(static_cast<double>(k) + 1) -
         std::lgamma(static_cast<double>(n - k) + 1);
}

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw Error(ErrorKind::InvalidProbability, "p=" + std::to_string(p));
}

bool contains(const std::vector<Metric>& ms, Metric m) { return std::find(ms.begin(), ms.end(), m) != ms.end(); }

std::string format_double(double x) {
  if (std::isnan(x)) return "";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

// Runs body(i) for i in [0, count) on `workers` threads; each index runs exactly once.
template <class Body>
void parallel_for(std::size_t count, unsigned workers, Body&& body) {
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  std::vector<std::jthread> pool;
  for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w)
    pool.emplace_back([&] {
      for (std::size_t i; !failed && (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          if (!failed.exchange(true)) failure = std::current_exception();
        }
      }
    });
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

struct Moments {
  std::uint64_t count = 0;
  double sum = 0, sum_sq = 0, max = 0;

  void add(double x) {
    max = count == 0 ? x : std::max(max, x);
    ++count;
    sum += x;
    sum_sq += x * x;
  }
  // NaN when undefined; rendered as an empty CSV cell and JSON null.
  double mean() const { return count ? sum / static_cast<double>(count) : std::nan(""); }
  double max_or_nan() const { return count ? max : std::nan(""); }
  double sd() const {
    if (count < 2) return std::nan("");
    const double c = static_cast<double>(count);
    const double var = (sum_sq - sum * sum / c) / (c - 1);
    return var > 0 ? std::sqrt(var) : 0.0;
  }
};

}  // namespace

double expected_isolated_t1(std::size_t n, double p) {
  if (n < 2) throw Error(ErrorKind::InvalidParams, "expected_isolated_t1 needs n >= 2");
  check_probability(p);
  if (p == 1.0) return 0.0;
  const double log_value =
      log_choose(n, 2) + std::log1p(-p) + static_cast<double>(n - 2) * std::log1p(-p * p);
  return std::exp(log_value);
}

double expected_nonbonded_squares(std::size_t n, double p) {
  if (n < 4) throw Error(ErrorKind::InvalidParams, "expected_nonbonded_squares needs n >= 4");
  check_probability(p);
  if (p == 0.0 || p == 1.0) return 0.0;
  const double escape = 2 * p * p * (1 - p * p);  // outside vertex bonds the square
  const double log_value = log_choose(n, 4) + std::log(3.0) + 4 * std::log(p) + 2 * std::log1p(-p) +
                           static_cast<double>(n - 4) * std::log1p(-escape);
  return std::exp(log_value);
}

double threshold_p(double c, std::size_t n) {
  if (n < 1) throw Error(ErrorKind::OutOfRange, "threshold_p needs n >= 1");
  const double nn = static_cast<double>(n);
  const double p = c * std::sqrt(std::log(nn) / nn);
  if (!(p >= 0.0 && p <= 1.0))
    throw Error(ErrorKind::OutOfRange, "c=" + std::to_string(c) + " gives p=" + std::to_string(p) + " at n=" +
                                           std::to_string(n));
  return p;
}

std::string_view metric_name(Metric m) {
  switch (m) {
    case Metric::T1Connected: return "t1Connected";
    case Metric::SConnected: return "sConnected";
    case Metric::IsolatedT1: return "isolatedT1";
    case Metric::SecondLargest: return "secondLargest";
    case Metric::Largest: return "largest";
    case Metric::NumSquares: return "numSquares";
    case Metric::NonBondedCount: return "nonBondedCount";
    case Metric::DiameterAtMostTwo: return "diameterAtMostTwo";
    case Metric::T1Diameter: return "t1Diameter";
    case Metric::NoCommonNeighbour: return "noCommonNeighbour";
  }
  return "";
}

std::string_view metric_column(Metric m) {
  switch (m) {
    case Metric::T1Connected: return "t1_connected";
    case Metric::SConnected: return "s_connected";
    case Metric::IsolatedT1: return "isolated";
    case Metric::SecondLargest: return "second_largest";
    case Metric::Largest: return "largest";
    case Metric::NumSquares: return "num_squares";
    case Metric::NonBondedCount: return "non_bonded";
    case Metric::DiameterAtMostTwo: return "diam_le2";
    case Metric::T1Diameter: return "t1_diameter";
    case Metric::NoCommonNeighbour: return "no_common_neighbour";
  }
  return "";
}

bool is_boolean(Metric m) {
  return m == Metric::T1Connected || m == Metric::SConnected || m == Metric::DiameterAtMostTwo;
}

std::optional<Metric> parse_metric(std::string_view name) {
  for (Metric m : kAllMetrics)
    if (metric_name(m) == name || metric_column(m) == name) return m;
  return std::nullopt;
}

void validate(const ExperimentConfig& config) {
  if (config.trials < 1) throw Error(ErrorKind::InvalidParams, "trials must be >= 1");
  if (config.metrics.empty()) throw Error(ErrorKind::InvalidParams, "no metrics requested");
  const bool square_metric = std::any_of(config.metrics.begin(), config.metrics.end(), [](Metric m) {
    return m != Metric::T1Connected && m != Metric::IsolatedT1 && m != Metric::NoCommonNeighbour;
  });
  if (square_metric && config.n < 4) throw Error(ErrorKind::InvalidParams, "square metrics need n >= 4");
  const auto points = grid_points(config);
  if (points.empty()) throw Error(ErrorKind::InvalidParams, "empty p grid");
  for (const auto& [p, c] : points) check_probability(p);
}

std::vector<std::pair<double, std::optional<double>>> grid_points(const ExperimentConfig& config) {
  std::vector<std::pair<double, std::optional<double>>> out;
  if (const auto* ex = std::get_if<ExplicitP>(&config.p_spec)) {
    for (double p : ex->values) out.emplace_back(p, std::nullopt);
  } else {
    for (double c : std::get<ScaledC>(config.p_spec).constants) out.emplace_back(threshold_p(c, config.n), c);
  }
  return out;
}

TrialRecord run_trial(std::size_t n, double p, std::optional<double> c, const SamplerSeed& seed,
                      const std::vector<Metric>& metrics, const Caps& caps) {
  const Graph g = sample_gnp(n, p, seed);
  TrialRecord r;
  r.n = n;
  r.p = p;
  r.c = c;
  r.trial = seed.trial;
  r.seed = seed.key;
  r.num_edges = g.m();
  r.num_non_edges = pair_count(n) - g.m();
  r.t1_empty = r.num_non_edges == 0;

  const bool need_decomposition = std::any_of(metrics.begin(), metrics.end(), [](Metric m) {
    return m == Metric::T1Connected || m == Metric::SConnected || m == Metric::IsolatedT1 ||
           m == Metric::SecondLargest || m == Metric::Largest || m == Metric::NumSquares;
  });
  if (need_decomposition) {
    const auto d = t1_components(g);
    r.num_components = d.num_components();
    r.num_nontrivial = d.num_nontrivial();
    r.s_degenerate = d.num_squares <= 1;
    if (contains(metrics, Metric::NumSquares)) r.num_squares = d.num_squares;
    if (contains(metrics, Metric::Largest)) r.largest = d.largest;
    if (contains(metrics, Metric::SecondLargest)) {
      r.second_largest = d.second_largest;
      r.second_largest_nontrivial = d.second_largest_nontrivial();
    }
    if (contains(metrics, Metric::IsolatedT1)) r.isolated = d.isolated_count;
    if (contains(metrics, Metric::T1Connected)) r.t1_connected = t1_connectivity(d).connected;
    if (contains(metrics, Metric::SConnected)) r.s_connected = s_connectivity(d).connected;
  }
  if (contains(metrics, Metric::NoCommonNeighbour)) r.no_common_neighbour = count_no_common_neighbour(g);
  if (contains(metrics, Metric::NonBondedCount)) r.non_bonded = count_non_bonded(g);
  if (contains(metrics, Metric::DiameterAtMostTwo))
    r.diam_le2 = r.t1_empty ? true : t1_diameter_at_most_two(g, caps.diameter_vertex_cap);
  if (contains(metrics, Metric::T1Diameter)) {
    if (r.t1_empty) {
      r.t1_diameter = 0;
    } else {
      const auto diam = t1_diameter(g, caps.t1_diameter_vertex_cap);
      r.t1_diameter = diam ? static_cast<std::int64_t>(*diam) : -1;
    }
  }
  return r;
}

std::optional<double> metric_value(const TrialRecord& r, Metric m) {
  auto num = [](const std::optional<std::uint64_t>& x) -> std::optional<double> {
    return x ? std::optional<double>(static_cast<double>(*x)) : std::nullopt;
  };
  auto flag = [](const std::optional<bool>& x) -> std::optional<double> {
    return x ? std::optional<double>(*x ? 1.0 : 0.0) : std::nullopt;
  };
  switch (m) {
    case Metric::T1Connected: return flag(r.t1_connected);
    case Metric::SConnected: return flag(r.s_connected);
    case Metric::IsolatedT1: return num(r.isolated);
    case Metric::SecondLargest: return num(r.second_largest);
    case Metric::Largest: return num(r.largest);
    case Metric::NumSquares: return num(r.num_squares);
    case Metric::NonBondedCount: return num(r.non_bonded);
    case Metric::DiameterAtMostTwo: return flag(r.diam_le2);
    case Metric::T1Diameter:
      if (!r.t1_diameter || *r.t1_diameter < 0) return std::nullopt;
      return static_cast<double>(*r.t1_diameter);
    case Metric::NoCommonNeighbour: return num(r.no_common_neighbour);
  }
  return std::nullopt;
}

std::optional<double> AggregateRow::get(std::string_view column) const {
  for (const auto& [name, value] : columns)
    if (name == column) return std::isnan(value) ? std::nullopt : std::optional<double>(value);
  return std::nullopt;
}

SweepTable sweep(const ExperimentConfig& config) {
  validate(config);
  const auto points = grid_points(config);
  const std::size_t total = points.size() * config.trials;
  std::vector<TrialRecord> records(total);
  parallel_for(total, config.workers, [&](std::size_t k) {
    const auto& [p, c] = points[k / config.trials];
    const std::uint64_t trial = k % config.trials;
    records[k] = run_trial(config.n, p, c, derive_trial_seed(config.master_seed, trial), config.metrics, config.caps);
  });
  std::stable_sort(records.begin(), records.end(), [](const TrialRecord& x, const TrialRecord& y) {
    return std::tie(x.p, x.trial) < std::tie(y.p, y.trial);
  });

  SweepTable table;
  table.aggregate_header = {"n", "p", "c", "trials"};
  std::vector<Metric> metrics;
  for (Metric m : kAllMetrics)
    if (contains(config.metrics, m)) metrics.push_back(m);
  for (Metric m : metrics) {
    const std::string col(metric_column(m));
    if (is_boolean(m)) {
      table.aggregate_header.push_back(col + "_freq");
    } else {
      for (const char* suffix : {"_mean", "_sd", "_max"}) table.aggregate_header.push_back(col + suffix);
      if (m == Metric::T1Diameter) table.aggregate_header.push_back(col + "_inf_freq");
    }
  }

  for (std::size_t lo = 0; lo < records.size();) {
    std::size_t hi = lo;
    while (hi < records.size() && records[hi].p == records[lo].p) ++hi;
    AggregateRow row;
    row.n = config.n;
    row.p = records[lo].p;
    row.c = records[lo].c;
    row.trials = hi - lo;
    for (Metric m : metrics) {
      Moments mom;
      std::uint64_t infinite = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        if (auto v = metric_value(records[i], m)) mom.add(*v);
        else if (m == Metric::T1Diameter) ++infinite;
      }
      const std::string col(metric_column(m));
      if (is_boolean(m)) {
        row.columns.emplace_back(col + "_freq", mom.mean());
      } else {
        row.columns.emplace_back(col + "_mean", mom.mean());
        row.columns.emplace_back(col + "_sd", mom.sd());
        row.columns.emplace_back(col + "_max", mom.max_or_nan());
        if (m == Metric::T1Diameter)
          row.columns.emplace_back(col + "_inf_freq", static_cast<double>(infinite) / static_cast<double>(row.trials));
      }
    }
    table.rows.push_back(std::move(row));
    lo = hi;
  }
  if (config.keep_raw) table.raw = std::move(records);
  return table;
}

const char* const kRawCsvHeader =
    "n,p,c,trial,seed,num_edges,num_non_edges,num_squares,num_components,num_nontrivial,largest,second_largest,"
    "isolated,t1_connected,s_connected,non_bonded,diam_le2";

std::string raw_csv(const std::vector<TrialRecord>& records) {
  std::ostringstream os;
  os << kRawCsvHeader << '\n';
  auto opt = [&](const auto& x) {
    os << ',';
    if (x) {
      if constexpr (std::is_same_v<std::decay_t<decltype(*x)>, bool>) os << (*x ? 1 : 0);
      else os << *x;
    }
  };
  for (const auto& r : records) {
    os << r.n << ',' << format_double(r.p) << ',' << (r.c ? format_double(*r.c) : "") << ',' << r.trial << ','
       << r.seed << ',' << r.num_edges << ',' << r.num_non_edges;
    opt(r.num_squares);
    opt(r.num_components);
    opt(r.num_nontrivial);
    opt(r.largest);
    opt(r.second_largest);
    opt(r.isolated);
    opt(r.t1_connected);
    opt(r.s_connected);
    opt(r.non_bonded);
    opt(r.diam_le2);
    os << '\n';
  }
  return os.str();
}

std::string aggregate_csv(const SweepTable& table) {
  std::ostringstream os;
  for (std::size_t i = 0; i < table.aggregate_header.size(); ++i) os << (i ? "," : "") << table.aggregate_header[i];
  os << '\n';
  for (const auto& row : table.rows) {
    os << row.n << ',' << format_double(row.p) << ',' << (row.c ? format_double(*row.c) : "") << ',' << row.trials;
    for (const auto& [name, value] : row.columns) os << ',' << format_double(value);
    os << '\n';
  }
  return os.str();
}

nlohmann::json raw_json(const std::vector<TrialRecord>& records) {
  auto arr = nlohmann::json::array();
  for (const auto& r : records) {
    nlohmann::json j = {{"n", r.n},         {"p", r.p},
                        {"c", r.c ? nlohmann::json(*r.c) : nlohmann::json(nullptr)},
                        {"trial", r.trial}, {"seed", r.seed},
                        {"num_edges", r.num_edges}, {"num_non_edges", r.num_non_edges}};
    auto put = [&](const char* key, const auto& x) {
      if (x) j[key] = *x;
    };
    put("num_squares", r.num_squares);
    put("num_components", r.num_components);
    put("num_nontrivial", r.num_nontrivial);
    put("largest", r.largest);
    put("second_largest", r.second_largest);
    put("isolated", r.isolated);
    put("t1_connected", r.t1_connected);
    put("s_connected", r.s_connected);
    put("non_bonded", r.non_bonded);
    put("diam_le2", r.diam_le2);
    put("t1_diameter", r.t1_diameter);
    put("no_common_neighbour", r.no_common_neighbour);
    arr.push_back(std::move(j));
  }
  return {{"schema_version", 1}, {"records", arr}};
}

nlohmann::json aggregate_json(const SweepTable& table) {
  auto rows = nlohmann::json::array();
  for (const auto& row : table.rows) {
    nlohmann::json j = {{"n", row.n}, {"p", row.p},
                        {"c", row.c ? nlohmann::json(*row.c) : nlohmann::json(nullptr)}, {"trials", row.trials}};
    for (const auto& [name, value] : row.columns) j[name] = std::isnan(value) ? nlohmann::json(nullptr) : nlohmann::json(value);
    rows.push_back(std::move(j));
  }
  return {{"schema_version", 1}, {"rows", rows}};
}

double metric_frequency(std::size_t n, Metric metric, double c, std::uint64_t trials, std::uint64_t seed,
                        unsigned workers, const Caps& caps) {
  if (!is_boolean(metric))
    throw Error(ErrorKind::InvalidParams, std::string(metric_name(metric)) + " is not a boolean metric");
  if (trials == 0) throw Error(ErrorKind::InvalidParams, "trials must be >= 1");
  const double p = threshold_p(c, n);
  std::vector<char> hits(trials, 0);
  parallel_for(trials, workers, [&](std::size_t t) {
    const auto r = run_trial(n, p, c, derive_trial_seed(seed, t), {metric}, caps);
    hits[t] = metric_value(r, metric).value_or(0.0) > 0.5 ? 1 : 0;
  });
  return static_cast<double>(std::count(hits.begin(), hits.end(), 1)) / static_cast<double>(trials);
}

CrossingEstimate estimate_crossing(std::size_t n, Metric metric, double c_low, double c_high, std::uint64_t trials,
                                   std::uint64_t seed, double half_width, unsigned workers, const Caps& caps) {
  if (!(c_low < c_high) || !(half_width > 0))
    throw Error(ErrorKind::BracketInvalid, "need c_low < c_high and a positive half-width");
  CrossingEstimate out;
  auto freq = [&](double c) {
    const double f = metric_frequency(n, metric, c, trials, seed, workers, caps);
    out.evaluations.emplace_back(c, f);
    return f;
  };
  const double f_low = freq(c_low);
  const double f_high = freq(c_high);
  if (!(f_low < 0.5 && 0.5 < f_high))
    throw Error(ErrorKind::BracketInvalid, "frequencies " + std::to_string(f_low) + " at c=" + std::to_string(c_low) +
                                               " and " + std::to_string(f_high) + " at c=" + std::to_string(c_high) +
                                               " do not bracket 1/2");
  double lo = c_low, hi = c_high;
  while ((hi - lo) / 2 > half_width) {
    const double mid = (lo + hi) / 2;
    if (freq(mid) < 0.5) lo = mid;
    else hi = mid;
  }
  out.estimate = (lo + hi) / 2;
  return out;
}

const std::vector<Preset>& presets() {
  static const std::vector<Preset> all = [] {
    std::vector<Preset> v;
    auto add = [&](std::string name, std::string description, std::size_t n, PSpec spec, std::uint64_t trials,
                   std::vector<Metric> metrics) {
      ExperimentConfig cfg;
      cfg.n = n;
      cfg.p_spec = std::move(spec);
      cfg.trials = trials;
      cfg.metrics = std::move(metrics);
      v.push_back({std::move(name), std::move(description), std::move(cfg)});
    };
    add("threshold-trend",
        "S- and T1-connectivity on both sides of c = 1 at n = 1024; S connectivity should rise sharply in c.", 1024,
        ScaledC{{0.6, 0.7, 0.8, 0.9, 1.0, 1.1, 1.2, 1.3, 1.4, 1.5, 1.6}}, 200,
        {Metric::SConnected, Metric::T1Connected, Metric::IsolatedT1, Metric::NumSquares});
    add("connectivity-gap",
        "n = 4096 at c = 1.25, between the S threshold (c = 1) and the T1 threshold (c = sqrt 2): S is usually "
        "connected while isolated non-edges keep T1 disconnected.",
        4096, ScaledC{{1.25}}, 50, {Metric::SConnected, Metric::T1Connected, Metric::IsolatedT1});
    add("diameter-two",
        "Dense regime n = 200, p = 0.7: every pair of non-edges is adjacent in T1 or shares a T1-neighbour. "
        "Each non-edge has about n p^2 = 98 common neighbours, so T1 is dense.",
        200, ExplicitP{{0.7}}, 20, {Metric::DiameterAtMostTwo});
    add("giant-component",
        "n = 2048, p = 0.07: one component holds most non-edges; the second-largest non-trivial component stays "
        "small.",
        2048, ExplicitP{{0.07}}, 50, {Metric::Largest, Metric::SecondLargest, Metric::IsolatedT1});
    add("component-size",
        "Exploratory: sizes of non-giant components just below and at the S threshold at n = 1024.", 1024,
        ScaledC{{0.8, 0.9, 1.0, 1.1}}, 100, {Metric::Largest, Metric::SecondLargest, Metric::NumSquares});
    add("near-complete",
        "Exploratory: 1 - p = c / n^2 at n = 64, so only a handful of non-edges remain.", 64,
        ExplicitP{{1 - 0.5 / 4096.0, 1 - 1.0 / 4096.0, 1 - 2.0 / 4096.0, 1 - 4.0 / 4096.0}}, 200,
        {Metric::T1Connected, Metric::IsolatedT1, Metric::NumSquares});
    add("t1-diameter",
        "Exploratory: exact T1 diameter at small n across densities.", 40,
        ExplicitP{{0.4, 0.5, 0.6, 0.7, 0.8}}, 20, {Metric::T1Diameter, Metric::DiameterAtMostTwo});
    add("non-bonded",
        "Non-bonded square counts at n = 300, p = 0.15, to compare with the closed-form expectation.", 300,
        ExplicitP{{0.15}}, 300, {Metric::NonBondedCount, Metric::NumSquares});
    return v;
  }();
  return all;
}

const Preset* find_preset(std::string_view name) {
  for (const auto& p : presets())
    if (p.name == name) return &p;
  return nullptr;
}

}  // namespace sqperc
