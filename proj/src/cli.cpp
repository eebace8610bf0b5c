#include "sqperc/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sqperc/analysis.hpp"
#include "sqperc/edge_list.hpp"
#include "sqperc/error.hpp"
#include "sqperc/experiments.hpp"
#include "sqperc/sampler.hpp"
#include "sqperc/verify.hpp"

namespace sqperc {
namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorKind::Io, "cannot open " + path + " for writing");
  f << text;
  if (!f) throw Error(ErrorKind::Io, "write failed: " + path);
}

std::string six_digits(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", x);
  return buf;
}

std::vector<double> c_grid(double lo, double hi, double step) {
  if (!(step > 0)) throw UsageError("--c-step must be > 0");
  if (!(hi >= lo)) throw UsageError("--c-max must be >= --c-min");
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (count > 10'000) throw UsageError("c grid has more than 10000 points");
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(std::round((lo + step * static_cast<double>(i)) * 1e9) / 1e9);
  return out;
}

std::vector<Metric> parse_metrics(const std::vector<std::string>& names) {
  std::vector<Metric> out;
  for (const auto& name : names) {
    if (name == "all") {
      out.assign(std::begin(kAllMetrics), std::end(kAllMetrics));
      continue;
    }
    auto m = parse_metric(name);
    if (!m) throw UsageError("unknown metric: " + name);
    out.push_back(*m);
  }
  return out;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Square percolation toolkit: T1 / S square graphs of G(n,p) and fixed constructions"};
  app.require_subcommand(1);
  app.allow_extras(false);

  // sample
  auto* sample = app.add_subcommand("sample", "Draw G(n,p) and write it as an edge list");
  std::size_t s_n = 0;
  double s_p = 0;
  std::uint64_t s_seed = 0, s_trial = 0;
  std::string s_out;
  sample->add_option("--n", s_n, "Number of vertices")->required();
  sample->add_option("--p", s_p, "Edge probability")->required();
  sample->add_option("--seed", s_seed, "Master seed")->required();
  sample->add_option("--trial", s_trial, "Trial index within the seed's streams");
  sample->add_option("--out", s_out, "Output edge-list file (default: standard output)");

  // analyze
  auto* analyze_cmd = app.add_subcommand("analyze", "Decompose T1 of a graph read from an edge-list file");
  std::string a_in, a_report = "json";
  std::size_t a_diam_cap = 0;
  analyze_cmd->add_option("--in", a_in, "Input edge-list file")->required();
  analyze_cmd->add_option("--report", a_report, "Report format")->check(CLI::IsMember({"json", "text"}));
  analyze_cmd->add_option("--diameter-cap", a_diam_cap,
                          "Also test T1 diameter <= 2 when T1 has at most this many vertices (0: skip)");

  // verify-construction
  auto* verify = app.add_subcommand("verify-construction", "Check the component claims of a fixed construction");
  std::string v_family;
  LadderParams v_ladder{22, 12};
  std::size_t v_min_full = 3;
  verify->add_option("--family", v_family, "Construction")
      ->required()
      ->check(CLI::IsMember({"g-prime", "g", "ladder", "bipartite-demo"}));
  verify->add_option("--m", v_ladder.m, "Ladder: vertices per layer");
  verify->add_option("--shift", v_ladder.s, "Ladder: shift of the second cross-edge family");
  verify->add_option("--min-full", v_min_full, "Ladder: required number of full-support components");

  // sweep
  auto* sweep_cmd = app.add_subcommand("sweep", "Monte Carlo sweep over a p or c grid");
  std::optional<std::size_t> w_n;
  std::optional<double> c_min, c_max, c_step;
  std::vector<double> p_list;
  std::optional<std::uint64_t> w_trials;
  std::uint64_t w_seed = 0;
  std::vector<std::string> w_metrics;
  std::string w_out, w_raw_out, w_json_out, w_preset;
  unsigned w_workers = 1;
  sweep_cmd->add_option("--preset", w_preset, "Start from a named configuration");
  sweep_cmd->add_option("--n", w_n, "Number of vertices");
  sweep_cmd->add_option("--c-min", c_min, "Smallest c, p = c sqrt(ln n / n)");
  sweep_cmd->add_option("--c-max", c_max, "Largest c");
  sweep_cmd->add_option("--c-step", c_step, "Step in c");
  sweep_cmd->add_option("--p-list", p_list, "Explicit p values")->delimiter(',');
  sweep_cmd->add_option("--trials", w_trials, "Trials per grid point");
  sweep_cmd->add_option("--seed", w_seed, "Master seed")->required();
  sweep_cmd->add_option("--metrics", w_metrics, "Comma-separated metrics, or 'all'")->delimiter(',');
  sweep_cmd->add_option("--out", w_out, "Aggregate CSV (default: standard output)");
  sweep_cmd->add_option("--raw-out", w_raw_out, "Per-trial CSV");
  sweep_cmd->add_option("--json-out", w_json_out, "Aggregate and per-trial JSON");
  sweep_cmd->add_option("--workers", w_workers, "Worker threads")->check(CLI::Range(1U, 256U));

  // oracle-check
  auto* oracle = app.add_subcommand("oracle-check", "Compare fast routines with brute-force oracles");
  std::size_t o_n_max = 25, o_trials = 200;
  std::uint64_t o_seed = 0;
  std::string o_dump;
  oracle->add_option("--n-max", o_n_max, "Largest n")->check(CLI::Range(std::size_t{2}, std::size_t{64}));
  oracle->add_option("--trials", o_trials, "Number of random instances")->check(CLI::PositiveNumber);
  oracle->add_option("--seed", o_seed, "Master seed")->required();
  oracle->add_option("--dump", o_dump, "Also write a failing instance to this file");

  // expected
  auto* expected = app.add_subcommand("expected", "Evaluate a closed-form expectation");
  std::string e_formula;
  std::size_t e_n = 0;
  double e_p = 0;
  expected->add_option("--formula", e_formula, "Formula")
      ->required()
      ->check(CLI::IsMember({"isolated-t1", "non-bonded"}));
  expected->add_option("--n", e_n, "Number of vertices")->required();
  expected->add_option("--p", e_p, "Edge probability")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (auto* sub = app.get_subcommands().empty() ? nullptr : app.get_subcommands().front())
      err << "run '" << sub->get_name() << " --help' for usage\n";
    return kExitUsage;
  }

  try {
    if (sample->parsed()) {
      const Graph g = sample_gnp(s_n, s_p, derive_trial_seed(s_seed, s_trial));
      if (s_out.empty()) {
        write_edge_list(out, g);
      } else {
        write_file(s_out, to_edge_list(g));
        out << "n " << g.n() << " m " << g.m() << '\n';
      }
      return kExitOk;
    }

    if (analyze_cmd->parsed()) {
      Graph g;
      try {
        g = load_edge_list(a_in);
      } catch (const Error& e) {
        err << "error: " << a_in << ": " << e.what() << '\n';
        return e.kind() == ErrorKind::Io ? kExitCheckFailed : kExitUsage;
      }
      const AnalysisReport r = analyze(g);
      std::optional<bool> diam;
      if (a_diam_cap > 0 && !r.t1_empty) diam = t1_diameter_at_most_two(g, a_diam_cap);
      if (a_report == "json") {
        auto j = to_json(r);
        if (diam) j["t1DiameterAtMostTwo"] = *diam;
        out << j.dump(2) << '\n';
      } else {
        out << to_text(r);
        if (diam) out << "T1 diameter <= 2: " << (*diam ? "yes" : "no") << '\n';
      }
      return kExitOk;
    }

    if (verify->parsed()) {
      const Family family = *parse_family(v_family);
      if (family == Family::Ladder) validate(v_ladder);
      const auto verdict = verify_construction(family, v_ladder, v_min_full);
      out << "family: " << verdict.family << '\n';
      for (const auto& c : verdict.checks) {
        out << (c.passed ? "  ok   " : "  FAIL ") << c.name;
        if (!c.detail.empty()) out << " (" << c.detail << ")";
        out << '\n';
      }
      out << "certificate:\n" << verdict.certificate;
      if (const Check* f = verdict.first_failure()) {
        err << "verification failed: " << f->name << '\n';
        return kExitCheckFailed;
      }
      out << "PASS\n";
      return kExitOk;
    }

    if (sweep_cmd->parsed()) {
      ExperimentConfig cfg;
      if (!w_preset.empty()) {
        const Preset* preset = find_preset(w_preset);
        if (!preset) throw UsageError("unknown preset: " + w_preset);
        cfg = preset->config;
      }
      const bool has_c = c_min || c_max || c_step;
      if (has_c && !p_list.empty()) throw UsageError("give either --c-min/--c-max/--c-step or --p-list, not both");
      if (has_c) {
        if (!(c_min && c_max && c_step)) throw UsageError("--c-min, --c-max and --c-step go together");
        cfg.p_spec = ScaledC{c_grid(*c_min, *c_max, *c_step)};
      } else if (!p_list.empty()) {
        cfg.p_spec = ExplicitP{p_list};
      } else if (w_preset.empty()) {
        throw UsageError("no p grid: give --p-list or --c-min/--c-max/--c-step");
      }
      if (w_n) cfg.n = *w_n;
      if (w_trials) cfg.trials = *w_trials;
      if (!w_metrics.empty()) cfg.metrics = parse_metrics(w_metrics);
      if (cfg.metrics.empty()) throw UsageError("no metrics: give --metrics");
      cfg.master_seed = w_seed;
      cfg.workers = w_workers;
      cfg.keep_raw = !w_raw_out.empty() || !w_json_out.empty();
      try {
        validate(cfg);
        (void)grid_points(cfg);
      } catch (const Error& e) {
        throw UsageError(e.what());
      }

      const SweepTable table = sweep(cfg);
      const std::string agg = aggregate_csv(table);
      if (w_out.empty()) {
        out << agg;
      } else {
        write_file(w_out, agg);
        out << "wrote " << table.rows.size() << " aggregate rows to " << w_out << '\n';
      }
      if (!w_raw_out.empty()) write_file(w_raw_out, raw_csv(table.raw));
      if (!w_json_out.empty()) {
        nlohmann::json j = aggregate_json(table);
        j["raw"] = raw_json(table.raw);
        write_file(w_json_out, j.dump(2) + "\n");
      }
      return kExitOk;
    }

    if (oracle->parsed()) {
      const OracleSummary s = run_oracle_suite(o_n_max, o_trials, o_seed);
      if (s.failure) {
        const auto& f = *s.failure;
        err << "oracle discrepancy on instance " << f.instance << ": " << f.check << ": " << f.detail << '\n';
        out << "# failing instance " << f.instance << " (seed " << o_seed << ")\n";
        write_edge_list(out, f.graph);
        if (!o_dump.empty()) write_file(o_dump, to_edge_list(f.graph));
        return kExitCheckFailed;
      }
      out << "PASS: " << s.instances << " instances, " << s.squares_checked << " squares checked\n";
      return kExitOk;
    }

    if (expected->parsed()) {
      const double v = e_formula == "isolated-t1" ? expected_isolated_t1(e_n, e_p) : expected_nonbonded_squares(e_n, e_p);
      out << six_digits(v) << '\n';
      return kExitOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::Io:
      case ErrorKind::CapExceeded:
      case ErrorKind::EdgeCapExceeded:
      case ErrorKind::SquareCapExceeded:
        return kExitCheckFailed;
      default:
        return kExitUsage;
    }
  }
  return kExitUsage;
}

}  // namespace sqperc
