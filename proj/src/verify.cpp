#include "sqperc/verify.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <sstream>

#include "sqperc/error.hpp"
#include "sqperc/sampler.hpp"
#include "sqperc/square_graph.hpp"

namespace sqperc {
namespace {

std::string pair_text(VertexPair p) { return std::to_string(p.a) + "-" + std::to_string(p.b); }

DiagonalSet member_set(const ComponentDecomposition& d, std::uint32_t id) {
  const auto m = d.members(id);
  return {m.begin(), m.end()};
}

Check make_check(std::string name, bool passed, std::string detail = {}) {
  return {std::move(name), passed, std::move(detail)};
}

void add_full_support_checks(ConstructionVerdict& v, const ComponentDecomposition& d, std::size_t exact_nontrivial) {
  const auto nontrivial = d.nontrivial_ids();
  v.checks.push_back(make_check("non-trivial components = " + std::to_string(exact_nontrivial),
                                nontrivial.size() == exact_nontrivial,
                                "found " + std::to_string(nontrivial.size())));
  const auto full = d.full_support_ids();
  v.checks.push_back(make_check("all non-trivial components have full support", full.size() == nontrivial.size(),
                                std::to_string(full.size()) + " of " + std::to_string(nontrivial.size())));
}

ConstructionVerdict verify_g_prime() {
  ConstructionVerdict v;
  v.family = "g-prime";
  const Graph g = build_g_prime();
  v.checks.push_back(make_check("22 vertices, 66 edges", g.n() == 22 && g.m() == 66,
                                "n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m())));
  const auto d = t1_components(g);
  add_full_support_checks(v, d, 1);
  const auto [first, second] = expected_diagonal_sets({11, 6});
  const auto ids = d.nontrivial_ids();
  v.checks.push_back(make_check("diagonals = offsets {0, +-2} mod 11", ids.size() == 1 && member_set(d, ids[0]) == first));
  v.certificate = describe_components(d);
  return v;
}

ConstructionVerdict verify_g() {
  ConstructionVerdict v;
  v.family = "g";
  Graph g;
  try {
    g = build_g();
    v.checks.push_back(make_check("E(G') and E(G'') disjoint", true));
  } catch (const Error& e) {
    v.checks.push_back(make_check("E(G') and E(G'') disjoint", false, e.what()));
    return v;
  }
  v.checks.push_back(make_check("22 vertices, 88 edges, 143 non-edges",
                                g.n() == 22 && g.m() == 88 && pair_count(22) - g.m() == 143,
                                "n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m())));
  const auto d = t1_components(g);
  add_full_support_checks(v, d, 2);

  const auto [first, second] = expected_diagonal_sets({11, 6});
  std::vector<DiagonalSet> found;
  for (auto id : d.nontrivial_ids()) found.push_back(member_set(d, id));
  std::ostringstream sizes;
  for (const auto& s : found) sizes << s.size() << ' ';
  const bool sizes_ok = first.size() == 33 && second.size() == 33 &&
                        std::none_of(first.begin(), first.end(), [&](const VertexPair& p) { return second.count(p); });
  v.checks.push_back(make_check("offset sets A and B have 33 diagonals each and are disjoint", sizes_ok));
  const bool partition_ok =
      found.size() == 2 && ((found[0] == first && found[1] == second) || (found[0] == second && found[1] == first));
  v.checks.push_back(make_check("component diagonal sets = {A (offsets 0, +-2), B (offsets 6, 6 +- 2)}",
                                partition_ok, "component sizes: " + sizes.str()));
  v.certificate = describe_components(d);
  return v;
}

ConstructionVerdict verify_ladder(const LadderParams& params, std::size_t min_full) {
  ConstructionVerdict v;
  v.family = "ladder(m=" + std::to_string(params.m) + ", shift=" + std::to_string(params.s) + ")";
  Graph g;
  try {
    g = build_ladder_family(params);
  } catch (const Error& e) {
    v.checks.push_back(make_check("construction builds", false, e.what()));
    return v;
  }
  v.checks.push_back(make_check("construction builds", true,
                                "n=" + std::to_string(g.n()) + " m=" + std::to_string(g.m())));
  const auto d = t1_components(g);
  const auto full = d.full_support_ids();
  v.checks.push_back(make_check("at least " + std::to_string(min_full) + " full-support components",
                                full.size() >= min_full,
                                "found " + std::to_string(full.size()) + " full-support among " +
                                    std::to_string(d.num_nontrivial()) + " non-trivial"));
  v.certificate = describe_components(d);
  return v;
}

ConstructionVerdict verify_bipartite_demo() {
  ConstructionVerdict v;
  v.family = "bipartite-demo";
  const Graph base = build_complete_bipartite(2, 4);
  const auto d_base = t1_components(base);
  v.checks.push_back(make_check("K_{2,4}: T1 connected", t1_connectivity(d_base).connected,
                                std::to_string(d_base.num_components()) + " components"));

  const Graph minus = without_edge(base, {0, 2});
  const auto d_minus = t1_components(minus);
  const auto idx = std::find(d_minus.non_edges.begin(), d_minus.non_edges.end(), VertexPair{0, 2}) -
                   d_minus.non_edges.begin();
  const bool isolated_02 = static_cast<std::size_t>(idx) < d_minus.non_edges.size() &&
                           d_minus.component_sizes[d_minus.labels[static_cast<std::size_t>(idx)]] == 1;
  v.checks.push_back(make_check("K_{2,4} minus 0-2: T1 disconnected, 0-2 isolated",
                                !t1_connectivity(d_minus).connected && isolated_02,
                                std::to_string(d_minus.num_components()) + " components"));

  const Graph plus = with_edge(base, {0, 1});
  const auto d_plus = t1_components(plus);
  v.checks.push_back(make_check("K_{2,4} plus 0-1: T1 is 6 isolated vertices",
                                d_plus.non_edges.size() == 6 && d_plus.isolated_count == 6 && d_plus.num_squares == 0,
                                std::to_string(d_plus.non_edges.size()) + " vertices, " +
                                    std::to_string(d_plus.num_squares) + " edges"));
  v.certificate = "base:\n" + describe_components(d_base) + "minus 0-2:\n" + describe_components(d_minus) +
                  "plus 0-1:\n" + describe_components(d_plus);
  return v;
}

// Component labels from BFS over the materialized T1.
std::vector<std::uint32_t> bfs_labels(const T1View& t1) {
  const std::uint32_t none = ~std::uint32_t{0};
  std::vector<std::uint32_t> label(t1.vertex_count(), none);
  std::uint32_t next = 0;
  for (std::uint32_t s = 0; s < t1.vertex_count(); ++s) {
    if (label[s] != none) continue;
    std::queue<std::uint32_t> q;
    q.push(s);
    label[s] = next;
    while (!q.empty()) {
      const auto u = q.front();
      q.pop();
      for (auto w : t1.neighbors(u))
        if (label[w] == none) {
          label[w] = next;
          q.push(w);
        }
    }
    ++next;
  }
  return label;
}

bool same_partition(const std::vector<std::uint32_t>& x, const std::vector<std::uint32_t>& y) {
  if (x.size() != y.size()) return false;
  std::map<std::uint32_t, std::uint32_t> fwd, back;
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto [f, f_new] = fwd.emplace(x[i], y[i]);
    auto [b, b_new] = back.emplace(y[i], x[i]);
    if (f->second != y[i] || b->second != x[i]) return false;
  }
  return true;
}

}  // namespace

bool ConstructionVerdict::passed() const {
  return !checks.empty() && std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

const Check* ConstructionVerdict::first_failure() const {
  for (const auto& c : checks)
    if (!c.passed) return &c;
  return nullptr;
}

std::optional<Family> parse_family(const std::string& name) {
  if (name == "g-prime") return Family::GPrime;
  if (name == "g") return Family::G;
  if (name == "ladder") return Family::Ladder;
  if (name == "bipartite-demo") return Family::BipartiteDemo;
  return std::nullopt;
}

ConstructionVerdict verify_construction(Family family, const LadderParams& ladder, std::size_t min_full_support) {
  switch (family) {
    case Family::GPrime: return verify_g_prime();
    case Family::G: return verify_g();
    case Family::Ladder: return verify_ladder(ladder, min_full_support);
    case Family::BipartiteDemo: return verify_bipartite_demo();
  }
  throw Error(ErrorKind::InvalidParams, "unknown family");
}

std::string describe_components(const ComponentDecomposition& d) {
  std::ostringstream os;
  for (auto id : d.nontrivial_ids()) {
    os << "component " << id << " (size " << d.component_sizes[id] << ", support " << d.supports[id].count() << "/"
       << d.n << "):";
    for (const auto& p : d.members(id)) os << ' ' << pair_text(p);
    os << '\n';
  }
  if (d.num_nontrivial() == 0) os << "no non-trivial components\n";
  return os.str();
}

std::optional<OracleFailure> check_oracles(const Graph& g, std::size_t instance) {
  auto fail = [&](std::string check, std::string detail) {
    return OracleFailure{instance, std::move(check), std::move(detail), g};
  };

  const auto fast = enumerate_squares(g);
  const auto brute = enumerate_squares_bruteforce(g);
  if (fast != brute)
    return fail("square enumeration", std::to_string(fast.size()) + " fast vs " + std::to_string(brute.size()) +
                                          " brute force");

  const auto d = t1_components(g);
  if (d.num_squares != fast.size()) return fail("square count", "decomposition counted a different number");
  const T1View t1(g, true);
  if (!same_partition(d.labels, bfs_labels(t1)))
    return fail("components", "union-find and BFS partitions differ");
  if (!check_support_bounds(d).empty()) return fail("support bounds", "|C| >= |supp|/2 or |supp| >= 4 violated");

  for (const auto& sq : fast) {
    const bool by_def = is_bonded_definition(sq, fast);
    const bool by_char = is_bonded_characterization(g, sq);
    if (by_def != by_char)
      return fail("bonded", "square " + pair_text(sq.diag1) + "/" + pair_text(sq.diag2) + ": definition " +
                                (by_def ? "true" : "false") + ", characterization " + (by_char ? "true" : "false"));
  }

  const SGraph s = build_s(g);
  std::uint64_t law = 0;
  for (std::size_t i = 0; i < t1.vertex_count(); ++i) {
    const std::uint64_t deg = t1.degree(i);
    law += deg * (deg - (deg > 0 ? 1 : 0)) / 2;
  }
  std::set<std::pair<std::uint32_t, std::uint32_t>> pairwise;
  for (std::uint32_t i = 0; i < s.squares.size(); ++i)
    for (std::uint32_t j = i + 1; j < s.squares.size(); ++j) {
      const auto& x = s.squares[i];
      const auto& y = s.squares[j];
      if (x.diag1 == y.diag1 || x.diag1 == y.diag2 || x.diag2 == y.diag1 || x.diag2 == y.diag2)
        pairwise.emplace(i, j);
    }
  if (s.edges.size() != law)
    return fail("line-graph law", "|E(S)| = " + std::to_string(s.edges.size()) + ", sum C(deg,2) = " +
                                      std::to_string(law));
  if (std::set<std::pair<std::uint32_t, std::uint32_t>>(s.edges.begin(), s.edges.end()) != pairwise)
    return fail("line-graph law", "S edges differ from pairwise diagonal comparison");
  return std::nullopt;
}

OracleSummary run_oracle_suite(std::size_t n_max, std::size_t trials, std::uint64_t seed) {
  if (n_max < 2 || n_max > 64) throw Error(ErrorKind::InvalidParams, "n_max must be in [2, 64]");
  if (trials == 0) throw Error(ErrorKind::InvalidParams, "trials must be >= 1");
  OracleSummary summary;
  for (std::size_t i = 0; i < trials; ++i) {
    const SamplerSeed s = derive_trial_seed(seed, i);
    const std::size_t n = 2 + static_cast<std::size_t>(mix64(s.key ^ 0x6A09E667F3BCC909ULL) % (n_max - 1));
    const double p = 0.1 * static_cast<double>(1 + i % 9);
    const Graph g = sample_gnp(n, p, s);
    ++summary.instances;
    summary.squares_checked += count_squares(g);
    if (auto f = check_oracles(g, i)) {
      summary.failure = std::move(f);
      break;
    }
  }
  return summary;
}

}  // namespace sqperc
