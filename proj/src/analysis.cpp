#include "sqperc/analysis.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <sstream>

#include "sqperc/error.hpp"
#include "sqperc/union_find.hpp"

namespace sqperc {
namespace {

constexpr std::uint32_t kUnset = std::numeric_limits<std::uint32_t>::max();

std::pair<std::uint64_t, std::uint64_t> top_two(std::span<const std::uint64_t> sizes, bool nontrivial_only) {
  std::uint64_t first = 0, second = 0;
  for (auto s : sizes) {
    if (nontrivial_only && s < 2) continue;
    if (s > first) {
      second = first;
      first = s;
    } else if (s > second) {
      second = s;
    }
  }
  return {first, second};
}

// Bit rows of T1 adjacency indexed by non-edge rank.
struct T1Rows {
  std::size_t count = 0;
  std::size_t words = 0;
  std::vector<Word> bits;

  std::span<const Word> row(std::size_t i) const { return {bits.data() + i * words, words}; }
  bool test(std::size_t i, std::size_t j) const { return (bits[i * words + j / kWordBits] >> (j % kWordBits)) & 1U; }
};

std::vector<std::uint32_t> rank_by_pair_index(const Graph& g) {
  std::vector<std::uint32_t> rank(pair_count(g.n()), kUnset);
  std::uint32_t next = 0;
  const auto n = static_cast<Vertex>(g.n());
  PairIndex k = 0;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b, ++k)
      if (!g.adjacent(a, b)) rank[k] = next++;
  return rank;
}

void require_nonempty_t1(const Graph& g) {
  if (pair_count(g.n()) == g.m()) throw Error(ErrorKind::CompleteGraph, "T1 has no vertices");
}

}  // namespace

std::size_t ComponentDecomposition::num_nontrivial() const noexcept {
  return static_cast<std::size_t>(std::count_if(component_sizes.begin(), component_sizes.end(),
                                                [](std::uint64_t s) { return s >= 2; }));
}

std::vector<std::uint32_t> ComponentDecomposition::nontrivial_ids() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < component_sizes.size(); ++i)
    if (component_sizes[i] >= 2) out.push_back(i);
  return out;
}

std::vector<std::uint32_t> ComponentDecomposition::full_support_ids() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 0; i < component_sizes.size(); ++i)
    if (component_sizes[i] >= 2 && supports[i].size() == n && supports[i].all()) out.push_back(i);
  return out;
}

std::vector<VertexPair> ComponentDecomposition::members(std::uint32_t id) const {
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == id) out.push_back(non_edges[i]);
  return out;
}

std::uint64_t ComponentDecomposition::largest_nontrivial() const { return top_two(component_sizes, true).first; }
std::uint64_t ComponentDecomposition::second_largest_nontrivial() const {
  return top_two(component_sizes, true).second;
}

ComponentDecomposition t1_components(const Graph& g) {
  const std::size_t n = g.n();
  ComponentDecomposition d;
  d.n = n;
  d.num_edges = g.m();

  UnionFind uf(pair_count(n));
  // Squares arrive grouped by their first diagonal, so its root is carried across the group.
  VertexPair current{0, 0};
  std::uint32_t root = 0;
  for_each_square(g, [&](VertexPair f, VertexPair h) {
    if (d.num_squares == 0 || f != current) {
      current = f;
      root = uf.find(static_cast<std::uint32_t>(pair_index_unchecked(f.a, f.b, n)));
    }
    ++d.num_squares;
    root = uf.unite_root(root, static_cast<std::uint32_t>(pair_index_unchecked(h.a, h.b, n)));
  });

  d.non_edges = non_edges(g);
  d.labels.resize(d.non_edges.size());
  std::vector<std::uint32_t> label_of_root(pair_count(n), kUnset);
  for (std::size_t i = 0; i < d.non_edges.size(); ++i) {
    const auto& p = d.non_edges[i];
    const auto root = uf.find(static_cast<std::uint32_t>(pair_index_unchecked(p.a, p.b, n)));
    if (label_of_root[root] == kUnset) {
      label_of_root[root] = static_cast<std::uint32_t>(d.component_sizes.size());
      d.component_sizes.push_back(uf.set_size(root));
    }
    d.labels[i] = label_of_root[root];
  }

  d.supports.resize(d.component_sizes.size());
  for (std::size_t id = 0; id < d.component_sizes.size(); ++id)
    if (d.component_sizes[id] >= 2) d.supports[id] = Bitset(n);
    else ++d.isolated_count;
  for (std::size_t i = 0; i < d.non_edges.size(); ++i) {
    auto& s = d.supports[d.labels[i]];
    if (s.size() == 0) continue;
    s.set(d.non_edges[i].a);
    s.set(d.non_edges[i].b);
  }

  std::tie(d.largest, d.second_largest) = top_two(d.component_sizes, false);
  return d;
}

Connectivity t1_connectivity(const ComponentDecomposition& d) {
  Connectivity c;
  c.degenerate = d.non_edges.size() <= 1;
  c.connected = d.num_components() <= 1;
  return c;
}

Connectivity s_connectivity(const ComponentDecomposition& d) {
  Connectivity c;
  c.degenerate = d.num_squares <= 1;
  c.connected = d.num_nontrivial() <= 1;
  return c;
}

bool is_t1_connected(const Graph& g) {
  require_nonempty_t1(g);
  return t1_connectivity(t1_components(g)).connected;
}

bool is_s_connected(const Graph& g) { return s_connectivity(t1_components(g)).connected; }

std::uint64_t count_no_common_neighbour(const Graph& g) {
  std::uint64_t count = 0;
  const auto n = static_cast<Vertex>(g.n());
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (!g.adjacent(a, b) && !intersects(g.row(a), g.row(b))) ++count;
  return count;
}

std::uint64_t second_largest_component_size(const ComponentDecomposition& d) { return d.second_largest; }

bool t1_diameter_at_most_two(const Graph& g, std::size_t vertex_cap) {
  require_nonempty_t1(g);
  const std::size_t count = pair_count(g.n()) - g.m();
  if (count > vertex_cap)
    throw Error(ErrorKind::CapExceeded,
                std::to_string(count) + " T1 vertices exceed cap " + std::to_string(vertex_cap));
  const auto rank = rank_by_pair_index(g);
  T1Rows rows{count, words_for(count), {}};
  rows.bits.assign(count * rows.words, 0);
  const std::size_t n = g.n();
  for_each_square(g, [&](VertexPair f, VertexPair h) {
    const std::size_t i = rank[pair_index_unchecked(f.a, f.b, n)];
    const std::size_t j = rank[pair_index_unchecked(h.a, h.b, n)];
    rows.bits[i * rows.words + j / kWordBits] |= Word{1} << (j % kWordBits);
    rows.bits[j * rows.words + i / kWordBits] |= Word{1} << (i % kWordBits);
  });
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = i + 1; j < count; ++j)
      if (!rows.test(i, j) && !intersects(rows.row(i), rows.row(j))) return false;
  return true;
}

std::optional<std::uint32_t> t1_diameter(const Graph& g, std::size_t vertex_cap) {
  require_nonempty_t1(g);
  const std::size_t count = pair_count(g.n()) - g.m();
  if (count > vertex_cap)
    throw Error(ErrorKind::CapExceeded,
                std::to_string(count) + " T1 vertices exceed cap " + std::to_string(vertex_cap));
  const T1View view(g, true);
  std::uint32_t diameter = 0;
  std::vector<std::uint32_t> dist(count);
  std::deque<std::uint32_t> queue;
  for (std::uint32_t s = 0; s < count; ++s) {
    std::fill(dist.begin(), dist.end(), kUnset);
    dist[s] = 0;
    queue.assign(1, s);
    std::size_t reached = 1;
    while (!queue.empty()) {
      const auto u = queue.front();
      queue.pop_front();
      for (auto v : view.neighbors(u))
        if (dist[v] == kUnset) {
          dist[v] = dist[u] + 1;
          diameter = std::max(diameter, dist[v]);
          ++reached;
          queue.push_back(v);
        }
    }
    if (reached != count) return std::nullopt;
  }
  return diameter;
}

bool is_bonded_definition(const InducedSquare& sq, std::span<const InducedSquare> all_squares) {
  for (const auto& other : all_squares) {
    if (other == sq) continue;
    int shared = 0;
    for (Vertex v : other.vertices) shared += sq.contains(v) ? 1 : 0;
    if (shared == 3) return true;
  }
  return false;
}

bool is_bonded_characterization(const Graph& g, const InducedSquare& sq) {
  const auto ra = g.row(sq.diag1.a), rb = g.row(sq.diag1.b);
  const auto rc = g.row(sq.diag2.a), rd = g.row(sq.diag2.b);
  Bitset witnesses(g.n());
  auto w = witnesses.words();
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = (ra[i] & rb[i]) ^ (rc[i] & rd[i]);
  for (Vertex v : sq.vertices) witnesses.reset(v);
  return !witnesses.none();
}

BondedReport bonded_report(const Graph& g) {
  BondedReport r;
  for_each_square(g, [&](VertexPair f, VertexPair h) {
    ++r.total_squares;
    const auto sq = InducedSquare::from_diagonals(f, h);
    if (!is_bonded_characterization(g, sq)) r.non_bonded.push_back(sq);
  });
  r.all_bonded = r.non_bonded.empty();
  r.vacuous = r.total_squares == 0;
  return r;
}

std::uint64_t count_non_bonded(const Graph& g) {
  const std::size_t words = g.words_per_row();
  std::uint64_t count = 0;
  for_each_square(g, [&](VertexPair f, VertexPair h) {
    const auto ra = g.row(f.a), rb = g.row(f.b), rc = g.row(h.a), rd = g.row(h.b);
    // The four square vertices always sit in the symmetric difference; mask them out.
    const std::array<Vertex, 4> own{f.a, f.b, h.a, h.b};
    for (std::size_t i = 0; i < words; ++i) {
      Word x = (ra[i] & rb[i]) ^ (rc[i] & rd[i]);
      for (Vertex v : own)
        if (v / kWordBits == i) x &= ~(Word{1} << (v % kWordBits));
      if (x != 0) return;
    }
    ++count;
  });
  return count;
}

std::vector<std::uint32_t> check_extremal_bound(const Graph& g, const ComponentDecomposition& d) {
  std::vector<std::uint32_t> violations;
  for (auto id : d.nontrivial_ids()) {
    const auto& supp = d.supports[id];
    const auto size = static_cast<std::int64_t>(supp.count());
    if (static_cast<std::int64_t>(edges_within(g, supp)) < 2 * size - 4) violations.push_back(id);
  }
  return violations;
}

std::vector<std::uint32_t> check_support_bounds(const ComponentDecomposition& d) {
  std::vector<std::uint32_t> violations;
  for (auto id : d.nontrivial_ids()) {
    const std::uint64_t supp = d.supports[id].count();
    if (supp < 4 || d.component_sizes[id] < (supp + 1) / 2) violations.push_back(id);
  }
  return violations;
}

AnalysisReport analyze(const Graph& g) {
  const auto d = t1_components(g);
  AnalysisReport r;
  r.n = g.n();
  r.m = g.m();
  r.num_squares = d.num_squares;
  r.num_components = d.num_components();
  r.num_nontrivial = d.num_nontrivial();
  r.largest = d.largest;
  r.second_largest = d.second_largest;
  r.isolated_count = d.isolated_count;
  r.full_support_component_ids = d.full_support_ids();
  const auto t1 = t1_connectivity(d);
  r.t1_connected = t1.connected;
  r.t1_empty = d.non_edges.empty();
  const auto s = s_connectivity(d);
  r.s_connected = s.connected;
  r.s_degenerate = s.degenerate;
  r.non_bonded_count = count_non_bonded(g);
  r.all_bonded = r.non_bonded_count == 0;
  r.extremal_violations = check_extremal_bound(g, d);
  return r;
}

nlohmann::json to_json(const AnalysisReport& r) {
  return {
      {"schema_version", AnalysisReport::kSchemaVersion},
      {"n", r.n},
      {"m", r.m},
      {"numSquares", r.num_squares},
      {"numComponents", r.num_components},
      {"numNontrivial", r.num_nontrivial},
      {"largest", r.largest},
      {"secondLargest", r.second_largest},
      {"isolatedCount", r.isolated_count},
      {"fullSupportComponentIds", r.full_support_component_ids},
      {"t1Connected", r.t1_connected},
      {"t1Empty", r.t1_empty},
      {"sConnected", r.s_connected},
      {"sDegenerate", r.s_degenerate},
      {"allBonded", r.all_bonded},
      {"nonBondedCount", r.non_bonded_count},
      {"extremalViolations", r.extremal_violations},
  };
}

std::string to_text(const AnalysisReport& r) {
  std::ostringstream os;
  os << "graph: n=" << r.n << " m=" << r.m << "\n"
     << "induced squares: " << r.num_squares << "\n"
     << "T1 components: " << r.num_components << " (" << r.num_nontrivial << " non-trivial, " << r.isolated_count
     << " isolated)\n"
     << "largest: " << r.largest << ", second largest: " << r.second_largest << "\n"
     << "full-support components: " << r.full_support_component_ids.size() << "\n"
     << "T1 connected: " << (r.t1_connected ? "yes" : "no") << (r.t1_empty ? " (empty)" : "") << "\n"
     << "S connected: " << (r.s_connected ? "yes" : "no") << (r.s_degenerate ? " (at most one square)" : "") << "\n"
     << "non-bonded squares: " << r.non_bonded_count << "\n"
     << "extremal bound violations: " << r.extremal_violations.size() << "\n";
  return os.str();
}

}  // namespace sqperc
