#include "sqperc/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include "sqperc/error.hpp"

namespace sqperc {
namespace {

[[noreturn]] void parse_error(std::size_t line, const std::string& msg) {
  throw Error(ErrorKind::Parse, "line " + std::to_string(line) + ": " + msg);
}

// Exactly two non-negative decimal integers separated by whitespace.
std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_two(std::string_view s) {
  auto skip_ws = [&](std::size_t i) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    return i;
  };
  std::uint64_t vals[2];
  std::size_t i = skip_ws(0);
  for (int k = 0; k < 2; ++k) {
    if (k == 1) {
      const std::size_t j = skip_ws(i);
      if (j == i) return std::nullopt;
      i = j;
    }
    auto [ptr, ec] = std::from_chars(s.data() + i, s.data() + s.size(), vals[k]);
    if (ec != std::errc{} || ptr == s.data() + i) return std::nullopt;
    i = static_cast<std::size_t>(ptr - s.data());
  }
  if (skip_ws(i) != s.size()) return std::nullopt;
  return std::make_pair(vals[0], vals[1]);
}

}  // namespace

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.a << ' ' << e.b << '\n';
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> header;
  std::optional<GraphBuilder> builder;
  std::uint64_t seen = 0;
  std::optional<PairIndex> last;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line[0] == '#') continue;
    if (!header) {
      header = parse_two(line);
      if (!header) parse_error(lineno, "expected header \"n m\"");
      if (header->first > (1U << 16)) parse_error(lineno, "vertex count too large");
      if (header->second > pair_count(header->first)) parse_error(lineno, "edge count exceeds n(n-1)/2");
      builder.emplace(header->first);
      continue;
    }
    if (line.empty() || line == "\r") {
      // Blank lines are only tolerated after the last edge.
      if (seen < header->second) parse_error(lineno, "blank line before all edges were read");
      continue;
    }
    auto uv = parse_two(line);
    if (!uv) parse_error(lineno, "expected \"u v\"");
    if (seen == header->second) parse_error(lineno, "more edge lines than declared");
    const auto [u, v] = *uv;
    if (!(u < v)) parse_error(lineno, "edge must satisfy u < v");
    if (v >= header->first) parse_error(lineno, "vertex out of range");
    const PairIndex idx = pair_index_unchecked(static_cast<Vertex>(u), static_cast<Vertex>(v), header->first);
    if (last && idx <= *last) parse_error(lineno, "edges not strictly sorted by pair index");
    last = idx;
    builder->add_edge_unchecked(static_cast<Vertex>(u), static_cast<Vertex>(v));
    ++seen;
  }
  if (!header) parse_error(lineno + 1, "missing header");
  if (seen != header->second)
    parse_error(lineno + 1, "declared " + std::to_string(header->second) + " edges, found " + std::to_string(seen));
  return std::move(*builder).build();
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  return read_edge_list(is);
}

void save_edge_list(const std::filesystem::path& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::Io, "cannot open " + path.string() + " for writing");
  write_edge_list(out, g);
  if (!out) throw Error(ErrorKind::Io, "write failed for " + path.string());
}

Graph load_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::Io, "cannot open " + path.string());
  return read_edge_list(in);
}

}  // namespace sqperc
