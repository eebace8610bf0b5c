#include "sqperc/sampler.hpp"

#include <cmath>
#include <string>

#include "sqperc/error.hpp"

namespace sqperc {

Graph sample_gnp(std::size_t n, double p, const SamplerSeed& seed) {
  if (!(p >= 0.0 && p <= 1.0) || std::isnan(p))
    throw Error(ErrorKind::InvalidProbability, "p=" + std::to_string(p));
  GraphBuilder b(n);
  if (p == 0.0 || n < 2) return std::move(b).build();
  const CounterRng rng(seed.key);
  PairIndex k = 0;
  for (Vertex a = 0; a + 1 < n; ++a)
    for (Vertex c = a + 1; c < n; ++c, ++k)
      if (rng.uniform(k) < p) b.add_edge_unchecked(a, c);
  return std::move(b).build();
}

std::uint64_t edge_set_hash(const Graph& g) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  auto feed = [&](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xFF;
      h *= 0x100000001B3ULL;
    }
  };
  feed(g.n());
  for (const auto& e : g.edges()) feed(pair_index_unchecked(e.a, e.b, g.n()));
  return h;
}

}  // namespace sqperc
