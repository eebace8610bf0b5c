#pragma once

#include <cstddef>
#include <cstdint>

#include "sqperc/graph.hpp"

namespace sqperc {

/// SplitMix64 finalizer (Steele, Lea, Flood). Bijective on 64-bit words.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x ^= x >> 30;
  x *= 0xBF58476D1CE4E5B9ULL;
  x ^= x >> 27;
  x *= 0x94D049BB133111EBULL;
  x ^= x >> 31;
  return x;
}

/// Counter-based generator: the k-th draw of a stream is mix64(key + (k + 1) * golden_gamma).
/// Draws can be taken in any order; no state is shared between streams.
class CounterRng {
 public:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

  explicit constexpr CounterRng(std::uint64_t key) noexcept : key_(key) {}

  constexpr std::uint64_t at(std::uint64_t counter) const noexcept { return mix64(key_ + (counter + 1) * kGamma); }
  /// Uniform in [0, 1) with 53 bits of resolution.
  constexpr double uniform(std::uint64_t counter) const noexcept {
    return static_cast<double>(at(counter) >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t key_;
};

/// Identifies one Monte Carlo trial. The stream key depends only on (master, trial).
struct SamplerSeed {
  std::uint64_t master = 0;
  std::uint64_t trial = 0;
  std::uint64_t key = 0;

  friend constexpr bool operator==(const SamplerSeed&, const SamplerSeed&) = default;
};

/// key = mix64(mix64(master) ^ mix64(trial + 0xD1B54A32D192ED03)).
constexpr SamplerSeed derive_trial_seed(std::uint64_t master, std::uint64_t trial) noexcept {
  return {master, trial, mix64(mix64(master) ^ mix64(trial + 0xD1B54A32D192ED03ULL))};
}

/// G(n, p): pair with pair index k is an edge iff CounterRng(seed.key).uniform(k) < p.
/// Graphs drawn with the same seed are nested in p. Throws InvalidProbability.
Graph sample_gnp(std::size_t n, double p, const SamplerSeed& seed);

/// FNV-1a over the sorted edge list; used to compare samples.
std::uint64_t edge_set_hash(const Graph& g);

}  // namespace sqperc
