#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace sqperc {

using Word = std::uint64_t;
inline constexpr std::size_t kWordBits = 64;

constexpr std::size_t words_for(std::size_t bits) { return (bits + kWordBits - 1) / kWordBits; }

// Calls f(index) for every set bit, in increasing order.
template <class F>
void for_each_bit(std::span<const Word> words, F&& f) {
  for (std::size_t w = 0; w < words.size(); ++w) {
    Word x = words[w];
    while (x != 0) {
      f(w * kWordBits + static_cast<std::size_t>(std::countr_zero(x)));
      x &= x - 1;
    }
  }
}

inline std::size_t popcount(std::span<const Word> words) {
  std::size_t c = 0;
  for (Word w : words) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  const std::size_t k = a.size() < b.size() ? a.size() : b.size();
  for (std::size_t i = 0; i < k; ++i)
    if ((a[i] & b[i]) != 0) return true;
  return false;
}

/// Fixed-size bit vector with word-level access.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_(words_for(size), 0) {}

  std::size_t size() const noexcept { return size_; }
  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  bool test(std::size_t i) const noexcept { return (words_[i / kWordBits] >> (i % kWordBits)) & 1U; }
  void set(std::size_t i) noexcept { words_[i / kWordBits] |= Word{1} << (i % kWordBits); }
  void reset(std::size_t i) noexcept { words_[i / kWordBits] &= ~(Word{1} << (i % kWordBits)); }

  std::size_t count() const noexcept { return popcount(words_); }
  bool none() const noexcept {
    for (Word w : words_)
      if (w != 0) return false;
    return true;
  }
  bool all() const noexcept { return count() == size_; }

  Bitset& operator&=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  template <class F>
  void for_each(F&& f) const {
    for_each_bit(words(), std::forward<F>(f));
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Word> words_;
};

}  // namespace sqperc
