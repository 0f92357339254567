#pragma once

// Word-level helpers over fixed-width bit rows. Rows are spans of 64-bit
// words; every row touched by one call has the same word count.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace gpnum::bits {

using Word = std::uint64_t;

constexpr std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

inline bool test(std::span<const Word> row, std::size_t i) {
  return (row[i >> 6] >> (i & 63)) & 1U;
}
inline void set(std::span<Word> row, std::size_t i) { row[i >> 6] |= Word{1} << (i & 63); }
inline void reset(std::span<Word> row, std::size_t i) { row[i >> 6] &= ~(Word{1} << (i & 63)); }

inline std::size_t count(std::span<const Word> row) {
  std::size_t c = 0;
  for (Word w : row) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline bool any(std::span<const Word> row) {
  for (Word w : row)
    if (w) return true;
  return false;
}

inline bool intersects(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & b[i]) return true;
  return false;
}

/// a ⊆ b
inline bool subset_of(std::span<const Word> a, std::span<const Word> b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] & ~b[i]) return false;
  return true;
}

/// Calls f(index) for every set bit in increasing order.
template <typename F>
void for_each(std::span<const Word> row, F&& f) {
  for (std::size_t wi = 0; wi < row.size(); ++wi) {
    Word w = row[wi];
    while (w) {
      const int b = std::countr_zero(w);
      f(wi * 64 + static_cast<std::size_t>(b));
      w &= w - 1;
    }
  }
}

}  // namespace gpnum::bits
