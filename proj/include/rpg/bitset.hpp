#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <span>
#include <vector>

#include "rpg/kernels.hpp"

namespace rpg {

using simd::Word;

constexpr std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// Fixed-size dynamic bitset with word access for the SIMD kernels.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t bits) : bits_(bits), words_(words_for(bits), 0) {}

  std::size_t size() const { return bits_; }
  std::size_t word_count() const { return words_.size(); }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= Word{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(Word{1} << (i & 63)); }
  void clear() { std::fill(words_.begin(), words_.end(), Word{0}); }

  std::size_t count() const { return simd::popcount(words_); }
  bool any() const { return simd::any(words_); }

  std::span<Word> words() { return words_; }
  std::span<const Word> words() const { return words_; }

  /// Calls f(i) for every set bit in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word x = words_[w];
      while (x != 0) {
        f(w * 64 + static_cast<std::size_t>(std::countr_zero(x)));
        x &= x - 1;
      }
    }
  }

  friend bool operator==(const Bitset&, const Bitset&) = default;

 private:
  std::size_t bits_ = 0;
  std::vector<Word> words_;
};

/// rows x cols bit matrix stored row-major, one padded word run per row.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), stride_(words_for(cols)), data_(rows * stride_, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t stride() const { return stride_; }

  bool test(std::size_t r, std::size_t c) const {
    return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1U;
  }
  void set(std::size_t r, std::size_t c) { data_[r * stride_ + (c >> 6)] |= Word{1} << (c & 63); }

  std::span<Word> row(std::size_t r) { return {data_.data() + r * stride_, stride_}; }
  std::span<const Word> row(std::size_t r) const { return {data_.data() + r * stride_, stride_}; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

}  // namespace rpg
