#include <bit>

#include "kernels_impl.hpp"

namespace rpg::simd {
namespace {

void or_into_scalar(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] |= src[i];
}

void andnot_into_scalar(Word* dst, const Word* src, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) dst[i] &= ~src[i];
}

std::size_t popcount_scalar(const Word* a, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t and_popcount_scalar(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  }
  return total;
}

std::size_t andnot_popcount_scalar(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) {
    total += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  }
  return total;
}

bool any_scalar(const Word* a, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

constexpr KernelTable kScalar{"scalar",           or_into_scalar,         andnot_into_scalar,
                              popcount_scalar,    and_popcount_scalar,    andnot_popcount_scalar,
                              any_scalar};

}  // namespace

const KernelTable& scalar_kernels() { return kScalar; }

}  // namespace rpg::simd
