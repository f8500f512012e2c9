#include <arm_neon.h>

#include <bit>

#include "kernels_impl.hpp"

namespace rpg::simd {
namespace {

void or_into_neon(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vorrq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < words; ++i) dst[i] |= src[i];
}

void andnot_into_neon(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  // vbicq(a, b) = a & ~b
  for (; i + 2 <= words; i += 2) vst1q_u64(dst + i, vbicq_u64(vld1q_u64(dst + i), vld1q_u64(src + i)));
  for (; i < words; ++i) dst[i] &= ~src[i];
}

inline std::uint64_t lane_popcount(uint64x2_t v) {
  return vaddlvq_u8(vcntq_u8(vreinterpretq_u8_u64(v)));
}

std::size_t popcount_neon(const Word* a, std::size_t words) {
  std::size_t total = 0, i = 0;
  for (; i + 2 <= words; i += 2) total += lane_popcount(vld1q_u64(a + i));
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i]));
  return total;
}

std::size_t and_popcount_neon(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0, i = 0;
  for (; i + 2 <= words; i += 2) total += lane_popcount(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
  return total;
}

std::size_t andnot_popcount_neon(const Word* a, const Word* b, std::size_t words) {
  std::size_t total = 0, i = 0;
  for (; i + 2 <= words; i += 2) total += lane_popcount(vbicq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & ~b[i]));
  return total;
}

bool any_neon(const Word* a, std::size_t words) {
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    if (vmaxvq_u32(vreinterpretq_u32_u64(vld1q_u64(a + i))) != 0) return true;
  }
  for (; i < words; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

constexpr KernelTable kNeon{"neon",         or_into_neon,         andnot_into_neon,
                            popcount_neon,  and_popcount_neon,    andnot_popcount_neon,
                            any_neon};

}  // namespace

const KernelTable& detail::neon_table() { return kNeon; }

}  // namespace rpg::simd
