// Compiled with -mavx2 -mpopcnt; only reached after a runtime CPU check.
#include <immintrin.h>

#include <bit>

#include "kernels_impl.hpp"

namespace rpg::simd {
namespace {

void or_into_avx2(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    _mm256_storeu_si256(d, _mm256_or_si256(_mm256_loadu_si256(d), s));
  }
  for (; i < words; ++i) dst[i] |= src[i];
}

void andnot_into_avx2(Word* dst, const Word* src, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    auto* d = reinterpret_cast<__m256i*>(dst + i);
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
    // andnot(a, b) = ~a & b
    _mm256_storeu_si256(d, _mm256_andnot_si256(s, _mm256_loadu_si256(d)));
  }
  for (; i < words; ++i) dst[i] &= ~src[i];
}

// Nibble-lookup popcount: per-byte counts via vpshufb, summed into four u64
// lanes with vpsadbw.
inline __m256i popcount_lanes(__m256i v) {
  const __m256i lookup = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,  //
                                          0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  const __m256i lo = _mm256_and_si256(v, low_mask);
  const __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  const __m256i bytes =
      _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
  return _mm256_sad_epu8(bytes, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

template <class Combine, class Tail>
std::size_t reduce_popcount(std::size_t words, Combine combine, Tail tail) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) acc = _mm256_add_epi64(acc, popcount_lanes(combine(i)));
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(tail(i)));
  return total;
}

std::size_t popcount_avx2(const Word* a, std::size_t words) {
  return reduce_popcount(
      words,
      [a](std::size_t i) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)); },
      [a](std::size_t i) { return a[i]; });
}

std::size_t and_popcount_avx2(const Word* a, const Word* b, std::size_t words) {
  return reduce_popcount(
      words,
      [a, b](std::size_t i) {
        return _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)),
                                _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)));
      },
      [a, b](std::size_t i) { return a[i] & b[i]; });
}

std::size_t andnot_popcount_avx2(const Word* a, const Word* b, std::size_t words) {
  return reduce_popcount(
      words,
      [a, b](std::size_t i) {
        return _mm256_andnot_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i)),
                                   _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i)));
      },
      [a, b](std::size_t i) { return a[i] & ~b[i]; });
}

bool any_avx2(const Word* a, std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    const __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    if (!_mm256_testz_si256(v, v)) return true;
  }
  for (; i < words; ++i) {
    if (a[i] != 0) return true;
  }
  return false;
}

constexpr KernelTable kAvx2{"avx2",         or_into_avx2,         andnot_into_avx2,
                            popcount_avx2,  and_popcount_avx2,    andnot_popcount_avx2,
                            any_avx2};

}  // namespace

const KernelTable& detail::avx2_table() { return kAvx2; }

}  // namespace rpg::simd
