#pragma once

// Word-level bitset kernels used by the neighborhood, expansion and
// rainbow-reachability inner loops. A scalar reference table always exists;
// AVX2 (x86-64) and NEON (aarch64) tables are compiled when the toolchain
// supports them and selected at runtime.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace rpg::simd {

using Word = std::uint64_t;

struct KernelTable {
  const char* name;
  // dst |= src
  void (*or_into)(Word* dst, const Word* src, std::size_t words);
  // dst &= ~src
  void (*andnot_into)(Word* dst, const Word* src, std::size_t words);
  std::size_t (*popcount)(const Word* a, std::size_t words);
  // |a & b|
  std::size_t (*and_popcount)(const Word* a, const Word* b, std::size_t words);
  // |a & ~b|
  std::size_t (*andnot_popcount)(const Word* a, const Word* b, std::size_t words);
  bool (*any)(const Word* a, std::size_t words);
};

const KernelTable& scalar_kernels();

/// nullptr when not compiled in or when the running CPU lacks the extension.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

/// Every table usable on this machine, scalar first.
std::vector<const KernelTable*> available_kernels();

/// The table used by the library. Picks the widest available variant on first
/// call; the environment variable RPG_KERNELS=scalar|avx2|neon overrides.
const KernelTable& active_kernels();

/// Forces a specific table (tests, benchmarks). Passing nullptr restores the
/// automatic choice.
void set_active_kernels(const KernelTable* table);

inline void or_into(std::span<Word> dst, std::span<const Word> src) {
  active_kernels().or_into(dst.data(), src.data(), dst.size());
}
inline void andnot_into(std::span<Word> dst, std::span<const Word> src) {
  active_kernels().andnot_into(dst.data(), src.data(), dst.size());
}
inline std::size_t popcount(std::span<const Word> a) {
  return active_kernels().popcount(a.data(), a.size());
}
inline std::size_t and_popcount(std::span<const Word> a, std::span<const Word> b) {
  return active_kernels().and_popcount(a.data(), b.data(), a.size());
}
inline std::size_t andnot_popcount(std::span<const Word> a, std::span<const Word> b) {
  return active_kernels().andnot_popcount(a.data(), b.data(), a.size());
}
inline bool any(std::span<const Word> a) { return active_kernels().any(a.data(), a.size()); }

}  // namespace rpg::simd
