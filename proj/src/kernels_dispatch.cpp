#include <atomic>
#include <cstdlib>
#include <string_view>

#include "kernels_impl.hpp"

namespace rpg::simd {
namespace {

[[maybe_unused]] bool cpu_has_avx2() {
#if defined(RPG_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

const KernelTable* pick_default() {
  const char* env = std::getenv("RPG_KERNELS");
  if (env != nullptr) {
    const std::string_view want(env);
    for (const KernelTable* t : available_kernels()) {
      if (want == t->name) return t;
    }
  }
  if (const KernelTable* t = avx2_kernels()) return t;
  if (const KernelTable* t = neon_kernels()) return t;
  return &scalar_kernels();
}

std::atomic<const KernelTable*> g_override{nullptr};

}  // namespace

const KernelTable* avx2_kernels() {
#if defined(RPG_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(RPG_HAVE_NEON)
  return &detail::neon_table();  // Advanced SIMD is mandatory on aarch64.
#else
  return nullptr;
#endif
}

std::vector<const KernelTable*> available_kernels() {
  std::vector<const KernelTable*> out{&scalar_kernels()};
  if (const KernelTable* t = avx2_kernels()) out.push_back(t);
  if (const KernelTable* t = neon_kernels()) out.push_back(t);
  return out;
}

const KernelTable& active_kernels() {
  if (const KernelTable* t = g_override.load(std::memory_order_relaxed)) return *t;
  static const KernelTable* const chosen = pick_default();
  return *chosen;
}

void set_active_kernels(const KernelTable* table) {
  g_override.store(table, std::memory_order_relaxed);
}

}  // namespace rpg::simd
