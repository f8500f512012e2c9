#pragma once

#include "rpg/kernels.hpp"

namespace rpg::simd::detail {

// Defined by the per-ISA translation units that are part of the build.
const KernelTable& avx2_table();
const KernelTable& neon_table();

}  // namespace rpg::simd::detail
