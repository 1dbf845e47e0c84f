#pragma once

#include "dsta/kernels.hpp"

namespace dsta::kernels::detail {

// Defined in avx2.cpp when DSTA_HAVE_AVX2 is set; does not check the CPU.
const KernelTable& avx2_table();

}  // namespace dsta::kernels::detail
