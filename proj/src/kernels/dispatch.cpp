#include <atomic>

#include "dsta/errors.hpp"
#include "kernels_internal.hpp"

namespace dsta::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(DSTA_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable* detect() {
#if defined(DSTA_HAVE_AVX2)
  if (cpu_has_avx2()) return &detail::avx2_table();
#endif
  return &scalar();
}

std::atomic<const KernelTable*>& current() {
  static std::atomic<const KernelTable*> table{detect()};
  return table;
}

}  // namespace

const KernelTable* avx2() {
#if defined(DSTA_HAVE_AVX2)
  static const bool supported = cpu_has_avx2();
  if (supported) return &detail::avx2_table();
#endif
  return nullptr;
}

const KernelTable& active() { return *current().load(std::memory_order_acquire); }

void select(Backend backend) {
  const KernelTable* table = backend == Backend::Scalar ? &scalar() : avx2();
  if (table == nullptr) throw UnsupportedType("AVX2 kernels are not available on this CPU");
  current().store(table, std::memory_order_release);
}

std::string_view to_string(Backend backend) noexcept {
  return backend == Backend::Scalar ? "scalar" : "avx2";
}

}  // namespace dsta::kernels
