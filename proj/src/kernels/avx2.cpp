// Compiled with -mavx2 -mfma. Only reached through dispatch.cpp after a CPU
// feature check.

#include <immintrin.h>

#include <cstdint>

#include "kernels_internal.hpp"

namespace dsta::kernels {

namespace {

inline double hsum(__m256d v) {
  const __m128d lo = _mm256_castpd256_pd128(v);
  const __m128d hi = _mm256_extractf128_pd(v, 1);
  const __m128d pair = _mm_add_pd(lo, hi);
  return _mm_cvtsd_f64(_mm_add_sd(pair, _mm_unpackhi_pd(pair, pair)));
}

double dot(const double* x, const double* y, std::size_t n) {
  __m256d acc0 = _mm256_setzero_pd();
  __m256d acc1 = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
  }
  for (; i + 4 <= n; i += 4) {
    acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
  }
  double total = hsum(_mm256_add_pd(acc0, acc1));
  for (; i < n; ++i) total += x[i] * y[i];
  return total;
}

double quadratic_form(const double* a, std::size_t n, const double* x) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += x[i] * dot(a + i * n, x, n);
  return total;
}

double matrix_sum(const double* a, std::size_t n) {
  const std::size_t count = n * n;
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(a + i));
  double total = hsum(acc);
  for (; i < count; ++i) total += a[i];
  return total;
}

// Each term w_ij (1 - y_i y_j) is exactly 0 or 2 w_ij, so an empty cut sums to 0.
double cut_weight(const double* w, std::size_t n, const double* y) {
  const __m256d one = _mm256_set1_pd(1.0);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* row = w + i * n;
    const __m256d yi = _mm256_set1_pd(y[i]);
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= n; j += 4) {
      const __m256d factor = _mm256_fnmadd_pd(yi, _mm256_loadu_pd(y + j), one);
      acc = _mm256_fmadd_pd(_mm256_loadu_pd(row + j), factor, acc);
    }
    double partial = hsum(acc);
    for (; j < n; ++j) partial += row[j] * (1.0 - y[i] * y[j]);
    total += partial;
  }
  return 0.25 * total;
}

double tour_length(const double* d, std::size_t n, const int* tour) {
  // Gather offsets must fit in int32.
  if (n > 46340) {
    return scalar().tour_length(d, n, tour);
  }
  const __m128i stride = _mm_set1_epi32(static_cast<int>(n));
  __m256d acc = _mm256_setzero_pd();
  std::size_t i = 0;
  for (; i + 5 <= n; i += 4) {
    const __m128i from = _mm_loadu_si128(reinterpret_cast<const __m128i*>(tour + i));
    const __m128i to = _mm_loadu_si128(reinterpret_cast<const __m128i*>(tour + i + 1));
    const __m128i offset = _mm_add_epi32(_mm_mullo_epi32(from, stride), to);
    acc = _mm256_add_pd(acc, _mm256_i32gather_pd(d, offset, 8));
  }
  double total = hsum(acc);
  for (; i + 1 < n; ++i) {
    total += d[static_cast<std::size_t>(tour[i]) * n + static_cast<std::size_t>(tour[i + 1])];
  }
  total += d[static_cast<std::size_t>(tour[n - 1]) * n + static_cast<std::size_t>(tour[0])];
  return total;
}

double rosenbrock(const double* x, std::size_t n) {
  if (n < 2) return 0.0;
  const __m256d hundred = _mm256_set1_pd(100.0);
  const __m256d one = _mm256_set1_pd(1.0);
  __m256d acc = _mm256_setzero_pd();
  const std::size_t terms = n - 1;
  std::size_t i = 0;
  for (; i + 4 <= terms; i += 4) {
    const __m256d xi = _mm256_loadu_pd(x + i);
    const __m256d next = _mm256_loadu_pd(x + i + 1);
    const __m256d valley = _mm256_sub_pd(next, _mm256_mul_pd(xi, xi));
    const __m256d offset = _mm256_sub_pd(xi, one);
    const __m256d term = _mm256_add_pd(_mm256_mul_pd(hundred, _mm256_mul_pd(valley, valley)),
                                       _mm256_mul_pd(offset, offset));
    acc = _mm256_add_pd(acc, term);
  }
  double total = hsum(acc);
  for (; i < terms; ++i) {
    const double valley = x[i + 1] - x[i] * x[i];
    const double offset = x[i] - 1.0;
    total += 100.0 * valley * valley + offset * offset;
  }
  return total;
}

constexpr KernelTable kAvx2{Backend::Avx2, tour_length, quadratic_form, dot,
                            matrix_sum,    cut_weight,  rosenbrock};

}  // namespace

const KernelTable& detail::avx2_table() { return kAvx2; }

}  // namespace dsta::kernels
