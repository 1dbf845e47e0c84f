#pragma once

#include <cstddef>
#include <string_view>

// Inner loops of the objective functions. Every kernel has a scalar reference
// implementation; SIMD variants are compiled in separate translation units and
// selected at runtime by CPU feature detection. The variants are checked for
// equivalence against the scalar reference in tests/kernels_test.cpp.
//
// Matrices are dense, row-major, n x n.

namespace dsta::kernels {

enum class Backend { Scalar, Avx2 };

struct KernelTable {
  Backend backend;

  // Closed-tour length: sum of d[tour[i], tour[i+1]] plus d[tour[n-1], tour[0]].
  double (*tour_length)(const double* distances, std::size_t n, const int* tour);

  // x^T A x.
  double (*quadratic_form)(const double* a, std::size_t n, const double* x);

  // sum_i x[i] * y[i].
  double (*dot)(const double* x, const double* y, std::size_t n);

  // sum_i sum_j a[i][j].
  double (*matrix_sum)(const double* a, std::size_t n);

  // (1/4) sum_i sum_j w[i][j] (1 - y[i] y[j]).
  double (*cut_weight)(const double* w, std::size_t n, const double* y);

  // sum_{i<n-1} 100 (x[i+1] - x[i]^2)^2 + (x[i] - 1)^2.
  double (*rosenbrock)(const double* x, std::size_t n);
};

const KernelTable& scalar();

// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2/FMA.
const KernelTable* avx2();

// The table objective functions use. Defaults to the widest supported
// backend; override with select().
const KernelTable& active();

// Throws dsta::UnsupportedType if the backend is unavailable on this CPU.
void select(Backend backend);

std::string_view to_string(Backend backend) noexcept;

}  // namespace dsta::kernels
