#include "kernels_internal.hpp"

namespace dsta::kernels {

namespace {

double tour_length(const double* d, std::size_t n, const int* tour) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    total += d[static_cast<std::size_t>(tour[i]) * n + static_cast<std::size_t>(tour[i + 1])];
  }
  total += d[static_cast<std::size_t>(tour[n - 1]) * n + static_cast<std::size_t>(tour[0])];
  return total;
}

double quadratic_form(const double* a, std::size_t n, const double* x) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) total += x[i] * a[i * n + j] * x[j];
  }
  return total;
}

double dot(const double* x, const double* y, std::size_t n) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) total += x[i] * y[i];
  return total;
}

double matrix_sum(const double* a, std::size_t n) {
  double total = 0.0;
  for (std::size_t i = 0; i < n * n; ++i) total += a[i];
  return total;
}

double cut_weight(const double* w, std::size_t n, const double* y) {
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) total += w[i * n + j] * (1.0 - y[i] * y[j]);
  }
  return 0.25 * total;
}

double rosenbrock(const double* x, std::size_t n) {
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double valley = x[i + 1] - x[i] * x[i];
    const double offset = x[i] - 1.0;
    total += 100.0 * valley * valley + offset * offset;
  }
  return total;
}

constexpr KernelTable kScalar{Backend::Scalar, tour_length, quadratic_form, dot,
                              matrix_sum,      cut_weight,  rosenbrock};

}  // namespace

const KernelTable& scalar() { return kScalar; }

}  // namespace dsta::kernels
