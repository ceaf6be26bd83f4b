#pragma once

#include <cstddef>
#include <string>

namespace qt::kernels {

// Reduction kernels backing the quadrature and Galerkin assembly loops.
// A scalar reference implementation always exists; a SIMD variant is
// selected once at startup if the CPU supports it.  Variants must agree
// with the reference to ~1e-12 relative (equivalence-tested).

double dot_scalar(const double* a, const double* b, std::size_t n);
double weighted_dot_scalar(const double* w, const double* a, const double* b, std::size_t n);
double sum_scalar(const double* a, std::size_t n);

#if defined(__x86_64__) || defined(_M_X64)
double dot_avx2(const double* a, const double* b, std::size_t n);
double weighted_dot_avx2(const double* w, const double* a, const double* b, std::size_t n);
double sum_avx2(const double* a, std::size_t n);
#endif
#if defined(__aarch64__)
double dot_neon(const double* a, const double* b, std::size_t n);
double weighted_dot_neon(const double* w, const double* a, const double* b, std::size_t n);
double sum_neon(const double* a, std::size_t n);
#endif

// Dispatched entry points.
double dot(const double* a, const double* b, std::size_t n);
double weighted_dot(const double* w, const double* a, const double* b, std::size_t n);
double sum(const double* a, std::size_t n);

// Name of the active backend: "scalar", "avx2", or "neon".
const std::string& active_backend();

}  // namespace qt::kernels
