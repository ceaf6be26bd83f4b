#include <quarttrace/kernels.hpp>

namespace qt::kernels {

namespace {

using DotFn = double (*)(const double*, const double*, std::size_t);
using WDotFn = double (*)(const double*, const double*, const double*, std::size_t);
using SumFn = double (*)(const double*, std::size_t);

struct Backend {
  DotFn dot = dot_scalar;
  WDotFn wdot = weighted_dot_scalar;
  SumFn sum = sum_scalar;
  std::string name = "scalar";
};

Backend pick() {
  Backend b;
#if defined(__x86_64__) || defined(_M_X64)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    b = Backend{dot_avx2, weighted_dot_avx2, sum_avx2, "avx2"};
  }
#elif defined(__aarch64__)
  b = Backend{dot_neon, weighted_dot_neon, sum_neon, "neon"};
#endif
  return b;
}

const Backend& backend() {
  static const Backend b = pick();
  return b;
}

}  // namespace

double dot(const double* a, const double* b, std::size_t n) { return backend().dot(a, b, n); }
double weighted_dot(const double* w, const double* a, const double* b, std::size_t n) {
  return backend().wdot(w, a, b, n);
}
double sum(const double* a, std::size_t n) { return backend().sum(a, n); }
const std::string& active_backend() { return backend().name; }

}  // namespace qt::kernels
