#include "qusp/kernels.hpp"

#include <atomic>

namespace qusp::kernels {

namespace {

// -1: no override; otherwise the Backend value.
std::atomic<int> g_override{-1};

bool cpu_has_avx2() noexcept {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

}  // namespace

std::string_view backend_name(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar:
      return "scalar";
    case Backend::Avx2:
      return "avx2";
  }
  return "unknown";
}

Backend detected_backend() noexcept {
  static const Backend detected =
      avx2::compiled() && cpu_has_avx2() ? Backend::Avx2 : Backend::Scalar;
  return detected;
}

Backend active_backend() noexcept {
  const int forced = g_override.load(std::memory_order_relaxed);
  if (forced < 0) return detected_backend();
  const auto backend = static_cast<Backend>(forced);
  if (backend == Backend::Avx2 && detected_backend() != Backend::Avx2) {
    return Backend::Scalar;
  }
  return backend;
}

void force_backend(std::optional<Backend> backend) noexcept {
  g_override.store(backend ? static_cast<int>(*backend) : -1,
                   std::memory_order_relaxed);
}

#if !defined(QUSP_HAVE_AVX2)
namespace avx2 {

bool compiled() noexcept { return false; }

void monic_table(std::span<const double> u, std::span<const double> x,
                 std::size_t degrees, std::span<double> out) {
  scalar::monic_table<double>(u, x, degrees, out);
}

void weighted_gram(std::span<const double> table, std::size_t degrees,
                   std::span<const double> w, std::span<double> gram) {
  scalar::weighted_gram<double>(table, degrees, w, gram);
}

void matmul(std::span<const double> a, std::span<const double> b, std::size_t n,
            std::span<double> c) {
  scalar::matmul<double>(a, b, n, c);
}

}  // namespace avx2
#endif

}  // namespace qusp::kernels
