#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference template that
// works for any scalar type, and double-precision AVX2/FMA variants selected at
// runtime. The variants are not bit-identical to the reference (FMA rounds
// once); tests bound the difference.

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <type_traits>

namespace qusp::kernels {

enum class Backend { Scalar, Avx2 };

std::string_view backend_name(Backend backend) noexcept;

/// Best backend the running CPU and this build support.
Backend detected_backend() noexcept;

/// Backend used by the dispatching front-ends: the override if set, else the
/// detected one.
Backend active_backend() noexcept;

/// Pins the dispatch backend (nullopt restores detection). An override the CPU
/// cannot run falls back to scalar.
void force_backend(std::optional<Backend> backend) noexcept;

namespace scalar {

/// out[n * points + s] = P_n(x_s) for n < degrees, where P_0 = 1, P_1 = x and
/// P_{n+1} = x P_n - u_n P_{n-1}. `u` must hold indices up to degrees - 2.
template <class Real>
void monic_table(std::span<const Real> u, std::span<const Real> x,
                 std::size_t degrees, std::span<Real> out) {
  const std::size_t points = x.size();
  if (degrees == 0) return;
  for (std::size_t s = 0; s < points; ++s) out[s] = Real(1);
  if (degrees == 1) return;
  for (std::size_t s = 0; s < points; ++s) out[points + s] = x[s];
  for (std::size_t n = 1; n + 1 < degrees; ++n) {
    const Real* prev = out.data() + (n - 1) * points;
    const Real* cur = out.data() + n * points;
    Real* next = out.data() + (n + 1) * points;
    for (std::size_t s = 0; s < points; ++s) {
      next[s] = x[s] * cur[s] - u[n] * prev[s];
    }
  }
}

/// gram[n * degrees + m] = sum_s table[n][s] table[m][s] w[s].
template <class Real>
void weighted_gram(std::span<const Real> table, std::size_t degrees,
                   std::span<const Real> w, std::span<Real> gram) {
  const std::size_t points = w.size();
  for (std::size_t n = 0; n < degrees; ++n) {
    const Real* rn = table.data() + n * points;
    for (std::size_t m = 0; m <= n; ++m) {
      const Real* rm = table.data() + m * points;
      Real acc(0);
      for (std::size_t s = 0; s < points; ++s) acc += rn[s] * w[s] * rm[s];
      gram[n * degrees + m] = acc;
      gram[m * degrees + n] = acc;
    }
  }
}

/// c = a * b for row-major n x n matrices.
template <class Real>
void matmul(std::span<const Real> a, std::span<const Real> b, std::size_t n,
            std::span<Real> c) {
  for (std::size_t i = 0; i < n * n; ++i) c[i] = Real(0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Real aik = a[i * n + k];
      if (aik == 0) continue;
      for (std::size_t j = 0; j < n; ++j) c[i * n + j] += aik * b[k * n + j];
    }
  }
}

}  // namespace scalar

namespace avx2 {

/// True when this build contains the AVX2 unit.
bool compiled() noexcept;

void monic_table(std::span<const double> u, std::span<const double> x,
                 std::size_t degrees, std::span<double> out);
void weighted_gram(std::span<const double> table, std::size_t degrees,
                   std::span<const double> w, std::span<double> gram);
void matmul(std::span<const double> a, std::span<const double> b, std::size_t n,
            std::span<double> c);

}  // namespace avx2

template <class Real>
void monic_table(std::span<const Real> u, std::span<const Real> x,
                 std::size_t degrees, std::span<Real> out) {
  if constexpr (std::is_same_v<Real, double>) {
    if (active_backend() == Backend::Avx2) return avx2::monic_table(u, x, degrees, out);
  }
  scalar::monic_table<Real>(u, x, degrees, out);
}

template <class Real>
void weighted_gram(std::span<const Real> table, std::size_t degrees,
                   std::span<const Real> w, std::span<Real> gram) {
  if constexpr (std::is_same_v<Real, double>) {
    if (active_backend() == Backend::Avx2) return avx2::weighted_gram(table, degrees, w, gram);
  }
  scalar::weighted_gram<Real>(table, degrees, w, gram);
}

template <class Real>
void matmul(std::span<const Real> a, std::span<const Real> b, std::size_t n,
            std::span<Real> c) {
  if constexpr (std::is_same_v<Real, double>) {
    if (active_backend() == Backend::Avx2) return avx2::matmul(a, b, n, c);
  }
  scalar::matmul<Real>(a, b, n, c);
}

}  // namespace qusp::kernels
