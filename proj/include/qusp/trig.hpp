#pragma once

#include <cmath>

#include "qusp/real.hpp"

namespace qusp {

/// Root-of-unity context q = exp(2*pi*i*p/N), with omega = pi*p/N.
///
/// Only p = 1 is a supported regime; other coprime p are stored and evaluated
/// but flagged by `primitive_p1()` so callers can warn.
struct PhaseParams {
  int N = 2;
  int p = 1;
  double tol = 1e-10;
  int precision_bits = 53;

  template <class Real>
  Real omega() const {
    return pi<Real>() * Real(p) / Real(N);
  }

  bool primitive_p1() const noexcept { return p == 1; }
};

/// Validating constructor. Throws RejectedParameter when N < 2, gcd(p, N) != 1,
/// tol <= 0, or tol is below the working-precision floor 2^(1 - precision_bits).
PhaseParams make_phase_params(int N, int p = 1, double tol = 1e-10,
                              int precision_bits = 53);

/// Smallest tolerance that can be honoured at `precision_bits`.
double tolerance_floor(int precision_bits);

namespace detail {

// sin(pi * r / N) for r in [0, N/2], choosing sin or cos of the smaller angle.
template <class Real>
Real sin_first_quadrant(const Real& r, const Real& n) {
  using std::cos;
  using std::sin;
  if (r == 0) return Real(0);
  const Real half = n / 2;
  if (r == half) return Real(1);
  if (4 * r <= n) return sin(pi<Real>() * r / n);
  return cos(pi<Real>() * (half - r) / n);
}

}  // namespace detail

/// sin(pi * p * x / N). The multiplier p*x is reduced mod 2N before any angle
/// is formed, so integer multiples of N give an exact zero.
template <class Real>
Real sin_om(const PhaseParams& params, const Real& x) {
  using std::fmod;
  const Real n(params.N);
  const Real period = 2 * n;
  Real r = fmod(Real(params.p) * x, period);
  if (r < 0) r += period;
  Real sign(1);
  if (r >= n) {
    r -= n;
    sign = -1;
  }
  if (2 * r > n) r = n - r;
  const Real value = detail::sin_first_quadrant(r, n);
  return value == 0 ? Real(0) : sign * value;
}

/// cos(pi * p * x / N), exact zero when p*x mod N == N/2.
template <class Real>
Real cos_om(const PhaseParams& params, const Real& x) {
  using std::abs;
  using std::fmod;
  const Real n(params.N);
  const Real period = 2 * n;
  Real r = fmod(abs(Real(params.p) * x), period);
  Real sign(1);
  if (r >= n) {
    r -= n;
    sign = -sign;
  }
  if (2 * r > n) {
    r = n - r;
    sign = -sign;
  }
  // cos(pi r / N) = sin(pi (N/2 - r) / N), with N/2 - r in [0, N/2].
  const Real value = detail::sin_first_quadrant(n / 2 - r, n);
  return value == 0 ? Real(0) : sign * value;
}

}  // namespace qusp
