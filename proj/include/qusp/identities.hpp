#pragma once

#include <cmath>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "qusp/error.hpp"
#include "qusp/trig.hpp"

namespace qusp {

enum class Parity { Even, Odd };

/// One instance of a finite sine-product sum identity. Even parity, index k,
/// is the sum of the j = 2k weights; odd parity the sum of the j = 2k+1
/// weights. The base sums are reported as (Even, k = 1) and (Odd, k = 0).
template <class Real>
struct IdentityCase {
  int N = 0;
  Parity parity = Parity::Even;
  int k = 0;
  Real lhs{};
  Real rhs{};
  Real rel_residual{};
  // Odd identity with N - 2k - 1 < 0: the sum is empty and nothing is asserted.
  bool degenerate = false;
  // True when |rhs| was too small for a relative comparison.
  bool absolute = false;

  bool passes(double tol) const { return degenerate || rel_residual <= Real(tol); }
};

namespace detail {

template <class Real>
void finish_case(IdentityCase<Real>& c) {
  using std::abs;
  using std::sqrt;
  const Real tiny = sqrt(std::numeric_limits<Real>::min());
  const Real diff = abs(c.lhs - c.rhs);
  if (abs(c.rhs) < tiny) {
    c.absolute = true;
    c.rel_residual = diff;
  } else {
    c.rel_residual = diff / abs(c.rhs);
  }
}

}  // namespace detail

/// sum_{r=0}^{N-2k} s_{r+k} s_{r+1}...s_{r+2k-1} = 2N s_{k+1}...s_{2k-1} / (4^k s_1...s_{k-1}),
/// 2 <= k <= floor(N/2).
template <class Real>
IdentityCase<Real> check_even_identity(const PhaseParams& params, int k) {
  const int N = params.N;
  if (k < 2 || k > N / 2) {
    throw RangeError("even identity needs 2 <= k <= N/2, got k=" + std::to_string(k) +
                     " (N=" + std::to_string(N) + ")");
  }
  auto s_ = [&](int i) { return sin_om<Real>(params, Real(i)); };
  IdentityCase<Real> c{N, Parity::Even, k};
  c.lhs = Real(0);
  for (int r = 0; r <= N - 2 * k; ++r) {
    Real term = s_(r + k);
    for (int i = 1; i <= 2 * k - 1; ++i) term *= s_(r + i);
    c.lhs += term;
  }
  Real num = Real(2 * N);
  Real den(1);
  for (int i = k + 1; i <= 2 * k - 1; ++i) num *= s_(i);
  for (int i = 0; i < k; ++i) den *= 4;
  for (int i = 1; i <= k - 1; ++i) den *= s_(i);
  c.rhs = num / den;
  detail::finish_case(c);
  return c;
}

/// sum_{r=0}^{N-2k-1} s_{r+k+1/2} s_{r+1}...s_{r+2k}
///   = s_1...s_{2k} / (4^k s_{1/2}^2 ... s_{k-1/2}^2 s_{k+1/2}),  1 <= k <= floor(N/2).
template <class Real>
IdentityCase<Real> check_odd_identity(const PhaseParams& params, int k) {
  const int N = params.N;
  if (k < 1 || k > N / 2) {
    throw RangeError("odd identity needs 1 <= k <= N/2, got k=" + std::to_string(k) +
                     " (N=" + std::to_string(N) + ")");
  }
  const Real half(0.5);
  auto s_ = [&](const Real& x) { return sin_om<Real>(params, x); };
  IdentityCase<Real> c{N, Parity::Odd, k};
  c.lhs = Real(0);
  for (int r = 0; r <= N - 2 * k - 1; ++r) {
    Real term = s_(Real(r + k) + half);
    for (int i = 1; i <= 2 * k; ++i) term *= s_(Real(r + i));
    c.lhs += term;
  }
  Real num(1);
  Real den(1);
  for (int i = 1; i <= 2 * k; ++i) num *= s_(Real(i));
  for (int i = 0; i < k; ++i) den *= 4 * s_(Real(i) + half) * s_(Real(i) + half);
  den *= s_(Real(k) + half);
  c.rhs = num / den;
  c.degenerate = N - 2 * k - 1 < 0;
  detail::finish_case(c);
  return c;
}

/// sum_{s=0}^{N-2} sin^2 w(s+1) = N/2 and sum_{s=0}^{N-1} sin w(s+1/2) = 1/sin(w/2).
template <class Real>
std::pair<IdentityCase<Real>, IdentityCase<Real>> check_base_sums(const PhaseParams& params) {
  const int N = params.N;
  const Real half(0.5);
  IdentityCase<Real> chebyshev{N, Parity::Even, 1};
  chebyshev.lhs = Real(0);
  for (int s = 0; s <= N - 2; ++s) {
    const Real v = sin_om<Real>(params, Real(s + 1));
    chebyshev.lhs += v * v;
  }
  chebyshev.rhs = Real(N) / 2;
  detail::finish_case(chebyshev);

  IdentityCase<Real> legendre{N, Parity::Odd, 0};
  legendre.lhs = Real(0);
  for (int s = 0; s <= N - 1; ++s) legendre.lhs += sin_om<Real>(params, Real(s) + half);
  legendre.rhs = 1 / sin_om<Real>(params, half);
  detail::finish_case(legendre);
  return {chebyshev, legendre};
}

/// Base sums, then every even k in 2..N/2, then every odd k in 1..N/2.
template <class Real>
std::vector<IdentityCase<Real>> sweep_identities(const PhaseParams& params) {
  std::vector<IdentityCase<Real>> cases;
  auto [chebyshev, legendre] = check_base_sums<Real>(params);
  cases.push_back(chebyshev);
  cases.push_back(legendre);
  for (int k = 2; k <= params.N / 2; ++k) cases.push_back(check_even_identity<Real>(params, k));
  for (int k = 1; k <= params.N / 2; ++k) cases.push_back(check_odd_identity<Real>(params, k));
  return cases;
}

}  // namespace qusp
