#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <vector>

#include "qusp/matrix.hpp"
#include "qusp/parameters.hpp"
#include "qusp/recurrence.hpp"
#include "qusp/tridiagonal_eigen.hpp"
#include "qusp/trig.hpp"

namespace qusp {

/// K0 eigenvalues lambda_n = cos w(n+b) / sin w, matrix elements a_n (n = 0..M,
/// a_0 = a_M = 0) and the Casimir parameter nu = cos wb cos w(b-1).
template <class Real>
struct RepresentationData {
  SeriesSpec spec;
  std::vector<Real> lambda;
  std::vector<Real> a;
  Real nu{};

  /// Scalar by which the quadratic Casimir Q acts: -nu / sin^2 w.
  Real casimir_value() const {
    const Real s = sin_om<Real>(spec.params, Real(1));
    return -nu / (s * s);
  }
};

template <class Real>
RepresentationData<Real> build_representation(const SeriesSpec& spec) {
  const PhaseParams& params = spec.params;
  const Real beta(spec.beta);
  const Real sin_w = sin_om<Real>(params, Real(1));
  RepresentationData<Real> rep{spec, std::vector<Real>(spec.M), build_recurrence<Real>(spec).a, Real(0)};
  for (int n = 0; n < spec.M; ++n) {
    rep.lambda[n] = cos_om<Real>(params, Real(n) + beta) / sin_w;
  }
  rep.nu = cos_om<Real>(params, beta) * cos_om<Real>(params, beta - 1);
  return rep;
}

/// Largest |a_n^2 - (nu - cos w(n+b) cos w(n+b-1)) / (4 sin^2 w sin w(n+b) sin w(n+b-1))|
/// over n = 0..M where the denominator does not vanish.
template <class Real>
Real matrix_element_residual(const RepresentationData<Real>& rep) {
  using std::abs;
  const PhaseParams& params = rep.spec.params;
  const Real beta(rep.spec.beta);
  const Real sin_w = sin_om<Real>(params, Real(1));
  Real worst(0);
  for (int n = 0; n <= rep.spec.M; ++n) {
    const Real x = Real(n) + beta;
    const Real den = 4 * sin_w * sin_w * sin_om<Real>(params, x) * sin_om<Real>(params, x - 1);
    if (den == 0) continue;
    const Real expected = (rep.nu - cos_om<Real>(params, x) * cos_om<Real>(params, x - 1)) / den;
    worst = std::max<Real>(worst, abs(rep.a[n] * rep.a[n] - expected));
  }
  return worst;
}

/// so_q(3) generators: K0 diagonal, K1 two-diagonal, K2 = [K0, K1]_w.
template <class Real>
struct GeneratorTriple {
  SeriesSpec spec;
  Real omega{};
  Real nu{};
  DenseMatrix<Real> K0;
  DenseMatrix<Real> K1;
  ComplexMatrix<Real> K2;
};

/// q-mutator [A, B]_w = e^{iw/2} AB - e^{-iw/2} BA.
template <class Real>
ComplexMatrix<Real> q_mutator(const ComplexMatrix<Real>& A, const ComplexMatrix<Real>& B,
                              const Real& omega) {
  using std::cos;
  using std::sin;
  const Real c = cos(omega / 2);
  const Real s = sin(omega / 2);
  return ComplexMatrix<Real>::scaled(c, s, A * B) - ComplexMatrix<Real>::scaled(c, -s, B * A);
}

template <class Real>
ComplexMatrix<Real> as_complex(const DenseMatrix<Real>& m) {
  return {m, DenseMatrix<Real>(m.size())};
}

template <class Real>
GeneratorTriple<Real> build_generators(const RepresentationData<Real>& rep) {
  const std::size_t M = static_cast<std::size_t>(rep.spec.M);
  GeneratorTriple<Real> gen{rep.spec, rep.spec.params.template omega<Real>(), rep.nu,
                            DenseMatrix<Real>(M), DenseMatrix<Real>(M), ComplexMatrix<Real>(M)};
  for (std::size_t n = 0; n < M; ++n) gen.K0(n, n) = rep.lambda[n];
  for (std::size_t n = 0; n + 1 < M; ++n) {
    gen.K1(n + 1, n) = rep.a[n + 1];
    gen.K1(n, n + 1) = rep.a[n + 1];
  }
  gen.K2 = q_mutator(as_complex(gen.K0), as_complex(gen.K1), gen.omega);
  return gen;
}

/// Max-entry residuals of the defining relations and the Casimir.
template <class Real>
struct AlgebraReport {
  Real r1{};                 // ||[K1,K2]_w + K0||
  Real r2{};                 // ||[K2,K0]_w + K1||
  Real rQ{};                 // ||Q - casimir I||
  Real casimir{};            // -nu / sin^2 w
  Real k2_antihermitian{};   // ||K2 + K2^+||
  Real hermiticity{};        // max(||K0 - K0^T||, ||K1 - K1^T||)

  Real worst() const { return std::max({r1, r2, rQ, k2_antihermitian, hermiticity}); }
};

template <class Real>
AlgebraReport<Real> verify_algebra(const GeneratorTriple<Real>& gen) {
  using std::cos;
  const std::size_t M = gen.K0.size();
  const auto K0 = as_complex(gen.K0);
  const auto K1 = as_complex(gen.K1);
  const auto& K2 = gen.K2;
  const Real w = gen.omega;

  AlgebraReport<Real> report;
  report.r1 = max_abs(q_mutator(K1, K2, w) + K0);
  report.r2 = max_abs(q_mutator(K2, K0, w) + K1);

  const auto K2_tilde = q_mutator(K0, K1, Real(-w));
  auto Q = ComplexMatrix<Real>::scaled(Real(0.5), Real(0), K2 * K2_tilde + K2_tilde * K2);
  const DenseMatrix<Real> squares = gen.K0 * gen.K0 + gen.K1 * gen.K1;
  Q.re -= cos(w) * squares;

  const Real sin_w = sin_om<Real>(gen.spec.params, Real(1));
  report.casimir = -gen.nu / (sin_w * sin_w);
  Q.re -= report.casimir * DenseMatrix<Real>::identity(M);
  report.rQ = max_abs(Q);

  report.k2_antihermitian = max_abs(K2 + K2.adjoint());
  report.hermiticity = std::max(max_abs(gen.K0 - gen.K0.transposed()),
                                max_abs(gen.K1 - gen.K1.transposed()));
  return report;
}

/// Data of K0 in the K1 eigenbasis |s): K0|s) = d_{s+1}|s+1) + d_s|s-1) + b_s|s).
/// Indices s = 0..M-1, d_0 = 0.
template <class Real>
struct DualBasisData {
  SeriesSpec spec;
  std::vector<Real> mu;
  std::vector<Real> d;
  std::vector<Real> b;
  // Complementary series only: closed-form d_0^2 and d_N^2 before truncation.
  std::optional<Real> untruncated_d0_sq;
  std::optional<Real> untruncated_dN_sq;
};

template <class Real>
DualBasisData<Real> build_dual_basis(const SeriesSpec& spec) {
  using std::sqrt;
  const PhaseParams& params = spec.params;
  const int M = spec.M;
  const Real sin_w = sin_om<Real>(params, Real(1));
  const Real four_sin2 = 4 * sin_w * sin_w;

  DualBasisData<Real> dual{spec, std::vector<Real>(M), std::vector<Real>(M, Real(0)),
                           std::vector<Real>(M, Real(0)), std::nullopt, std::nullopt};
  if (spec.quantized()) {
    const Real half_j = Real(*spec.j) / 2;
    for (int s = 0; s < M; ++s) {
      dual.mu[s] = cos_om<Real>(params, Real(s) + half_j) / sin_w;
    }
    for (int s = 1; s < M; ++s) {
      const Real d2 = sin_om<Real>(params, Real(s)) * sin_om<Real>(params, Real(s + *spec.j - 1)) /
                      (four_sin2 * sin_om<Real>(params, Real(s) + half_j) *
                       sin_om<Real>(params, Real(s) - 1 + half_j));
      dual.d[s] = sqrt(d2);
    }
    return dual;
  }

  const Real beta(spec.beta);
  const Real half(0.5);
  auto d_squared = [&](const Real& s) {
    return sin_om<Real>(params, s - beta + half) * sin_om<Real>(params, s + beta - half) /
           (four_sin2 * sin_om<Real>(params, s + half) * sin_om<Real>(params, s - half));
  };
  for (int s = 0; s < M; ++s) dual.mu[s] = cos_om<Real>(params, Real(s) + half) / sin_w;
  for (int s = 1; s < M; ++s) dual.d[s] = sqrt(d_squared(Real(s)));
  const Real corner = sin_om<Real>(params, half - beta) / (2 * sin_w * sin_om<Real>(params, half));
  dual.b.front() = corner;
  dual.b.back() = corner;
  dual.untruncated_d0_sq = d_squared(Real(0));
  dual.untruncated_dN_sq = d_squared(Real(M));
  return dual;
}

template <class Real>
struct DualReport {
  Real spectrum{};             // sorted eig(K1) vs mu_s
  Real offdiagonal{};          // | |T_{s,s-1}| - d_s |
  Real diagonal{};             // |T_{ss} - b_s|
  Real beyond_tridiagonal{};   // |T_{st}|, |s - t| >= 2
  Real overlap{};              // |(s|n> - (s|0> S_n(mu_s)|

  Real worst() const { return std::max({spectrum, offdiagonal, diagonal, beyond_tridiagonal, overlap}); }
};

/// Diagonalizes K1, fixes each eigenvector's sign so its first nonvanishing
/// component is positive, orders the basis by decreasing eigenvalue (the order
/// of mu_s) and compares T = V^T K0 V against the closed forms.
template <class Real>
DualReport<Real> verify_dual_structure(const GeneratorTriple<Real>& gen,
                                       const DualBasisData<Real>& dual) {
  using std::abs;
  const std::size_t M = gen.K1.size();
  std::vector<Real> diag(M, Real(0));
  std::vector<Real> off(M > 0 ? M - 1 : 0);
  for (std::size_t n = 0; n + 1 < M; ++n) off[n] = gen.K1(n + 1, n);
  const auto eig = tridiagonal_eigen<Real>(diag, off, true);

  DenseMatrix<Real> V(M);
  std::vector<Real> mu(M);
  const Real tiny = 64 * std::numeric_limits<Real>::epsilon();
  for (std::size_t s = 0; s < M; ++s) {
    const std::size_t col = M - 1 - s;
    mu[s] = eig.values[col];
    Real sign(1);
    for (std::size_t n = 0; n < M; ++n) {
      if (abs(eig.vectors(n, col)) > tiny) {
        sign = eig.vectors(n, col) > 0 ? Real(1) : Real(-1);
        break;
      }
    }
    for (std::size_t n = 0; n < M; ++n) V(n, s) = sign * eig.vectors(n, col);
  }

  DualReport<Real> report;
  for (std::size_t s = 0; s < M; ++s) {
    report.spectrum = std::max<Real>(report.spectrum, abs(mu[s] - dual.mu[s]));
  }

  const DenseMatrix<Real> T = V.transposed() * gen.K0 * V;
  for (std::size_t s = 0; s < M; ++s) {
    report.diagonal = std::max<Real>(report.diagonal, abs(T(s, s) - dual.b[s]));
    if (s > 0) {
      report.offdiagonal = std::max<Real>(report.offdiagonal, abs(abs(T(s, s - 1)) - dual.d[s]));
    }
    for (std::size_t t = 0; t + 1 < s; ++t) {
      report.beyond_tridiagonal = std::max<Real>(report.beyond_tridiagonal, abs(T(s, t)));
    }
  }

  // (s|n> = (s|0> S_n(mu_s), with S_n from the two-diagonal K1 entries.
  for (std::size_t s = 0; s < M; ++s) {
    Real prev(0);
    Real cur(1);
    for (std::size_t n = 0; n < M; ++n) {
      report.overlap = std::max<Real>(report.overlap, abs(V(n, s) - V(0, s) * cur));
      if (n + 1 == M) break;
      const Real a_next = gen.K1(n + 1, n);
      const Real a_cur = n > 0 ? gen.K1(n, n - 1) : Real(0);
      const Real next = (mu[s] * cur - a_cur * prev) / a_next;
      prev = cur;
      cur = next;
    }
  }
  return report;
}

}  // namespace qusp
