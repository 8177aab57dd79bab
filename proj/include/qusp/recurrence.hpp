#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "qusp/error.hpp"
#include "qusp/kernels.hpp"
#include "qusp/matrix.hpp"
#include "qusp/parameters.hpp"
#include "qusp/tridiagonal_eigen.hpp"
#include "qusp/trig.hpp"

namespace qusp {

/// Monic recurrence coefficients u_n (n = 0..M) and the symmetric matrix
/// elements a_n = sqrt(u_n) / (2 sin omega) (n = 0..M, with a_0 = a_M = 0).
template <class Real>
struct RecurrenceTable {
  SeriesSpec spec;
  std::vector<Real> u;
  std::vector<Real> a;

  int M() const noexcept { return spec.M; }
};

/// Symmetric tridiagonal M x M matrix; offdiag[n-1] = sqrt(u_n), n = 1..M-1.
template <class Real>
struct JacobiMatrix {
  int dim = 0;
  std::vector<Real> diagonal;
  std::vector<Real> offdiag;
};

/// u_n = sin wn sin w(n+2b-1) / (sin w(n+b) sin w(n+b-1)) for 0 <= n <= M.
/// The j = 2 series uses the fixed convention u_0 = u_{N-1} = 0, u_n = 1 otherwise.
template <class Real>
RecurrenceTable<Real> build_recurrence(const SeriesSpec& spec) {
  using std::sqrt;
  const PhaseParams& params = spec.params;
  const int M = spec.M;
  const Real beta(spec.beta);
  const Real two_sin = 2 * sin_om<Real>(params, Real(1));

  RecurrenceTable<Real> table{spec, std::vector<Real>(M + 1), std::vector<Real>(M + 1)};
  const bool chebyshev = spec.j && *spec.j == 2;
  for (int n = 0; n <= M; ++n) {
    Real u;
    if (chebyshev) {
      u = (n == 0 || n == M) ? Real(0) : Real(1);
    } else {
      const Real den = sin_om<Real>(params, Real(n) + beta) *
                       sin_om<Real>(params, Real(n) + beta - 1);
      if (den == 0) {
        std::ostringstream os;
        os << "vanishing denominator in u_" << n << " for " << to_string(spec.kind)
           << " series, beta=" << spec.beta;
        throw DegenerateDenominator(os.str());
      }
      u = sin_om<Real>(params, Real(n)) *
          sin_om<Real>(params, Real(n) + 2 * beta - 1) / den;
    }
    table.u[n] = u;
  }
  // Truncation is structural: the endpoint factors are exact zeros.
  table.u[0] = Real(0);
  table.u[M] = Real(0);
  for (int n = 0; n <= M; ++n) {
    table.a[n] = table.u[n] > 0 ? sqrt(table.u[n]) / two_sin : Real(0);
  }
  return table;
}

template <class Real>
JacobiMatrix<Real> build_jacobi(const RecurrenceTable<Real>& table) {
  using std::sqrt;
  const int M = table.M();
  JacobiMatrix<Real> J{M, std::vector<Real>(M, Real(0)), std::vector<Real>(M - 1)};
  for (int n = 1; n < M; ++n) J.offdiag[n - 1] = sqrt(table.u[n]);
  return J;
}

/// P_n(x) by the forward recurrence; 0 <= n <= M.
template <class Real>
Real eval_monic(const RecurrenceTable<Real>& table, int n, const Real& x) {
  if (n == 0) return Real(1);
  Real prev(1);
  Real cur = x;
  for (int k = 1; k < n; ++k) {
    Real next = x * cur - table.u[k] * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// S_n(mu) from a_{n+1} S_{n+1} + a_n S_{n-1} = mu S_n, S_0 = 1; 0 <= n <= M-1.
template <class Real>
Real eval_symmetric(const RecurrenceTable<Real>& table, int n, const Real& mu) {
  if (n == 0) return Real(1);
  Real prev(1);
  Real cur = mu / table.a[1];
  for (int k = 1; k < n; ++k) {
    Real next = (mu * cur - table.a[k] * prev) / table.a[k + 1];
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Table of P_n(x_s) for n < degrees over all points (row n, column s).
template <class Real>
std::vector<Real> monic_table(const RecurrenceTable<Real>& table,
                              std::span<const Real> points, int degrees) {
  std::vector<Real> out(static_cast<std::size_t>(degrees) * points.size());
  kernels::monic_table<Real>(table.u, points, static_cast<std::size_t>(degrees), out);
  return out;
}

/// Ascending eigenvalues of J.
template <class Real>
std::vector<Real> jacobi_spectrum(const JacobiMatrix<Real>& J) {
  return tridiagonal_eigen<Real>(J.diagonal, J.offdiag, false).values;
}

/// Largest ||J v - lambda v||_inf / ||J||_max over the computed eigenpairs.
template <class Real>
Real jacobi_eigen_residual(const JacobiMatrix<Real>& J) {
  using std::abs;
  const auto eig = tridiagonal_eigen<Real>(J.diagonal, J.offdiag, true);
  const int M = J.dim;
  Real norm(0);
  for (const Real& v : J.offdiag) norm = std::max<Real>(norm, abs(v));
  for (const Real& v : J.diagonal) norm = std::max<Real>(norm, abs(v));
  if (norm == 0) norm = Real(1);
  Real worst(0);
  for (int k = 0; k < M; ++k) {
    for (int i = 0; i < M; ++i) {
      Real jv = J.diagonal[i] * eig.vectors(i, k);
      if (i > 0) jv += J.offdiag[i - 1] * eig.vectors(i - 1, k);
      if (i + 1 < M) jv += J.offdiag[i] * eig.vectors(i + 1, k);
      worst = std::max<Real>(worst, abs(jv - eig.values[k] * eig.vectors(i, k)));
    }
  }
  return worst / norm;
}

}  // namespace qusp
