#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "qusp/error.hpp"
#include "qusp/matrix.hpp"

namespace qusp {

/// Eigen-decomposition of a real symmetric tridiagonal matrix. `values` are
/// ascending; column k of `vectors` is the unit eigenvector for values[k].
template <class Real>
struct TridiagonalEigen {
  std::vector<Real> values;
  DenseMatrix<Real> vectors;
};

namespace detail {

template <class Real>
Real safe_hypot(const Real& a, const Real& b) {
  using std::abs;
  using std::sqrt;
  const Real x = abs(a);
  const Real y = abs(b);
  const Real big = std::max(x, y);
  if (big == 0) return Real(0);
  const Real small = std::min(x, y) / big;
  return big * sqrt(1 + small * small);
}

}  // namespace detail

/// Implicit-shift QL iteration (EISPACK tql2 lineage). `diagonal` has n
/// entries, `offdiagonal` n-1 (entry i couples rows i and i+1). Throws
/// ConvergenceFailure when an eigenvalue needs more than 60 sweeps.
template <class Real>
TridiagonalEigen<Real> tridiagonal_eigen(std::span<const Real> diagonal,
                                         std::span<const Real> offdiagonal,
                                         bool want_vectors = true) {
  using std::abs;
  const std::size_t n = diagonal.size();
  std::vector<Real> d(diagonal.begin(), diagonal.end());
  std::vector<Real> e(n, Real(0));
  for (std::size_t i = 0; i + 1 < n && i < offdiagonal.size(); ++i) e[i] = offdiagonal[i];
  DenseMatrix<Real> z = want_vectors ? DenseMatrix<Real>::identity(n) : DenseMatrix<Real>(0);

  constexpr int kMaxSweeps = 60;
  const Real eps = std::numeric_limits<Real>::epsilon();
  Real shift_total(0);
  Real scale(0);

  for (std::size_t l = 0; l < n; ++l) {
    scale = std::max<Real>(scale, abs(d[l]) + abs(e[l]));
    std::size_t m = l;
    while (m < n - 1 && abs(e[m]) > eps * scale) ++m;

    if (m > l) {
      int sweeps = 0;
      do {
        if (++sweeps > kMaxSweeps) {
          throw ConvergenceFailure("tridiagonal QL did not converge for eigenvalue " +
                                   std::to_string(l));
        }
        Real g = d[l];
        Real p = (d[l + 1] - g) / (2 * e[l]);
        Real r = detail::safe_hypot(p, Real(1));
        if (p < 0) r = -r;
        d[l] = e[l] / (p + r);
        d[l + 1] = e[l] * (p + r);
        const Real dl1 = d[l + 1];
        Real h = g - d[l];
        for (std::size_t i = l + 2; i < n; ++i) d[i] -= h;
        shift_total += h;

        p = d[m];
        Real c(1), c2(1), c3(1);
        const Real el1 = e[l + 1];
        Real s(0), s2(0);
        for (std::size_t ii = m; ii-- > l;) {
          c3 = c2;
          c2 = c;
          s2 = s;
          g = c * e[ii];
          h = c * p;
          r = detail::safe_hypot(p, e[ii]);
          e[ii + 1] = s * r;
          s = e[ii] / r;
          c = p / r;
          p = c * d[ii] - s * g;
          d[ii + 1] = h + s * (c * g + s * d[ii]);
          if (want_vectors) {
            for (std::size_t k = 0; k < n; ++k) {
              h = z(k, ii + 1);
              z(k, ii + 1) = s * z(k, ii) + c * h;
              z(k, ii) = c * z(k, ii) - s * h;
            }
          }
        }
        p = -s * s2 * c3 * el1 * e[l] / dl1;
        e[l] = s * p;
        d[l] = c * p;
      } while (abs(e[l]) > eps * scale);
    }
    d[l] += shift_total;
    e[l] = Real(0);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return d[a] < d[b]; });

  TridiagonalEigen<Real> out;
  out.values.reserve(n);
  for (std::size_t k : order) out.values.push_back(d[k]);
  if (want_vectors) {
    out.vectors = DenseMatrix<Real>(n);
    for (std::size_t col = 0; col < n; ++col)
      for (std::size_t row = 0; row < n; ++row) out.vectors(row, col) = z(row, order[col]);
  }
  return out;
}

}  // namespace qusp
