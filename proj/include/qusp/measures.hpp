#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "qusp/error.hpp"
#include "qusp/kernels.hpp"
#include "qusp/parameters.hpp"
#include "qusp/recurrence.hpp"
#include "qusp/trig.hpp"

namespace qusp {

enum class NormSource { None, ClosedForm, Numeric, Chained };

/// Grid x_s (decreasing), positive weights w_s and, once filled, the norms h_n.
template <class Real>
struct MeasureData {
  SeriesSpec spec;
  std::vector<Real> grid;
  std::vector<Real> weights;
  std::vector<Real> norms;
  NormSource norm_source = NormSource::None;

  Real weight_total() const {
    Real total(0);
    for (const Real& w : weights) total += w;
    return total;
  }
};

/// Integer/HalfInteger: x_s = 2 cos w(s + j/2), w_s = sin w(s + j/2) prod_{l=1}^{j-1} sin w(s + l).
/// Complementary: x_s = 2 cos w(s + 1/2); w_0 = w_{N-1} = 1 and
/// w_s = (sin w(s+1/2) / sin(w/2)) prod_{l<s} sin w(b+1/2+l) / sin w(-b+3/2+l).
/// Throws NonpositiveWeight if any weight is not above tol.
template <class Real>
MeasureData<Real> build_grid_weights(const SeriesSpec& spec) {
  const PhaseParams& params = spec.params;
  const int M = spec.M;
  MeasureData<Real> measure{spec, std::vector<Real>(M), std::vector<Real>(M), {}, NormSource::None};
  const Real half(0.5);

  if (spec.quantized()) {
    const int j = *spec.j;
    const Real half_j = Real(j) / 2;
    for (int s = 0; s < M; ++s) {
      measure.grid[s] = 2 * cos_om<Real>(params, Real(s) + half_j);
      Real w = sin_om<Real>(params, Real(s) + half_j);
      for (int l = 1; l < j; ++l) w *= sin_om<Real>(params, Real(s + l));
      measure.weights[s] = w;
    }
  } else {
    const Real beta(spec.beta);
    const Real sin_half = sin_om<Real>(params, half);
    Real product(1);
    for (int s = 0; s < M; ++s) {
      measure.grid[s] = 2 * cos_om<Real>(params, Real(s) + half);
      if (s > 0) {
        const int l = s - 1;
        product *= sin_om<Real>(params, beta + half + Real(l)) /
                   sin_om<Real>(params, -beta + Real(1.5) + Real(l));
      }
      measure.weights[s] = sin_om<Real>(params, Real(s) + half) / sin_half * product;
    }
    measure.weights.back() = Real(1);
  }

  for (int s = 0; s < M; ++s) {
    if (!(measure.weights[s] > Real(params.tol))) {
      throw NonpositiveWeight("weight w_" + std::to_string(s) + " = " +
                              std::to_string(to_double(measure.weights[s])) +
                              " is not positive");
    }
  }
  return measure;
}

/// Closed-form h_n, n = 0..M-1, for the Integer (j = 2k) and HalfInteger (j = 2k+1) series.
template <class Real>
std::vector<Real> closed_form_norms(const SeriesSpec& spec) {
  if (!spec.quantized()) {
    throw WrongSeries("closed-form norms exist only for the integer and half-integer series");
  }
  const PhaseParams& params = spec.params;
  auto s_ = [&](const Real& x) { return sin_om<Real>(params, x); };
  const int j = *spec.j;
  const int M = spec.M;
  std::vector<Real> h(M);

  if (j % 2 == 0) {
    const int k = j / 2;
    const Real h0 = Real(params.N) / 2;
    Real scale(1);
    for (int i = 1; i < k; ++i) scale *= 4;
    for (int n = 0; n < M; ++n) {
      Real num = h0;
      Real den = scale;
      for (int i = n + k + 1; i <= n + 2 * k - 1; ++i) num *= s_(Real(i));
      for (int i = n + 1; i <= n + k - 1; ++i) den *= s_(Real(i));
      h[n] = num / den;
    }
    return h;
  }

  const int k = (j - 1) / 2;
  const Real half(0.5);
  const Real h0 = 1 / s_(half);
  for (int n = 0; n < M; ++n) {
    Real num = h0;
    Real den(1);
    for (int i = 0; i < k; ++i) den *= 4;
    for (int i = 1; i <= n; ++i) num *= s_(Real(i)) * s_(Real(i));
    for (int i = n + 1; i <= n + 2 * k; ++i) num *= s_(Real(i));
    // s_{1/2} s_{3/2}^2 ... s_{m-1/2}^2 s_{m+1/2} = prod_{i<m} s_{i+1/2} s_{i+3/2}
    for (int i = 0; i < n + k; ++i) den *= s_(Real(i) + half) * s_(Real(i) + 1 + half);
    h[n] = num / den;
  }
  return h;
}

/// h_n = sum_s P_n(x_s)^2 w_s, n = 0..M-1.
template <class Real>
std::vector<Real> numeric_norms(const RecurrenceTable<Real>& table, const MeasureData<Real>& measure) {
  const int M = table.M();
  const std::size_t points = measure.grid.size();
  const auto values = monic_table<Real>(table, measure.grid, M);
  std::vector<Real> h(M, Real(0));
  for (int n = 0; n < M; ++n) {
    for (std::size_t s = 0; s < points; ++s) {
      const Real p = values[n * points + s];
      h[n] += p * p * measure.weights[s];
    }
  }
  return h;
}

template <class Real>
std::vector<Real> numeric_norms(const SeriesSpec& spec, const RecurrenceTable<Real>& table,
                                const MeasureData<Real>& measure) {
  (void)spec;
  return numeric_norms(table, measure);
}

/// Measure with its norms filled: closed form where one exists, Gram sums otherwise.
template <class Real>
MeasureData<Real> build_measure(const SeriesSpec& spec) {
  MeasureData<Real> measure = build_grid_weights<Real>(spec);
  if (spec.quantized()) {
    measure.norms = closed_form_norms<Real>(spec);
    measure.norm_source = NormSource::ClosedForm;
  } else {
    measure.norms = numeric_norms(build_recurrence<Real>(spec), measure);
    measure.norm_source = NormSource::Numeric;
  }
  return measure;
}

template <class Real>
struct OrthogonalityReport {
  std::vector<Real> gram;  // M x M row-major
  Real offdiagonal{};      // max_{n != m} |G_nm| / h_n
  Real diagonal{};         // max_n |G_nn - h_n| / h_n against measure.norms
  bool has_diagonal = false;
};

template <class Real>
OrthogonalityReport<Real> verify_orthogonality(const RecurrenceTable<Real>& table,
                                               const MeasureData<Real>& measure) {
  using std::abs;
  const int M = table.M();
  const std::size_t degrees = static_cast<std::size_t>(M);
  const auto values = monic_table<Real>(table, measure.grid, M);
  OrthogonalityReport<Real> report;
  report.gram.assign(degrees * degrees, Real(0));
  kernels::weighted_gram<Real>(values, degrees, measure.weights, report.gram);

  report.has_diagonal = measure.norms.size() == degrees;
  for (std::size_t n = 0; n < degrees; ++n) {
    const Real gnn = report.gram[n * degrees + n];
    const Real h = report.has_diagonal ? measure.norms[n] : gnn;
    for (std::size_t m = 0; m < degrees; ++m) {
      if (m == n) continue;
      report.offdiagonal = std::max<Real>(report.offdiagonal, abs(report.gram[n * degrees + m]) / h);
    }
    if (report.has_diagonal) {
      report.diagonal = std::max<Real>(report.diagonal, abs(gnn - h) / h);
    }
  }
  return report;
}

/// One kernel-polynomial step j -> j+2. `A` is the polynomial ratio
/// P_{n+2}(x_0) / P_n(x_0); `A_closed` the closed form.
template <class Real>
struct DarbouxStep {
  int j_from = 0;
  Real x0{};
  std::vector<Real> A;
  std::vector<Real> A_closed;
  SeriesSpec spec_to;

  Real ratio_residual() const {
    using std::abs;
    Real worst(0);
    for (std::size_t n = 0; n < A.size(); ++n) {
      worst = std::max<Real>(worst, abs(A[n] - A_closed[n]) / abs(A_closed[n]));
    }
    return worst;
  }
};

/// P^{(j+2)}_n(x) = (P^{(j)}_{n+2}(x) - A_n P^{(j)}_n(x)) / (x^2 - x_0^2).
template <class Real>
Real kernel_polynomial(const RecurrenceTable<Real>& table_j, const DarbouxStep<Real>& step,
                       int n, const Real& x) {
  return (eval_monic(table_j, n + 2, x) - step.A[n] * eval_monic(table_j, n, x)) /
         (x * x - step.x0 * step.x0);
}

/// Requires an Integer/HalfInteger measure with j + 2 <= N - 1. The new grid
/// is the interior of the old one (x_s(j+2) = x_{s+1}(j)); new weights are
/// w_{s+1}(j) (x_0^2 - x_{s+1}^2) / 4 and, if the input carries norms,
/// h_n(j+2) = h_n(j) A_n / 4.
template <class Real>
std::pair<DarbouxStep<Real>, MeasureData<Real>> darboux_step(const MeasureData<Real>& measure_j,
                                                             const RecurrenceTable<Real>& table_j) {
  const SeriesSpec& spec = measure_j.spec;
  if (!spec.quantized()) {
    throw WrongSeries("the Darboux chain runs only over the integer and half-integer series");
  }
  const int j = *spec.j;
  const int N = spec.N();
  if (j + 2 > N - 1) {
    throw ChainExhausted("no series j+2 = " + std::to_string(j + 2) + " for N = " + std::to_string(N));
  }
  const PhaseParams& params = spec.params;
  const int M = spec.M;
  const int M_to = M - 2;
  const Real half_j = Real(j) / 2;

  DarbouxStep<Real> step;
  step.j_from = j;
  step.x0 = measure_j.grid.front();
  step.spec_to = classify_j(params, j + 2);
  step.A.resize(M_to);
  step.A_closed.resize(M_to);
  for (int n = 0; n < M_to; ++n) {
    step.A[n] = eval_monic(table_j, n + 2, step.x0) / eval_monic(table_j, n, step.x0);
    step.A_closed[n] = sin_om<Real>(params, Real(n + j + 1)) * sin_om<Real>(params, Real(n + j)) /
                       (sin_om<Real>(params, Real(n + 1) + half_j) * sin_om<Real>(params, Real(n) + half_j));
  }

  MeasureData<Real> next{step.spec_to, std::vector<Real>(M_to), std::vector<Real>(M_to), {}, NormSource::None};
  const Real x0_sq = step.x0 * step.x0;
  for (int s = 0; s < M_to; ++s) {
    const Real x = measure_j.grid[s + 1];
    next.grid[s] = x;
    next.weights[s] = measure_j.weights[s + 1] * (x0_sq - x * x) / 4;
  }
  if (measure_j.norms.size() == static_cast<std::size_t>(M)) {
    next.norms.resize(M_to);
    for (int n = 0; n < M_to; ++n) next.norms[n] = measure_j.norms[n] * step.A[n] / 4;
    next.norm_source = NormSource::Chained;
  }
  return {std::move(step), std::move(next)};
}

/// Worst relative disagreements accumulated along a chain.
template <class Real>
struct ChainReport {
  int j_start = 0;
  int steps = 0;
  Real ratio_vs_closed{};    // A_n: polynomial ratio vs closed form
  Real weights_vs_direct{};  // chained w_s(j) vs direct weights
  Real grid_vs_direct{};     // chained grid vs 2 cos w(s + j/2)
  Real norms_vs_closed{};    // chained h_n(j) vs closed-form h_n(j)
  Real kernel_vs_direct{};   // kernel polynomials vs direct recurrence of series j+2
  std::vector<DarbouxStep<Real>> trail;
  std::vector<std::vector<Real>> chained_norms;  // h_n(j_from + 2) per step

  Real worst() const {
    return std::max({ratio_vs_closed, weights_vs_direct, grid_vs_direct, norms_vs_closed, kernel_vs_direct});
  }
};

/// Starts from the direct measure of series j_start with Gram-sum norms and
/// iterates darboux_step while j + 2 <= N - 1, comparing every stage against
/// the direct constructions.
template <class Real>
ChainReport<Real> verify_darboux_chain(const PhaseParams& params, int j_start) {
  using std::abs;
  ChainReport<Real> report;
  report.j_start = j_start;

  SeriesSpec spec = classify_j(params, j_start);
  RecurrenceTable<Real> table = build_recurrence<Real>(spec);
  MeasureData<Real> measure = build_grid_weights<Real>(spec);
  measure.norms = numeric_norms(table, measure);
  measure.norm_source = NormSource::Numeric;

  auto rel = [](const Real& got, const Real& want) { return abs(got - want) / abs(want); };

  while (*spec.j + 2 <= params.N - 1) {
    auto [step, next] = darboux_step(measure, table);
    report.ratio_vs_closed = std::max<Real>(report.ratio_vs_closed, step.ratio_residual());

    const SeriesSpec& spec_to = step.spec_to;
    const MeasureData<Real> direct = build_grid_weights<Real>(spec_to);
    const std::vector<Real> closed = closed_form_norms<Real>(spec_to);
    const RecurrenceTable<Real> table_to = build_recurrence<Real>(spec_to);
    const int M_to = spec_to.M;

    for (int s = 0; s < M_to; ++s) {
      report.weights_vs_direct = std::max<Real>(report.weights_vs_direct, rel(next.weights[s], direct.weights[s]));
      report.grid_vs_direct = std::max<Real>(report.grid_vs_direct, abs(next.grid[s] - direct.grid[s]));
    }
    for (int n = 0; n < M_to; ++n) {
      report.norms_vs_closed = std::max<Real>(report.norms_vs_closed, rel(next.norms[n], closed[n]));
      Real scale(0);
      std::vector<Real> want(M_to);
      for (int s = 0; s < M_to; ++s) {
        want[s] = eval_monic(table_to, n, direct.grid[s]);
        scale = std::max<Real>(scale, abs(want[s]));
      }
      for (int s = 0; s < M_to; ++s) {
        const Real got = kernel_polynomial(table, step, n, next.grid[s]);
        report.kernel_vs_direct = std::max<Real>(report.kernel_vs_direct, abs(got - want[s]) / scale);
      }
    }

    report.trail.push_back(step);
    report.chained_norms.push_back(next.norms);
    ++report.steps;
    spec = spec_to;
    table = table_to;
    measure = std::move(next);
  }
  return report;
}

}  // namespace qusp
