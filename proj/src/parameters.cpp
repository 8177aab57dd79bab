#include "qusp/parameters.hpp"

#include <cmath>
#include <sstream>
#include <string>

namespace qusp {

namespace {

std::string describe(int N, double beta) {
  std::ostringstream os;
  os.precision(17);
  os << "beta=" << beta << " (N=" << N << ")";
  return os.str();
}

}  // namespace

std::string_view to_string(SeriesKind kind) noexcept {
  switch (kind) {
    case SeriesKind::Complementary:
      return "complementary";
    case SeriesKind::Integer:
      return "integer";
    case SeriesKind::HalfInteger:
      return "half-integer";
  }
  return "unknown";
}

double reduce_beta(int N, double beta) {
  const double n = N;
  double r = beta - n * std::floor((beta + 0.5) / n);
  // floor() of a rounded quotient can land one period off at the seam.
  if (r < -0.5) r += n;
  if (r >= n - 0.5) r -= n;
  return r;
}

SeriesSpec classify(const PhaseParams& params, double beta,
                    ClassifyOptions options) {
  const int N = params.N;
  if (!std::isfinite(beta)) {
    throw RejectedParameter("beta must be finite");
  }
  const double reduced = reduce_beta(N, beta);
  const double twice = 2.0 * reduced;

  if (twice == std::round(twice)) {
    const int j = static_cast<int>(twice);
    if (j == 1 && options.force_complementary) {
      return SeriesSpec{SeriesKind::Complementary, reduced, std::nullopt, N, params};
    }
    if (j >= 1 && j <= N - 1) {
      const SeriesKind kind = j % 2 == 0 ? SeriesKind::Integer : SeriesKind::HalfInteger;
      return SeriesSpec{kind, reduced, j, N + 1 - j, params};
    }
    if (j == 0) {
      throw RejectedParameter("beta = 0 (mod N) is ambiguous: " + describe(N, beta));
    }
    if (j == -1) {
      throw RejectedParameter("beta = -1/2 (mod N) is not an admissible series: " +
                              describe(N, beta));
    }
    throw RejectedParameter("2*beta = " + std::to_string(j) +
                            " is not in 1..N-1: " + describe(N, beta));
  }

  if (reduced > -0.5 && reduced < 1.5) {
    const double tol = params.tol;
    if (std::abs(reduced) < tol || std::abs(reduced - 1.0) < tol) {
      throw RejectedParameter("beta within tolerance of an excluded endpoint 0 or 1: " +
                              describe(N, beta));
    }
    return SeriesSpec{SeriesKind::Complementary, reduced, std::nullopt, N, params};
  }
  throw RejectedParameter("beta outside every admissible region: " + describe(N, beta));
}

SeriesSpec classify_j(const PhaseParams& params, int j) {
  if (j < 1 || j > params.N - 1) {
    throw RejectedParameter("j must lie in 1..N-1, got j=" + std::to_string(j) +
                            " (N=" + std::to_string(params.N) + ")");
  }
  return classify(params, j / 2.0);
}

std::vector<SeriesSpec> enumerate_series(const PhaseParams& params,
                                         std::span<const double> complementary) {
  std::vector<SeriesSpec> out;
  out.reserve(static_cast<std::size_t>(params.N - 1) + complementary.size());
  for (int j = 1; j <= params.N - 1; ++j) out.push_back(classify_j(params, j));
  for (double beta : complementary) {
    SeriesSpec spec = classify(params, beta, {.force_complementary = true});
    if (spec.quantized()) {
      throw RejectedParameter("sample is not in the complementary series: " +
                              describe(params.N, beta));
    }
    out.push_back(spec);
  }
  return out;
}

std::vector<double> complementary_betas(int per_interval) {
  static constexpr double kIntervals[3][2] = {{-0.5, 0.0}, {0.0, 1.0}, {1.0, 1.5}};
  std::vector<double> out;
  if (per_interval <= 0) return out;
  out.reserve(3 * static_cast<std::size_t>(per_interval));
  for (const auto& [lo, hi] : kIntervals) {
    for (int i = 1; i <= per_interval; ++i) {
      out.push_back(lo + (hi - lo) * i / (per_interval + 1));
    }
  }
  return out;
}

std::optional<int> positive_dimension(const PhaseParams& params, double beta) {
  // u_N always vanishes, so the scan terminates by n = N.
  for (int n = 1; n <= params.N; ++n) {
    const double den = sin_om(params, n + beta) * sin_om(params, n + beta - 1);
    if (den == 0.0) return std::nullopt;
    const double u = sin_om(params, double(n)) * sin_om(params, n + 2 * beta - 1) / den;
    if (u == 0.0) {
      if (n < 2) return std::nullopt;
      return n;
    }
    if (u < 0.0) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace qusp
