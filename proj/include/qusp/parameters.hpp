#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qusp/trig.hpp"

namespace qusp {

enum class SeriesKind { Complementary, Integer, HalfInteger };

std::string_view to_string(SeriesKind kind) noexcept;

/// A classified parameter regime. `beta` is stored reduced into [-1/2, N-1/2);
/// `j` = 2*beta is present exactly for the Integer/HalfInteger series.
struct SeriesSpec {
  SeriesKind kind = SeriesKind::Complementary;
  double beta = 0.5;
  std::optional<int> j;
  int M = 2;
  PhaseParams params;

  bool quantized() const noexcept { return kind != SeriesKind::Complementary; }
  int N() const noexcept { return params.N; }
};

struct ClassifyOptions {
  // beta = 1/2 belongs to both the complementary and the j = 1 series; by
  // default it is classified as j = 1.
  bool force_complementary = false;
};

/// Reduces beta into [-1/2, N-1/2).
double reduce_beta(int N, double beta);

/// Throws RejectedParameter for beta = 0 or 1 (mod N) outside the j = 2
/// convention, beta = -1/2, and any beta outside the admissible regions.
SeriesSpec classify(const PhaseParams& params, double beta,
                    ClassifyOptions options = {});

/// Shorthand for classify(params, j / 2.0).
SeriesSpec classify_j(const PhaseParams& params, int j);

/// Integer/HalfInteger specs for j = 1..N-1 in increasing j, followed by the
/// classified `complementary_betas` (each must land in the complementary series).
std::vector<SeriesSpec> enumerate_series(
    const PhaseParams& params, std::span<const double> complementary_betas = {});

/// `per_interval` evenly spaced interior points of each of the open intervals
/// (-1/2, 0), (0, 1), (1, 3/2).
std::vector<double> complementary_betas(int per_interval);

/// Scans the raw coefficient formula u_n for n = 1, 2, ... and returns the
/// first M >= 2 with u_M == 0 and u_n > 0 for 0 < n < M. Returns nullopt when a
/// coefficient is negative or undefined (vanishing denominator) before that,
/// or when u_1 == 0. The j = 2 convention is not applied.
std::optional<int> positive_dimension(const PhaseParams& params, double beta);

}  // namespace qusp
