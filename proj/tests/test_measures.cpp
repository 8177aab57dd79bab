#include <cmath>

#include <gtest/gtest.h>

#include "oracle.hpp"
#include "qusp/measures.hpp"

namespace {

template <std::size_t K>
void expect_relative(const std::vector<double>& got, const std::array<double, K>& want, double tol) {
  ASSERT_EQ(got.size(), K);
  for (std::size_t i = 0; i < K; ++i) EXPECT_NEAR(got[i] / want[i], 1.0, tol) << "index " << i;
}

TEST(Measures, FrozenComplementaryWeights) {
  const auto m = qusp::build_grid_weights<double>(qusp::classify(qusp::make_phase_params(7), 0.3));
  expect_relative(m.weights, oracle::w_N7_beta03, 1e-14);
  EXPECT_NEAR(m.weight_total(), oracle::w_N7_beta03_total, 1e-13);
}

TEST(Measures, FrozenClosedFormNorms) {
  expect_relative(qusp::closed_form_norms<double>(qusp::classify_j(qusp::make_phase_params(7), 3)),
                  oracle::h_N7_j3, 1e-14);
  expect_relative(qusp::closed_form_norms<double>(qusp::classify_j(qusp::make_phase_params(8), 4)),
                  oracle::h_N8_j4, 1e-14);
  expect_relative(qusp::closed_form_norms<double>(qusp::classify_j(qusp::make_phase_params(9), 5)),
                  oracle::h_N9_j5, 1e-14);
}

TEST(Measures, FrozenComplementaryNorms) {
  const auto m = qusp::build_measure<double>(qusp::classify(qusp::make_phase_params(7), 1.2));
  EXPECT_EQ(m.norm_source, qusp::NormSource::Numeric);
  expect_relative(m.norms, oracle::h_N7_beta12, 1e-13);
}

TEST(Measures, ChebyshevNormsAreHalfN) {
  for (int N = 3; N <= 12; ++N) {
    for (double h : qusp::closed_form_norms<double>(qusp::classify_j(qusp::make_phase_params(N), 2))) {
      EXPECT_DOUBLE_EQ(h, N / 2.0);
    }
  }
}

TEST(Measures, ClosedFormNeedsQuantizedSeries) {
  EXPECT_THROW(qusp::closed_form_norms<double>(qusp::classify(qusp::make_phase_params(5), 0.2)),
               qusp::WrongSeries);
}

TEST(Measures, FrozenDarbouxRatios) {
  const auto spec = qusp::classify_j(qusp::make_phase_params(8), 1);
  const auto [step, next] = qusp::darboux_step(qusp::build_measure<double>(spec), qusp::build_recurrence<double>(spec));
  expect_relative(step.A, oracle::A_N8_j1, 1e-14);
  expect_relative(step.A_closed, oracle::A_N8_j1, 1e-14);
  EXPECT_EQ(step.spec_to.j, 3);
  EXPECT_EQ(next.norm_source, qusp::NormSource::Chained);
  EXPECT_EQ(next.norms.size(), 6u);
}

TEST(Measures, DarbouxStepPreconditions) {
  const auto comp = qusp::classify(qusp::make_phase_params(8), 0.2);
  EXPECT_THROW(qusp::darboux_step(qusp::build_measure<double>(comp), qusp::build_recurrence<double>(comp)),
               qusp::WrongSeries);
  const auto last = qusp::classify_j(qusp::make_phase_params(8), 6);
  EXPECT_THROW(qusp::darboux_step(qusp::build_measure<double>(last), qusp::build_recurrence<double>(last)),
               qusp::ChainExhausted);
}

TEST(Measures, KernelPolynomialMatchesDirect) {
  const auto spec = qusp::classify_j(qusp::make_phase_params(11), 2);
  const auto table = qusp::build_recurrence<double>(spec);
  const auto [step, next] = qusp::darboux_step(qusp::build_measure<double>(spec), table);
  const auto table4 = qusp::build_recurrence<double>(step.spec_to);
  for (int n = 0; n < step.spec_to.M; ++n) {
    for (double x : {-1.3, 0.2, 1.1}) {
      EXPECT_NEAR(qusp::kernel_polynomial(table, step, n, x), qusp::eval_monic(table4, n, x), 1e-11);
    }
  }
}

// Property: orthogonality with the constructed measure for every series.
TEST(MeasuresProperty, Orthogonality) {
  for (int N = 2; N <= 32; ++N) {
    const auto params = qusp::make_phase_params(N);
    for (const auto& spec : qusp::enumerate_series(params, qusp::complementary_betas(3))) {
      const auto table = qusp::build_recurrence<double>(spec);
      const auto m = qusp::build_measure<double>(spec);
      for (double w : m.weights) EXPECT_GT(w, 0.0);
      const auto r = qusp::verify_orthogonality(table, m);
      EXPECT_LT(r.offdiagonal, 1e-10) << N << " " << spec.beta;
      if (spec.quantized()) EXPECT_LT(r.diagonal, 1e-11) << N << " " << spec.beta;
    }
  }
}

TEST(MeasuresProperty, ChainsAgreeWithDirectConstructions) {
  for (int N = 4; N <= 24; ++N) {
    for (int j : {1, 2}) {
      const auto chain = qusp::verify_darboux_chain<double>(qusp::make_phase_params(N), j);
      EXPECT_EQ(chain.steps, (N - 1 - j) / 2);
      EXPECT_LT(chain.worst(), 1e-10) << N << " " << j;
    }
  }
}

TEST(MeasuresProperty, QuadChain) {
  const auto chain = qusp::verify_darboux_chain<qusp::Quad>(qusp::make_phase_params(15, 1, 1e-28, 113), 1);
  EXPECT_LT(static_cast<double>(chain.worst()), 1e-27);
}

}  // namespace
