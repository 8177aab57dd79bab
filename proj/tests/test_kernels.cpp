#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "qusp/kernels.hpp"

namespace {

namespace k = qusp::kernels;

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double lo, double hi) {
  std::uniform_real_distribution<double> dist(lo, hi);
  std::vector<double> v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

class KernelEquivalence : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!k::avx2::compiled() || k::detected_backend() != k::Backend::Avx2) {
      GTEST_SKIP() << "AVX2 unit not available";
    }
  }
};

TEST_F(KernelEquivalence, MonicTable) {
  std::mt19937_64 rng(11);
  for (std::size_t points : {1u, 3u, 4u, 7u, 16u, 33u}) {
    for (std::size_t degrees : {0u, 1u, 2u, 9u, 30u}) {
      const auto u = random_vector(rng, degrees + 1, 0.2, 1.8);
      const auto x = random_vector(rng, points, -2.0, 2.0);
      std::vector<double> a(points * degrees), b(points * degrees);
      k::scalar::monic_table<double>(u, x, degrees, a);
      k::avx2::monic_table(u, x, degrees, b);
      for (std::size_t i = 0; i < a.size(); ++i) {
        EXPECT_NEAR(a[i], b[i], 1e-12 * (1 + std::abs(a[i]))) << points << " " << degrees << " " << i;
      }
    }
  }
}

TEST_F(KernelEquivalence, WeightedGram) {
  std::mt19937_64 rng(12);
  for (std::size_t points : {1u, 5u, 8u, 13u, 31u}) {
    for (std::size_t degrees : {1u, 4u, 11u}) {
      const auto table = random_vector(rng, points * degrees, -3.0, 3.0);
      const auto w = random_vector(rng, points, 0.1, 2.0);
      std::vector<double> a(degrees * degrees), b(degrees * degrees);
      k::scalar::weighted_gram<double>(table, degrees, w, a);
      k::avx2::weighted_gram(table, degrees, w, b);
      for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-12 * (1 + std::abs(a[i])));
      for (std::size_t n = 0; n < degrees; ++n)
        for (std::size_t m = 0; m < degrees; ++m) EXPECT_EQ(b[n * degrees + m], b[m * degrees + n]);
    }
  }
}

TEST_F(KernelEquivalence, Matmul) {
  std::mt19937_64 rng(13);
  for (std::size_t n : {1u, 2u, 3u, 4u, 5u, 8u, 17u, 32u}) {
    const auto a = random_vector(rng, n * n, -1.0, 1.0);
    const auto b = random_vector(rng, n * n, -1.0, 1.0);
    std::vector<double> c1(n * n), c2(n * n);
    k::scalar::matmul<double>(a, b, n, c1);
    k::avx2::matmul(a, b, n, c2);
    for (std::size_t i = 0; i < n * n; ++i) EXPECT_NEAR(c1[i], c2[i], 1e-13 * n);
  }
}

TEST(KernelDispatch, ForcedScalar) {
  k::force_backend(k::Backend::Scalar);
  EXPECT_EQ(k::active_backend(), k::Backend::Scalar);
  const std::vector<double> a{1, 2, 3, 4}, b{5, 6, 7, 8};
  std::vector<double> c(4);
  k::matmul<double>(a, b, 2, c);
  EXPECT_EQ(c, (std::vector<double>{19, 22, 43, 50}));
  k::force_backend(std::nullopt);
  EXPECT_EQ(k::active_backend(), k::detected_backend());
  EXPECT_EQ(k::backend_name(k::Backend::Scalar), "scalar");
}

}  // namespace
