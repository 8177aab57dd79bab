#pragma once

// Reference values computed independently at 200-bit precision from the
// defining sums and recurrences (direct Gram sums, dense eigenvalues, explicit
// polynomial ratios), rounded to 20 significant digits.

#include <array>

namespace oracle {

inline constexpr std::array<double, 8> u_N7_beta03{
    0.0, 1.5609342668032294536, 1.0877117413446451799, 1.0485154424526779908,
    1.0444845885905784894, 1.0641121420469249091, 1.1942418187619439772, 0.0};
inline constexpr std::array<double, 5> u_N6_j3{
    0.0, 0.73205080756887729353, 0.80384757729336811942, 0.73205080756887729353, 0.0};
inline constexpr std::array<double, 4> u_N3_j1{0.0, 1.5, 1.5, 0.0};

inline constexpr std::array<double, 7> w_N7_beta03{
    1.0, 1.9195394151942777871, 2.4023045282803285965, 2.5590157759581995342,
    2.4023045282803285965, 1.9195394151942777871, 1.0};
inline constexpr double w_N7_beta03_total = 13.202703662907412301;

inline constexpr std::array<double, 5> h_N7_j3{
    2.7469796037174670611, 2.0685316697713623391, 1.75, 1.4805187876763338859, 1.1148608441997681869};
inline constexpr std::array<double, 5> h_N8_j4{
    2.4142135623730950488, 1.4142135623730950488, 1.0, 0.7071067811865475244, 0.4142135623730950488};
inline constexpr std::array<double, 5> h_N9_j5{
    2.0293027979286648144, 0.9495333323392335264, 0.5625, 0.33322289931677682357, 0.15591869795033047072};
inline constexpr std::array<double, 7> h_N7_beta12{
    147.31793671252382058, 131.49490622705342711, 124.18480456928835249, 118.12663978889683178,
    110.22609474112828358, 90.272125030774578683, 222.04168996540234102};

// Descending eigenvalues of the symmetrized Jacobi matrix.
inline constexpr std::array<double, 7> eig_N7_j1{
    1.949855824363647214, 1.5636629649360596174, 0.86776747823511624095, 0.0,
    -0.86776747823511624095, -1.5636629649360596174, -1.949855824363647214};
inline constexpr std::array<double, 6> eig_N6_beta075{
    1.9318516525781365735, 1.4142135623730950488, 0.5176380902050415247,
    -0.5176380902050415247, -1.4142135623730950488, -1.9318516525781365735};

// P_{n+2}(x_0) / P_n(x_0) for N = 8, j = 1.
inline constexpr std::array<double, 6> A_N8_j1{
    2.4966057626654890176, 1.4142135623730950488, 1.1329089947010430731,
    0.96043387010341996525, 0.80108763262034199309, 0.5857864376269049512};

inline constexpr double even_N16_k3_lhs = 3.9375492785742108084;
inline constexpr double odd_N16_k2_lhs = 4.8033089638038173077;

inline constexpr double nu_N7_beta03 = 0.94244922825052439082;
inline constexpr double casimir_N7_beta03 = -5.0062348000301326926;

inline constexpr double corner_N6_beta075 = -0.50431448029007636036;
inline constexpr std::array<double, 5> d_N6_beta075{
    1.1282433381058562453, 1.0359209356755882126, 1.0264192491702827266,
    1.0359209356755882126, 1.1282433381058562453};

}  // namespace oracle
