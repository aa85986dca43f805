#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "quadrature_oracle.hpp"
#include "spectra/squarebasis.hpp"

using namespace spectra;

namespace {

constexpr double kPi = std::numbers::pi;

double phi(int n, double x) { return std::sin(n * kPi * (x + 1) / 2); }
double chi(int n, double x) { return n == 0 ? 1 / std::sqrt(2.0) : std::cos(n * kPi * (x + 1) / 2); }

template <class F>
double quad(F f) {
    return composite_gk(f, -1.0, 1.0);
}

}  // namespace

TEST(Integrals, MatchQuadratureExhaustively) {
    for (int n = 0; n <= 12; ++n)
        for (int m = 0; m <= 12; ++m)
            for (int k = 0; k <= 10; ++k) {
                const double r = quad([&](double x) { return std::pow(x, k) * chi(n, x) * chi(m, x); });
                EXPECT_NEAR(r_integral(n, m, k), r, 1e-12) << "R " << n << " " << m << " " << k;
                if (n == 0 || m == 0) continue;
                const double q = quad([&](double x) { return std::pow(x, k) * phi(n, x) * phi(m, x); });
                EXPECT_NEAR(q_integral(n, m, k), q, 1e-12) << "Q " << n << " " << m << " " << k;
            }
}

TEST(Integrals, HighPowersStayAccurate) {
    for (int k : {40, 80, 150})
        for (auto [n, m] : {std::pair{1, 1}, {2, 5}, {7, 7}}) {
            const double q = quad([&](double x) { return std::pow(x, k) * phi(n, x) * phi(m, x); });
            EXPECT_NEAR(q_integral(n, m, k), q, 1e-13) << n << " " << m << " " << k;
        }
}

TEST(Integrals, ClosedForms) {
    for (int n = 1; n <= 6; ++n)
        for (int m = 1; m <= 6; ++m) EXPECT_DOUBLE_EQ(q_integral(n, m, 0), n == m ? 1.0 : 0.0);
    for (int n = 1; n <= 6; ++n) EXPECT_NEAR(q_integral(n, n, 2), 1.0 / 3 - 2 / (kPi * kPi * n * n), 1e-15);
    EXPECT_NEAR(q_integral(1, 2, 1), -32 / (9 * kPi * kPi), 1e-15);
}

TEST(Integrals, ParityZeros) {
    // x^k phi_n phi_m is odd about 0 when n + m + k is odd
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= 8; ++m)
            for (int k = 0; k <= 9; ++k)
                if ((n + m + k) % 2 == 1) {
                    EXPECT_EQ(q_integral(n, m, k), 0.0) << n << m << k;
                }
}

TEST(Integrals, Symmetry) {
    for (int n = 1; n <= 9; ++n)
        for (int m = 1; m <= 9; ++m)
            for (int k = 0; k <= 12; ++k) {
                EXPECT_EQ(q_integral(n, m, k), q_integral(m, n, k));
                EXPECT_EQ(r_integral(n, m, k), r_integral(m, n, k));
            }
}

TEST(Integrals, DiagonalSumIdentity) {
    EXPECT_NEAR(qr_sum_check(1, 0), 2.0, 1e-15);
    EXPECT_NEAR(qr_sum_check(3, 1), 0.0, 1e-15);
    EXPECT_NEAR(qr_sum_check(2, 4), 0.4, 1e-15);
    for (int n = 1; n <= 15; ++n)
        for (int k = 0; k <= 60; ++k) EXPECT_NEAR(qr_sum_check(n, k), (1.0 + (k % 2 ? -1 : 1)) / (k + 1), 1e-14);
}

TEST(Integrals, RangeErrors) {
    EXPECT_THROW(q_integral(0, 1, 0), RangeError);
    EXPECT_THROW(r_integral(-1, 1, 0), RangeError);
    EXPECT_THROW(q_integral(1, 1, IntegralTable::kMaxPower + 1), RangeError);
}

TEST(Folding, Bijection) {
    EXPECT_EQ(fold_index(1, 1, 7), 1);
    EXPECT_EQ(fold_index(2, 1, 5), 6);
    for (int nx = 1; nx <= 10; ++nx)
        for (int ny = 1; ny <= 10; ++ny) {
            const SquareIndex s = unfold_index(fold_index(nx, ny, 10), 10);
            EXPECT_EQ(s, (SquareIndex{nx, ny}));
        }
    const auto labels = square_labels(4);
    ASSERT_EQ(labels.size(), 16u);
    for (int k = 1; k <= 16; ++k) EXPECT_EQ(fold_index(labels[k - 1].nx, labels[k - 1].ny, 4), k);
    EXPECT_THROW(fold_index(0, 1, 3), RangeError);
    EXPECT_THROW(fold_index(4, 1, 3), RangeError);
    EXPECT_THROW(unfold_index(10, 3), RangeError);
}

TEST(SquareIndex, Energy) {
    EXPECT_NEAR((SquareIndex{1, 1}).energy(), kPi * kPi / 2, 1e-15);
    EXPECT_EQ((SquareIndex{2, 3}).q(), 13);
}

TEST(SigmaElements, IdentityIsKronecker) {
    const BivariatePoly k = sigma_polynomial(identity_map());
    const DenseSymMatrix s = sigma_matrix(k, 5);
    for (size_t i = 0; i < 25; ++i)
        for (size_t j = 0; j < 25; ++j) EXPECT_NEAR(s(i, j), i == j ? 1.0 : 0.0, 1e-15);
}

TEST(SigmaElements, QuadraticMapClosedForms) {
    const double a = 0.05;
    const BivariatePoly k = sigma_polynomial(ConformalMap({0.0, 1.0, a}, ReferenceDomain::Square2));
    for (int nx = 1; nx <= 4; ++nx)
        for (int ny = 1; ny <= 4; ++ny) {
            const double expect =
                1 + 4 * a * a * (2.0 / 3 - 2 / (kPi * kPi * nx * nx) - 2 / (kPi * kPi * ny * ny));
            EXPECT_NEAR(sigma_matrix_element(k, {nx, ny}, {nx, ny}), expect, 1e-15);
        }
    EXPECT_NEAR(sigma_matrix_element(k, {1, 1}, {2, 1}), -128 * a / (9 * kPi * kPi), 1e-15);
}

TEST(SigmaElements, MatrixSymmetricForRandomKappaAndMatchesElementwise) {
    std::mt19937 rng(31);
    std::normal_distribution<double> g;
    BivariatePoly k(4);
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; n + m <= 4; ++m) k.kappa(n, m) = g(rng);
    const int N = 6;
    const Matrix raw = [&] {
        Matrix r(N * N, N * N);
        for (int i = 0; i < N * N; ++i)
            for (int j = 0; j < N * N; ++j)
                r(i, j) = sigma_matrix_element(k, unfold_index(i + 1, N), unfold_index(j + 1, N));
        return r;
    }();
    const DenseSymMatrix s = sigma_matrix(k, N);
    for (int i = 0; i < N * N; ++i)
        for (int j = 0; j < N * N; ++j) {
            EXPECT_NEAR(raw(i, j), raw(j, i), 1e-12 * std::max(1.0, raw.max_abs()));
            EXPECT_NEAR(s(i, j), raw(i, j), 1e-14);
        }
}

TEST(SigmaElements, MatchTwoDimensionalQuadrature) {
    const ConformalMap f({0.0, 1.0, {0.05, 0.02}, {-0.03, 0.01}}, ReferenceDomain::Square2);
    const BivariatePoly k = sigma_polynomial(f);
    const SquareIndex a{1, 2}, b{3, 2};
    const double ref = quad([&](double x) {
        return quad([&](double y) { return phi(a.nx, x) * phi(a.ny, y) * f.sigma(x, y) * phi(b.nx, x) * phi(b.ny, y); });
    });
    EXPECT_NEAR(sigma_matrix_element(k, a, b), ref, 1e-12);
}
