#include <cmath>
#include <random>

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include "quadrature_oracle.hpp"
#include "spectra/special.hpp"

using namespace spectra;

TEST(Bessel, MatchesBoostOnAGrid) {
    for (int k = 0; k <= 30; ++k)
        for (double x = 0.05; x < 120.0; x += 0.37) {
            const double ref = boost::math::cyl_bessel_j(k, x);
            EXPECT_NEAR(bessel_j(k, x), ref, 2e-14 * std::max(1.0, std::abs(ref))) << "k=" << k << " x=" << x;
        }
}

TEST(Bessel, ParityForNegativeArgument) {
    EXPECT_DOUBLE_EQ(bessel_j(3, -2.5), -bessel_j(3, 2.5));
    EXPECT_DOUBLE_EQ(bessel_j(4, -2.5), bessel_j(4, 2.5));
}

TEST(Bessel, RangeErrors) {
    EXPECT_THROW(bessel_j(-1, 1.0), RangeError);
    EXPECT_THROW(bessel_j(kMaxBesselOrder + 1, 1.0), RangeError);
    EXPECT_THROW(bessel_j(0, 2.0 * kMaxBesselArgument), RangeError);
    EXPECT_THROW(bessel_zero(0, 0), RangeError);
}

TEST(BesselZeros, MatchBoost) {
    for (int k = 0; k <= 30; ++k)
        for (int n = 1; n <= 12; ++n)
            EXPECT_NEAR(bessel_zero(k, n), boost::math::cyl_bessel_j_zero(double(k), n), 1e-12) << k << "," << n;
}

TEST(BesselZeros, SignChangeAcrossEveryZero) {
    for (int k = 0; k <= 30; ++k)
        for (int n = 1; n <= 12; ++n) {
            const double g = bessel_zero(k, n);
            EXPECT_LT(bessel_j(k, g - 1e-9) * bessel_j(k, g + 1e-9), 0.0) << k << "," << n;
        }
}

TEST(BesselZeros, Interlacing) {
    for (int k = 0; k < 30; ++k)
        for (int n = 1; n < 12; ++n) {
            EXPECT_LT(bessel_zero(k, n), bessel_zero(k + 1, n));
            EXPECT_LT(bessel_zero(k + 1, n), bessel_zero(k, n + 1));
        }
}

TEST(DiskModes, Normalised) {
    // 2 pi (or pi) int_0^1 r R^2 J_k^2 dr = 1
    for (int k : {0, 1, 3}) {
        for (int n : {1, 2, 4}) {
            const double g = bessel_zero(k, n), c = disk_mode_norm(k, n);
            auto f = [&](double r) { return r * std::pow(bessel_j(k, g * r), 2); };
            const double I = composite_gk(f, 0.0, 1.0);
            const double ang = k == 0 ? 2.0 * std::numbers::pi : std::numbers::pi;
            EXPECT_NEAR(c * c * I * ang, 1.0, 1e-12);
        }
    }
}

TEST(RadialIntegrals, MatchQuadratureOnRandomArguments) {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> kd(0, 10), nd(1, 6), pd(0, 40);
    for (int trial = 0; trial < 60; ++trial) {
        const int k = kd(rng), n = nd(rng), k2 = kd(rng), n2 = nd(rng), p = pd(rng);
        const double g1 = bessel_zero(k, n), g2 = bessel_zero(k2, n2);
        auto f = [&](double r) { return std::pow(r, p + 1) * bessel_j(k, g1 * r) * bessel_j(k2, g2 * r); };
        const double ref = composite_gk(f, 0.0, 1.0);
        EXPECT_NEAR(radial_integral(k, n, k2, n2, p), ref, 1e-12) << k << " " << n << " " << k2 << " " << n2 << " " << p;
    }
}

TEST(RadialIntegrals, SymmetricInTheTwoModes) {
    EXPECT_DOUBLE_EQ(radial_integral(2, 1, 3, 2, 5), radial_integral(3, 2, 2, 1, 5));
}

TEST(RadialIntegrals, RangeErrors) {
    EXPECT_THROW(radial_integral(-1, 1, 0, 1, 0), RangeError);
    EXPECT_THROW(radial_integral(0, 1, 0, 1, -2), RangeError);
}

TEST(GaussLegendre, ExactForPolynomials) {
    const QuadratureRule q = gauss_legendre(12);
    for (int p = 0; p <= 23; ++p) {
        double s = 0.0;
        for (size_t i = 0; i < q.nodes.size(); ++i) s += q.weights[i] * std::pow(q.nodes[i], p);
        EXPECT_NEAR(s, p % 2 ? 0.0 : 2.0 / (p + 1), 1e-14) << p;
    }
}
