#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>

#include <boost/math/special_functions/bessel.hpp>
#include <gtest/gtest.h>

#include "spectra/cmm.hpp"

using namespace spectra;

namespace {

// Lowest `count` Dirichlet eigenvalues of the unit disk, with multiplicity.
std::vector<double> disk_exact(size_t count) {
    std::vector<double> v;
    for (int k = 0; k <= 20; ++k)
        for (int n = 1; n <= 10; ++n) {
            const double g = boost::math::cyl_bessel_j_zero(double(k), n);
            v.push_back(g * g);
            if (k > 0) v.push_back(g * g);
        }
    std::sort(v.begin(), v.end());
    v.resize(count);
    return v;
}

const Spectrum& circle(int N) {
    static std::map<int, Spectrum> cache;
    auto it = cache.find(N);
    if (it == cache.end()) it = cache.emplace(N, cmm::solve(cmm::assemble(map_square_to_disk(), N), 12)).first;
    return it->second;
}

}  // namespace

TEST(CmmAssemble, IdentityGivesUnitSigma) {
    const cmm::CmmProblem p = cmm::assemble(identity_map(), 6);
    for (size_t i = 0; i < 36; ++i)
        for (size_t j = 0; j < 36; ++j) EXPECT_NEAR(p.sigma(i, j), i == j ? 1.0 : 0.0, 1e-15);
    for (double e : p.eps) EXPECT_GT(e, 0.0);
}

TEST(CmmAssemble, RejectsDiskMaps) {
    EXPECT_THROW(cmm::assemble(map_robnik(0.1).map, 5), PreconditionError);
    EXPECT_THROW(cmm::assemble(identity_map(), 0), RangeError);
}

TEST(CmmSolve, IdentityGivesExactSquareSpectrum) {
    const Spectrum s = cmm::solve(cmm::assemble(identity_map(), 6), 6);
    const double e = std::numbers::pi * std::numbers::pi / 4;
    const double expect[] = {2 * e, 5 * e, 5 * e, 8 * e, 10 * e, 10 * e};
    for (size_t i = 0; i < 6; ++i) EXPECT_NEAR(s[i], expect[i], 1e-12);
    EXPECT_EQ(s.levels[0].label, "(1,1)");
    EXPECT_EQ(s.levels[1].degeneracy, 2);
    EXPECT_THROW(cmm::solve(cmm::assemble(identity_map(), 2), 5), RangeError);
}

TEST(CmmSolve, CircleGroundAtTenAndTwenty) {
    EXPECT_NEAR(circle(10)[0], 5.7831903186, 1e-9);
    EXPECT_NEAR(circle(20)[0], 5.7831860077, 1e-9);
    EXPECT_NEAR(circle(20)[1], 14.681971199, 1e-8);
    EXPECT_NEAR(circle(20)[2], 14.681971199, 1e-8);
}

TEST(CmmSolve, VariationalMonotonicityInN) {
    for (size_t i = 0; i < 12; ++i) {
        EXPECT_LE(circle(20)[i], circle(10)[i] * (1 + 1e-13)) << i;
        EXPECT_LE(circle(30)[i], circle(20)[i] * (1 + 1e-13)) << i;
    }
}

TEST(CmmSolve, UpperBoundsOnExactDiskLevels) {
    const auto exact = disk_exact(12);
    for (int N : {10, 20, 30})
        for (size_t i = 0; i < 12; ++i) EXPECT_GE(circle(N)[i], exact[i] * (1 - 1e-12)) << N << " " << i;
}

TEST(CmmSolve, DegeneratePairAtThirty) {
    EXPECT_NEAR(circle(30)[1], circle(30)[2], 1e-9);
    EXPECT_EQ(circle(30).levels[1].degeneracy, 2);
}
