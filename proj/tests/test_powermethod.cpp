#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "spectra/cmm.hpp"
#include "spectra/powermethod.hpp"

using namespace spectra;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kDiskGround = 5.7831859629;  // gamma_{0,1}^2 rounded down

const power::PowerSetup& circle_setup(int N_int) {
    static std::map<int, power::PowerSetup> cache;
    auto it = cache.find(N_int);
    if (it == cache.end()) it = cache.emplace(N_int, power::prepare(map_square_to_disk(), N_int)).first;
    return it->second;
}

}  // namespace

TEST(ApplyInverse, IdentityMapDividesByBoxEnergies) {
    const power::PowerSetup s = power::prepare(identity_map(), 5);
    std::mt19937 rng(41);
    std::normal_distribution<double> g;
    power::BasisState st;
    st.coeffs.resize(25);
    for (double& c : st.coeffs) c = g(rng);
    const power::BasisState out = power::apply_inverse(st, s);
    EXPECT_EQ(out.generation, 1);
    for (size_t k = 0; k < 25; ++k) EXPECT_NEAR(out.coeffs[k], st.coeffs[k] / s.eps[k], 1e-14);
    st.coeffs.resize(3);
    EXPECT_THROW(power::apply_inverse(st, s), RangeError);
}

TEST(ApplyInverse, OneStepFromTheBoxGroundIsAnUpperBound) {
    const auto& s = circle_setup(10);
    const power::BasisState b = power::box_ground(s), c = power::apply_inverse(b, s);
    const double one_step = power::energy_first_order(b.coeffs, s);
    const double converged = power::theorem1_ground(s).energy;
    EXPECT_GE(one_step, converged);
    EXPECT_GE(converged, kDiskGround);
    EXPECT_LT(one_step - kDiskGround, 0.05);
    EXPECT_GT(dot(c.coeffs, c.coeffs), 0.0);
}

TEST(EnergyFirstOrder, IdentityMapExact) {
    const power::PowerSetup s = power::prepare(identity_map(), 4);
    EXPECT_NEAR(power::energy_first_order(power::box_ground(s).coeffs, s), kPi * kPi / 2, 1e-13);
}

TEST(EnergyFirstOrder, SingleStateTruncationReducesToSimpleFormula) {
    const ConformalMap h = map_square_to_disk();
    const power::PowerSetup s = power::prepare(h, 1);
    const double sigma00 = sigma_matrix_element(sigma_polynomial(h), {1, 1}, {1, 1});
    EXPECT_NEAR(power::energy_first_order({1.0}, s), (kPi * kPi / 2) / sigma00, 1e-13);
}

TEST(EnergyFirstOrder, UpperBoundOverRandomTrialStates) {
    const auto& s = circle_setup(12);
    std::mt19937 rng(42);
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> decay(0.2, 3.0);
    int trials = 0;
    for (; trials < 1200; ++trials) {
        Vector c(s.eps.size());
        const double d = decay(rng);
        for (size_t k = 0; k < c.size(); ++k) c[k] = g(rng) * std::exp(-d * (s.eps[k] - s.eps[0]) / s.eps[0]);
        EXPECT_GE(power::energy_first_order(c, s), kDiskGround) << "trial " << trials;
    }
    EXPECT_GE(trials, 1000);
    const power::PowerSetup id = power::prepare(identity_map(), 6);
    for (int t = 0; t < 200; ++t) {
        Vector c(id.eps.size());
        for (double& v : c) v = g(rng);
        EXPECT_GE(power::energy_first_order(c, id), kPi * kPi / 2 * (1 - 1e-14));
    }
}

TEST(Theorem1, MatchesCmmOnTheCircle) {
    const auto& s = circle_setup(20);
    const power::GroundResult r = power::theorem1_ground(s);
    const Spectrum c = cmm::solve(cmm::assemble(map_square_to_disk(), 20), 1);
    EXPECT_NEAR(r.energy, c[0], 1e-8);
    // 1/<c|B|c> uses the truncated inverse, so it only agrees with the Galerkin value to truncation accuracy
    EXPECT_NEAR(r.rayleigh, c[0], 1e-5);
    EXPECT_LT(r.state.generation, 100);
}

TEST(Theorem1, MatchesCmmOnTheDeformedSquare) {
    const ConformalMap f({0.0, 1.0, 1.0 / 20}, ReferenceDomain::Square2);
    const power::GroundResult r = power::theorem1_ground(power::prepare(f, 20));
    const Spectrum c = cmm::solve(cmm::assemble(f, 20), 1);
    EXPECT_NEAR(r.energy, c[0], 1e-8);
}

TEST(Theorem1, RayleighHistoryNonIncreasing) {
    for (int N_int : {8, 14}) {
        const power::GroundResult r = power::theorem1_ground(circle_setup(N_int));
        ASSERT_GE(r.history.size(), 3u);
        for (size_t i = 1; i < r.history.size(); ++i) EXPECT_LE(r.history[i], r.history[i - 1] * (1 + 1e-14)) << i;
        EXPECT_TRUE(r.warnings.empty());
    }
}

TEST(Theorem1, ShiftMustBeNonNegative) {
    EXPECT_THROW(power::theorem1_ground(circle_setup(8), 1e-12, 500, -1.0), PreconditionError);
    const power::GroundResult shifted = power::theorem1_ground(circle_setup(8), 1e-13, 2000, 2.0);
    const power::GroundResult plain = power::theorem1_ground(circle_setup(8));
    EXPECT_NEAR(shifted.rayleigh, plain.rayleigh, 1e-9);
}

TEST(Theorem1, FirstOrderDerivativeMatchesPerturbationFormula) {
    // f = z + a z^5 / 5 has Sigma = 1 + 2 a Re z^4 + O(a^2)
    const power::PowerSetup base = power::prepare(identity_map(), 4);
    const Vector c0 = power::box_ground(base).coeffs;
    auto energy = [&](double a) {
        const ConformalMap f({0.0, 1.0, 0.0, 0.0, 0.0, a / 5}, ReferenceDomain::Square2);
        return power::energy_first_order(c0, power::prepare(f, 4));
    };
    auto central = [&](double h) { return (energy(h) - energy(-h)) / (2 * h); };
    const double h = 2e-3;
    const double slope = (4 * central(h / 2) - central(h)) / 3;
    const double re_z4 = 2 * q_integral(1, 1, 4) - 6 * q_integral(1, 1, 2) * q_integral(1, 1, 2);
    EXPECT_NEAR(slope, -(kPi * kPi / 2) * 2 * re_z4, 1e-10);
}

TEST(Variational, IdentityGivesBoxGround) {
    const power::PowerSetup s = power::prepare(identity_map(), 6);
    EXPECT_NEAR(power::variational_optimize(s, 3).energy, kPi * kPi / 2, 1e-12);
    EXPECT_THROW(power::variational_optimize(s, 7), RangeError);
}

TEST(Variational, CircleBoundsAndConvergence) {
    const auto& s = circle_setup(36);
    const double e4 = power::variational_optimize(s, 4).energy, e6 = power::variational_optimize(s, 6).energy;
    const double e8 = power::variational_optimize(s, 8).energy, e16 = power::variational_optimize(s, 16).energy;
    EXPECT_GE(e6, kDiskGround);
    EXPECT_LT(e6 - kDiskGround, 1e-4);
    EXPECT_LE(e8, e4);
    EXPECT_LE(e16 - kDiskGround, (e4 - kDiskGround) / 10);
}

TEST(ExcitedSubspace, IdentityMapDegeneratePair) {
    const power::PowerSetup s = power::prepare(identity_map(), 6);
    const power::ExcitedResult r = power::excited_subspace(s, 0.9 * 5 * kPi * kPi / 4, 2);
    ASSERT_EQ(r.energies.size(), 2u);
    for (double e : r.energies) EXPECT_NEAR(e, 5 * kPi * kPi / 4, 1e-10);
}

TEST(ExcitedSubspace, CircleDoublets) {
    const auto& s = circle_setup(30);
    const power::ExcitedResult a = power::excited_subspace(s, 14.7, 2);
    for (double e : a.energies) EXPECT_NEAR(e, 14.681970642, 1e-6);
    const power::ExcitedResult b = power::excited_subspace(s, 26.4, 2);
    for (double e : b.energies) EXPECT_NEAR(e, 26.374616427, 1e-5);
}

TEST(ExcitedSubspace, Errors) {
    const power::PowerSetup s = power::prepare(identity_map(), 4);
    EXPECT_THROW(power::excited_subspace(s, 1.0, 0), RangeError);
    EXPECT_THROW(power::excited_subspace(s, kPi * kPi / 2, 1), ShiftError);
    EXPECT_THROW(power::prepare(identity_map(), 0), RangeError);
}
