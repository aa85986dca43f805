#ifndef SPECTRA_SPECIAL_HPP
#define SPECTRA_SPECIAL_HPP

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <tuple>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/tools/roots.hpp>

#include "spectra/error.hpp"

namespace spectra {

inline constexpr int kMaxBesselOrder = 64;
inline constexpr double kMaxBesselArgument = 1000.0;

namespace detail {

inline double bessel_series(int k, double x) {
    const double q = -0.25 * x * x;
    double term = 1.0;
    for (int j = 1; j <= k; ++j) term *= 0.5 * x / j;
    double sum = term;
    for (int m = 1; m < 500; ++m) {
        term *= q / (m * double(m + k));
        sum += term;
        if (std::abs(term) < 1e-17 * std::abs(sum)) break;
    }
    return sum;
}

// Miller backward recurrence normalised by J0 + 2 sum J_2m = 1.
inline double bessel_miller(int k, double x) {
    const double big = 1e200;
    const double top = std::max<double>(k, x);
    int m = int(top + 20.0 + std::sqrt(60.0 * top));
    m += m % 2;
    double jp1 = 0.0, j = 1e-280, norm = 0.0, result = 0.0;
    for (int n = m; n >= 1; --n) {
        if (n == k) result = j;
        if (n % 2 == 0) norm += 2.0 * j;
        const double jm1 = 2.0 * n / x * j - jp1;
        jp1 = j;
        j = jm1;
        if (std::abs(j) > big) {
            j /= big;
            jp1 /= big;
            norm /= big;
            result /= big;
        }
    }
    if (k == 0) result = j;
    norm += j;
    return result / norm;
}

}  // namespace detail

inline double bessel_j(int k, double x) {
    if (k < 0 || k > kMaxBesselOrder)
        throw RangeError("bessel_j: order " + std::to_string(k) + " outside [0, 64]");
    if (!std::isfinite(x) || std::abs(x) > kMaxBesselArgument)
        throw RangeError("bessel_j: argument outside supported range");
    if (x < 0) return (k % 2 ? -1.0 : 1.0) * bessel_j(k, -x);
    if (x == 0) return k == 0 ? 1.0 : 0.0;
    if (x < 4.0 || x * x < 4.0 * (k + 1)) return detail::bessel_series(k, x);
    return detail::bessel_miller(k, x);
}

inline double bessel_jp(int k, double x) {
    if (k == 0) return -bessel_j(1, x);
    const double kp1 = k + 1 <= kMaxBesselOrder ? bessel_j(k + 1, x)
                                                : 2.0 * k / x * bessel_j(k, x) - bessel_j(k - 1, x);
    return 0.5 * (bessel_j(k - 1, x) - kp1);
}

// Positive zeros gamma_kn, built order by order from interlacing brackets.
class BesselZeroTable {
public:
    explicit BesselZeroTable(int max_order = kMaxBesselOrder, int max_index = 64)
        : max_order_(max_order), max_index_(max_index) {
        if (max_order < 0 || max_order > kMaxBesselOrder || max_index < 1)
            throw RangeError("BesselZeroTable: bounds out of range");
        zeros_.resize(max_order + 1);
        const int n0 = max_index + max_order;
        for (int n = 1; n <= n0; ++n) {
            const double beta = (n - 0.25) * std::numbers::pi;
            double g = beta + 1.0 / (8.0 * beta) - 31.0 / (384.0 * beta * beta * beta);
            for (int it = 0; it < 6; ++it) g += bessel_j(0, g) / bessel_j(1, g);
            zeros_[0].push_back(g);
        }
        for (int k = 1; k <= max_order; ++k) {
            const auto& prev = zeros_[k - 1];
            for (int n = 0; n + 1 < int(prev.size()); ++n)
                zeros_[k].push_back(refine(k, prev[n], prev[n + 1]));
        }
    }

    double operator()(int k, int n) const {
        if (k < 0 || k > max_order_ || n < 1 || n > max_index_)
            throw RangeError("bessel_zero: (" + std::to_string(k) + "," + std::to_string(n) +
                             ") outside table");
        return zeros_[k][n - 1];
    }

    int max_order() const { return max_order_; }
    int max_index() const { return max_index_; }

private:
    static double refine(int k, double a, double b) {
        auto f = [k](double x) { return bessel_j(k, x); };
        std::uintmax_t iters = 200;
        auto tol = boost::math::tools::eps_tolerance<double>(52);
        auto [lo, hi] = boost::math::tools::toms748_solve(f, a, b, f(a), f(b), tol, iters);
        double g = 0.5 * (lo + hi);
        g -= bessel_j(k, g) / bessel_jp(k, g);
        return g;
    }

    int max_order_, max_index_;
    std::vector<std::vector<double>> zeros_;
};

inline const BesselZeroTable& default_zero_table() {
    static const BesselZeroTable table;
    return table;
}

inline double bessel_zero(int k, int n) { return default_zero_table()(k, n); }

// R_kn with |J'| so that every normalisation constant is positive.
inline double disk_mode_norm(int k, int n) {
    const double g = bessel_zero(k, n);
    const double c = k == 0 ? 1.0 : std::sqrt(2.0);
    return c / (std::sqrt(std::numbers::pi) * std::abs(bessel_jp(k, g)));
}

// int_0^1 r^{p+1} J_k(g_kn r) J_k2(g_k2n2 r) dr, memoised.
class RadialIntegrals {
public:
    static constexpr double kTolerance = 1e-12;
    static constexpr int kMaxPower = 100000;

    double operator()(int k, int n, int k2, int n2, int p) {
        if (k < 0 || k2 < 0 || k > kMaxBesselOrder || k2 > kMaxBesselOrder)
            throw RangeError("radial_integral: Bessel order out of range");
        if (p < 0 || p > kMaxPower) throw RangeError("radial_integral: power out of range");
        if (std::tie(k2, n2) < std::tie(k, n)) {
            std::swap(k, k2);
            std::swap(n, n2);
        }
        const auto key = std::make_tuple(k, n, k2, n2, p);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        }
        const double v = compute(k, n, k2, n2, p);
        std::lock_guard<std::mutex> lock(mutex_);
        memo_.emplace(key, v);
        return v;
    }

private:
    static double compute(int k, int n, int k2, int n2, int p) {
        const double g1 = bessel_zero(k, n), g2 = bessel_zero(k2, n2);
        auto f = [&](double r) {
            return std::pow(r, p + 1) * bessel_j(k, g1 * r) * bessel_j(k2, g2 * r);
        };
        // Panels of about half a period, plus grading towards r = 1 for peaked powers.
        std::vector<double> cuts{0.0};
        const int panels = std::max(2, int(std::ceil((g1 + g2) / std::numbers::pi)));
        for (int i = 1; i < panels; ++i) cuts.push_back(double(i) / panels);
        for (double w = 1.0 / panels; w * p > 2.0; w *= 0.5)
            if (1.0 - w * 0.5 > cuts.back()) cuts.push_back(1.0 - w * 0.5);
        cuts.push_back(1.0);
        // Fixed Gauss-Legendre rules per panel; the gap between the two sizes is the error estimate.
        double total = 0.0, err_total = 0.0;
        for (size_t i = 0; i + 1 < cuts.size(); ++i) {
            const double lo = boost::math::quadrature::gauss<double, 20>::integrate(f, cuts[i], cuts[i + 1]);
            const double hi = boost::math::quadrature::gauss<double, 30>::integrate(f, cuts[i], cuts[i + 1]);
            total += hi;
            err_total += std::abs(hi - lo);
        }
        if (err_total > kTolerance) throw AccuracyError("radial_integral did not converge", err_total);
        return total;
    }

    std::mutex mutex_;
    std::map<std::tuple<int, int, int, int, int>, double> memo_;
};

inline RadialIntegrals& default_radial_integrals() {
    static RadialIntegrals table;
    return table;
}

inline double radial_integral(int k, int n, int k2, int n2, int p) {
    return default_radial_integrals()(k, n, k2, n2, p);
}

struct QuadratureRule {
    std::vector<double> nodes, weights;
};

// Gauss-Legendre rule on [-1, 1] with m nodes, by Newton on P_m.
inline QuadratureRule gauss_legendre(int m) {
    if (m < 1) throw RangeError("gauss_legendre: need at least one node");
    QuadratureRule q;
    q.nodes.resize(m);
    q.weights.resize(m);
    for (int i = 0; i < (m + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (m + 0.5)), dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= m; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            if (m == 1) p0 = 1.0;
            dp = m * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        double p0 = 1.0, p1 = x;
        for (int j = 2; j <= m; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        dp = m * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        q.nodes[i] = -x;
        q.nodes[m - 1 - i] = x;
        q.weights[i] = q.weights[m - 1 - i] = w;
    }
    return q;
}

}  // namespace spectra

#endif
