#ifndef SPECTRA_SQUAREBASIS_HPP
#define SPECTRA_SQUAREBASIS_HPP

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "spectra/conformal.hpp"
#include "spectra/error.hpp"
#include "spectra/linalg.hpp"

namespace spectra {

// Dirichlet eigenstate sin(nx pi (x+1)/2) sin(ny pi (y+1)/2) of the side-2 square.
struct SquareIndex {
    int nx = 1, ny = 1;

    int q() const { return nx * nx + ny * ny; }
    double energy() const { return 0.25 * std::numbers::pi * std::numbers::pi * q(); }
    std::string label() const { return "(" + std::to_string(nx) + "," + std::to_string(ny) + ")"; }
    friend bool operator==(const SquareIndex&, const SquareIndex&) = default;
};

inline int fold_index(int nx, int ny, int N) {
    if (N < 1 || nx < 1 || ny < 1 || nx > N || ny > N) throw RangeError("fold_index: label outside 1..N");
    return ny + N * (nx - 1);
}

inline SquareIndex unfold_index(int k, int N) {
    if (N < 1 || k < 1 || k > N * N) throw RangeError("unfold_index: index outside 1..N^2");
    return {(k - 1) / N + 1, (k - 1) % N + 1};
}

// Labels in fold order, position i holds unfold_index(i + 1, N).
inline std::vector<SquareIndex> square_labels(int N) {
    std::vector<SquareIndex> out;
    for (int k = 1; k <= N * N; ++k) out.push_back(unfold_index(k, N));
    return out;
}

// Q_nmk = int x^k phi_n phi_m and R_nmk = int x^k chi_n chi_m over [-1, 1], with
// phi_n = sin(n pi (x+1)/2), chi_0 = 1/sqrt(2), chi_n = cos(n pi (x+1)/2).
// The upward recurrences amplify rounding by roughly 10^(1.6 k), so they run in MPFR
// with precision growing with the highest power requested.
class IntegralTable {
public:
    static constexpr int kMaxPower = 400;

    double q(int n, int m, int k) {
        if (n < 1 || m < 1) throw RangeError("q_integral: indices start at 1");
        std::lock_guard<std::mutex> lock(mutex_);
        return entry(n, m, k).q[k];
    }

    double r(int n, int m, int k) {
        if (n < 0 || m < 0) throw RangeError("r_integral: indices start at 0");
        std::lock_guard<std::mutex> lock(mutex_);
        return entry(n, m, k).r[k];
    }

    // Q_nnk + R_nnk, which must equal (1 + (-1)^k)/(k + 1).
    double qr_sum(int n, int k) { return q(n, n, k) + r(n, n, k); }

private:
    struct Entry {
        std::vector<double> q, r;
    };

    // Caller holds the mutex.
    const Entry& entry(int n, int m, int k) {
        if (k < 0 || k > kMaxPower) throw RangeError("integral table: power out of range");
        if (n > m) std::swap(n, m);
        auto it = memo_.find({n, m});
        if (it != memo_.end() && int(it->second.q.size()) > k) return it->second;
        const int top = std::min(kMaxPower, std::max({k, 80, it == memo_.end() ? 0 : 2 * int(it->second.q.size())}));
        Entry e = compute(n, m, top);
        return memo_.insert_or_assign({n, m}, std::move(e)).first->second;
    }

    static Entry compute(int n, int m, int K) {
        using boost::multiprecision::mpfr_float;
        mpfr_float::default_precision(unsigned(1.7 * K) + 40);
        const mpfr_float pi = boost::math::constants::pi<mpfr_float>(), pi2 = pi * pi;
        std::vector<mpfr_float> Q(K + 1, mpfr_float(0)), R(K + 1, mpfr_float(0));
        auto sgn = [](int p) { return p % 2 == 0 ? 1 : -1; };
        if (n == 0) {
            if (m == 0) {
                for (int k = 0; k <= K; ++k) R[k] = mpfr_float(1 + sgn(k)) / (2 * (k + 1));
            } else {
                // I_k = int x^k cos(a (x+1)), a = m pi/2, by two integrations by parts.
                const mpfr_float a2 = pi2 * m * m / 4;
                std::vector<mpfr_float> I(K + 1, mpfr_float(0));
                for (int k = 1; k <= K; ++k) {
                    I[k] = mpfr_float(k * (sgn(m) + sgn(k))) / a2;
                    if (k >= 2) I[k] -= mpfr_float(k) * (k - 1) / a2 * I[k - 2];
                }
                const mpfr_float rt = boost::multiprecision::sqrt(mpfr_float(2));
                for (int k = 0; k <= K; ++k) R[k] = I[k] / rt;
            }
        } else if (n == m) {
            Q[0] = 1;
            for (int k = 0; k + 2 <= K; ++k)
                Q[k + 2] = mpfr_float(sgn(k) + 1) / (2 * (k + 3)) - mpfr_float(k * k + 3 * k + 2) / (pi2 * n * n) * Q[k];
            for (int k = 0; k <= K; ++k) R[k] = mpfr_float(1 + sgn(k)) / (k + 1) - Q[k];
        } else {
            const int s = sgn(n + m);
            const int n2 = n * n, m2 = m * m, d2 = (m2 - n2) * (m2 - n2);
            const mpfr_float D = pi2 * d2;
            if (K >= 1) {
                Q[1] = mpfr_float(8 * m * n * (s - 1)) / D;
                R[1] = mpfr_float(4 * (n2 + m2) * (s - 1)) / D;
            }
            for (int k = 0; k + 2 <= K; ++k) {
                const mpfr_float c = mpfr_float((k + 1) * (k + 2)) / D;
                const int par = sgn(k) + s;
                Q[k + 2] = mpfr_float(8 * (k + 2) * m * n * par) / D - 4 * (m2 + n2) * c * Q[k] - 8 * m * n * c * R[k];
                R[k + 2] = mpfr_float(4 * (k + 2) * (m2 + n2) * par) / D - 8 * m * n * c * Q[k] - 4 * (m2 + n2) * c * R[k];
            }
        }
        Entry e;
        for (int k = 0; k <= K; ++k) {
            e.q.push_back(n == 0 ? 0.0 : Q[k].convert_to<double>());
            e.r.push_back(R[k].convert_to<double>());
        }
        return e;
    }

    std::mutex mutex_;
    std::map<std::pair<int, int>, Entry> memo_;
};

inline IntegralTable& default_integral_table() {
    static IntegralTable table;
    return table;
}

inline double q_integral(int n, int m, int k) { return default_integral_table().q(n, m, k); }
inline double r_integral(int n, int m, int k) { return default_integral_table().r(n, m, k); }
inline double qr_sum_check(int n, int k) { return default_integral_table().qr_sum(n, k); }

// <a|Sigma|b> = sum kappa_nm Q_{ax bx n} Q_{ay by m}.
inline double sigma_matrix_element(const BivariatePoly& kappa, const SquareIndex& a, const SquareIndex& b) {
    auto& t = default_integral_table();
    double s = 0.0;
    for (int n = 0; n <= kappa.degree(); ++n) {
        const double qx = t.q(a.nx, b.nx, n);
        if (qx == 0.0) continue;
        double row = 0.0;
        for (int m = 0; n + m <= kappa.degree(); ++m) {
            const double c = kappa.kappa(n, m);
            if (c != 0.0) row += c * t.q(a.ny, b.ny, m);
        }
        s += qx * row;
    }
    return s;
}

// Full Sigma matrix over the N^2 square states in fold order.
inline DenseSymMatrix sigma_matrix(const BivariatePoly& kappa, int N) {
    auto& t = default_integral_table();
    const int d = kappa.degree();
    const int pairs = N * N;
    // qt[(a-1)N + (b-1)][k] = Q_{abk}
    std::vector<std::vector<double>> qt(pairs, std::vector<double>(d + 1));
    for (int a = 1; a <= N; ++a)
        for (int b = 1; b <= N; ++b)
            for (int k = 0; k <= d; ++k) qt[(a - 1) * N + (b - 1)][k] = t.q(a, b, k);
    // w[ay,by][n] = sum_m kappa_nm Q_{ay by m}
    std::vector<std::vector<double>> w(pairs, std::vector<double>(d + 1, 0.0));
    for (int p = 0; p < pairs; ++p)
        for (int n = 0; n <= d; ++n) {
            double s = 0.0;
            for (int m = 0; n + m <= d; ++m) s += kappa.kappa(n, m) * qt[p][m];
            w[p][n] = s;
        }
    const int order = N * N;
    Matrix out(order, order);
    for (int i = 0; i < order; ++i) {
        const SquareIndex a = unfold_index(i + 1, N);
        for (int j = i; j < order; ++j) {
            const SquareIndex b = unfold_index(j + 1, N);
            const auto& qx = qt[(a.nx - 1) * N + (b.nx - 1)];
            const auto& wy = w[(a.ny - 1) * N + (b.ny - 1)];
            double s = 0.0;
            for (int n = 0; n <= d; ++n) s += qx[n] * wy[n];
            out(i, j) = out(j, i) = s;
        }
    }
    return DenseSymMatrix(std::move(out));
}

}  // namespace spectra

#endif
