#ifndef SPECTRA_CCM_HPP
#define SPECTRA_CCM_HPP

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <string>
#include <vector>

#include "spectra/conformal.hpp"
#include "spectra/linalg.hpp"
#include "spectra/spectrum.hpp"

namespace spectra::ccm {

// Little sinc function peaked at x_k = k h; k runs over -N/2+1 .. N/2-1.
inline double lsf(int k, double h, int N, double x) {
    if (!(x > -1.0 && x < 1.0)) throw DomainError("lsf: x outside (-1, 1)");
    const double pi = std::numbers::pi;
    const double xk = k * h;
    const double a = (1.0 + 1.0 / (2.0 * N)) * pi / h, b = pi / (2.0 * N * h);
    const double den1 = std::sin(b * (x - xk)), den2 = std::cos(b * (x + xk));
    if (std::abs(den1) > 1e-6 && std::abs(den2) > 1e-6)
        return (std::sin(a * (x - xk)) / den1 - std::cos(a * (x + xk)) / den2) / (2.0 * N);
    // Removable singularity: equivalent finite sine sum.
    double s = 0.0;
    for (int n = 1; n <= N; ++n) s += std::sin(n * pi * (x + 1) / 2) * std::sin(n * pi * (xk + 1) / 2);
    return 2.0 * s / N;
}

namespace detail {

// sum_{n=1}^{N-1} n^2 cos(n t) at t = pi p / N, as minus the second derivative of the Dirichlet kernel.
inline double kernel_g(int N, int p) {
    p %= 2 * N;
    if (p < 0) p += 2 * N;
    if (p == 0) return (N - 1.0) * N * (2.0 * N - 1.0) / 6.0;
    const double t = std::numbers::pi * p / N, a = N - 0.5;
    const double f = std::sin(a * t), fp = a * std::cos(a * t), fpp = -a * a * f;
    const double g = 2.0 * std::sin(0.5 * t), gp = std::cos(0.5 * t);
    const double spp = fpp / g - 2.0 * fp * gp / (g * g) + f / (4.0 * g) + 2.0 * f * gp * gp / (g * g * g);
    return -spp;
}

}  // namespace detail

// c2(j, k) = s_k''(x_j) on the interior nodes, in closed form.
inline Matrix d2_matrix(int N) {
    if (N < 4 || N % 2) throw RangeError("d2_matrix: N must be even and at least 4");
    const int n = N - 1, off = N / 2 - 1;
    const double c = -std::numbers::pi * std::numbers::pi / (4.0 * N);
    Matrix d(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const int ki = i - off, kj = j - off;
            d(i, j) = c * (detail::kernel_g(N, ki - kj) - detail::kernel_g(N, ki + kj + N));
        }
    return d;
}

inline Vector grid_nodes(int N) {
    Vector x;
    for (int k = -N / 2 + 1; k <= N / 2 - 1; ++k) x.push_back(2.0 * k / N);
    return x;
}

// 0-based position of grid point (k, k') using the single-integer labelling.
inline size_t fold_node(int k, int kp, int N) { return size_t(kp + N / 2 - 1) + size_t(N - 1) * size_t(k + N / 2 - 1); }

inline std::pair<int, int> unfold_node(size_t K, int N) {
    const int k = 1 - N / 2 + int(K / (N - 1));
    const int kp = int(K % (N - 1)) - N / 2 + 1;
    return {k, kp};
}

// The universal part: 2D Laplacian on the grid plus its sine eigenbasis.
struct Laplacian {
    int N = 0;
    size_t order = 0;
    Matrix d2;
    std::vector<SparseOperator::Triplet> triplets;  // entries of the Laplacian (not negated)
    Matrix modes;                                    // d2 = -modes diag(mu) modes^T
    Vector mu;
};

inline std::shared_ptr<const Laplacian> laplacian(int N) {
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const Laplacian>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(N); it != cache.end()) return it->second;
    auto lap = std::make_shared<Laplacian>();
    lap->N = N;
    lap->d2 = d2_matrix(N);
    const int n = N - 1;
    lap->order = size_t(n) * n;
    for (int i = 0; i < n; ++i)
        for (int ip = 0; ip < n; ++ip) {
            const size_t row = size_t(ip) + size_t(n) * i;
            for (int j = 0; j < n; ++j) {
                lap->triplets.push_back({row, size_t(ip) + size_t(n) * j, lap->d2(i, j)});
                lap->triplets.push_back({row, size_t(j) + size_t(n) * i, lap->d2(ip, j)});
            }
        }
    const Vector x = grid_nodes(N);
    lap->modes = Matrix(n, n);
    for (int i = 0; i < n; ++i)
        for (int m = 1; m <= n; ++m)
            lap->modes(i, m - 1) = std::sqrt(2.0 / N) * std::sin(m * std::numbers::pi * (x[i] + 1) / 2);
    for (int m = 1; m <= n; ++m) lap->mu.push_back(std::pow(m * std::numbers::pi / 2, 2));
    cache.emplace(N, lap);
    return lap;
}

struct CcmOperator {
    int N = 0;
    bool symmetrized = true;
    SparseOperator op;
    Vector sigma;      // Sigma at the nodes, fold order
    Vector potential;  // optional diagonal term
    std::shared_ptr<const Laplacian> lap;
};

// -(1/Sigma) Laplacian, or Sigma^{-1/2} (-Laplacian) Sigma^{-1/2} when symmetrized, plus diag(V).
inline CcmOperator assemble_operator(const Density& sigma, int N, bool symmetrized = true, const Vector& potential = {}) {
    auto lap = laplacian(N);
    const Vector x = grid_nodes(N);
    const int n = N - 1;
    CcmOperator o;
    o.N = N;
    o.symmetrized = symmetrized;
    o.lap = lap;
    o.potential = potential;
    if (!potential.empty() && potential.size() != lap->order) throw RangeError("assemble_operator: potential has wrong length");
    o.sigma.resize(lap->order);
    for (int i = 0; i < n; ++i)
        for (int ip = 0; ip < n; ++ip) {
            const double s = sigma(x[i], x[ip]);
            if (!(s > 0.0)) throw ConformalityError("assemble_operator: non-positive density at a node");
            o.sigma[size_t(ip) + size_t(n) * i] = s;
        }
    std::vector<SparseOperator::Triplet> t;
    t.reserve(lap->triplets.size() + lap->order);
    if (symmetrized) {
        Vector r(lap->order);
        for (size_t i = 0; i < r.size(); ++i) r[i] = 1.0 / std::sqrt(o.sigma[i]);
        for (const auto& e : lap->triplets) t.push_back({e.row, e.col, -r[e.row] * e.value * r[e.col]});
        for (size_t i = 0; i < potential.size(); ++i) t.push_back({i, i, potential[i]});
        o.op = SparseOperator(lap->order, std::move(t));
    } else {
        Vector scale(lap->order);
        for (size_t i = 0; i < scale.size(); ++i) scale[i] = 1.0 / o.sigma[i];
        for (const auto& e : lap->triplets) t.push_back({e.row, e.col, -e.value});
        // diag(V) sits outside the 1/Sigma scaling, so fold it in as V Sigma.
        for (size_t i = 0; i < potential.size(); ++i) t.push_back({i, i, potential[i] * o.sigma[i]});
        o.op = SparseOperator(lap->order, std::move(t), std::move(scale));
    }
    return o;
}

inline CcmOperator assemble_operator(const ConformalMap& map, int N, bool symmetrized = true) {
    if (map.domain() == ReferenceDomain::Square2) return assemble_operator(map.density(), N, symmetrized);
    return assemble_operator(disk_density_on_square(map), N, symmetrized);
}

// Applies A^{-1} = Sigma^{1/2} (-L)^{-1} Sigma^{1/2} with the sine transform of the Laplacian.
inline Vector apply_inverse(const CcmOperator& o, const Vector& f) {
    if (!o.symmetrized || !o.potential.empty())
        throw PreconditionError("apply_inverse: needs the symmetrized operator without potential");
    const auto& lap = *o.lap;
    const size_t n = size_t(o.N - 1);
    Matrix x(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) x(i, j) = std::sqrt(o.sigma[j + n * i]) * f[j + n * i];
    const Matrix vt = lap.modes.transpose();
    Matrix y = vt * x * lap.modes;
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) y(a, b) /= lap.mu[a] + lap.mu[b];
    const Matrix z = lap.modes * y * vt;
    Vector out(n * n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) out[j + n * i] = std::sqrt(o.sigma[j + n * i]) * z(i, j);
    return out;
}

inline constexpr size_t kDenseLimit = 1600;

// Lowest `count` eigenvalues: dense for small orders or with a potential, otherwise Lanczos on the
// inverse, which keeps the low end accurate when Sigma is tiny near the corners.
inline Spectrum solve(const CcmOperator& o, size_t count, bool want_vectors = false, size_t dense_limit = kDenseLimit) {
    if (!o.symmetrized) throw PreconditionError("ccm::solve: expects the symmetrized operator");
    const size_t order = o.op.order();
    if (count == 0 || count > order) throw RangeError("ccm::solve: count must lie in [1, order]");
    EigenPairs r;
    if (order <= dense_limit || !o.potential.empty()) {
        r = sym_eig(DenseSymMatrix(o.op.to_dense()), count, want_vectors);
    } else {
        r = lanczos_largest_locked([&](const Vector& v) { return apply_inverse(o, v); }, order, count);
        for (double& v : r.values) v = 1.0 / v;
        if (!want_vectors) r.vectors = Matrix();
    }
    Spectrum s;
    s.method = "ccm";
    s.N = o.N;
    for (size_t i = 0; i < count; ++i) {
        Level l;
        l.value = r.values[i];
        l.label = "#" + std::to_string(i + 1);
        if (want_vectors) l.coeffs = r.vectors.column(i);
        s.levels.push_back(std::move(l));
    }
    tag_degeneracy(s);
    return s;
}

}  // namespace spectra::ccm

#endif
