#ifndef SPECTRA_POWERMETHOD_HPP
#define SPECTRA_POWERMETHOD_HPP

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "spectra/conformal.hpp"
#include "spectra/linalg.hpp"
#include "spectra/special.hpp"
#include "spectra/squarebasis.hpp"

namespace spectra::power {

// Coefficients over the square states up to a cutoff, in fold order.
struct BasisState {
    Vector coeffs;
    int cutoff = 0;
    int generation = 0;
};

// Matrices of the inverse operator in the box basis:
//   B = S D^{-1} S  (the inverse operator),  M = S D^{-1} Sigma D^{-1} S  (its square),
// with S = <k|Sigma^{1/2}|l> and D = diag(eps).
struct PowerSetup {
    int N_int = 0;
    std::vector<SquareIndex> labels;
    Vector eps;
    Matrix sqrt_sigma;
    Matrix sigma;
    Matrix B;
    Matrix M;
    double quadrature_defect = 0.0;  // diagonal change of S between two rule sizes
};

namespace detail {

// <k|F|l> over the N^2 box states by tensor Gauss-Legendre quadrature with `m` nodes per axis.
inline Matrix box_elements(const Density& f, int N, int m) {
    const QuadratureRule q = gauss_legendre(m);
    Matrix phi(m, N);
    for (int i = 0; i < m; ++i)
        for (int a = 1; a <= N; ++a) phi(i, a - 1) = std::sin(a * std::numbers::pi * (q.nodes[i] + 1.0) / 2.0);
    return tensor_elements(f, q.nodes, q.weights, phi);
}

inline void finish_setup(PowerSetup& s) {
    const size_t n = s.eps.size();
    Matrix sd = s.sqrt_sigma;  // S D^{-1}
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) sd(i, j) /= s.eps[j];
    s.B = sd * s.sqrt_sigma;
    s.M = sd * s.sigma * sd.transpose();
    s.B = DenseSymMatrix(std::move(s.B)).matrix();
    s.M = DenseSymMatrix(std::move(s.M)).matrix();
}

inline void check_cutoff(int N_int) {
    if (N_int < 1) throw RangeError("power method: N_int must be positive");
}

}  // namespace detail

inline int default_nodes(int N_int) { return std::max(64, 3 * N_int); }

// Sigma and Sigma^{1/2} both by quadrature.
inline PowerSetup prepare(const Density& sigma, int N_int, int nodes = 0) {
    detail::check_cutoff(N_int);
    if (nodes == 0) nodes = default_nodes(N_int);
    PowerSetup s;
    s.N_int = N_int;
    s.labels = square_labels(N_int);
    for (const auto& l : s.labels) s.eps.push_back(l.energy());
    auto root = [&sigma](double x, double y) { return std::sqrt(sigma(x, y)); };
    s.sqrt_sigma = detail::box_elements(root, N_int, nodes);
    const Matrix check = detail::box_elements(root, N_int, nodes + 16);
    for (size_t i = 0; i < s.eps.size(); ++i)
        s.quadrature_defect = std::max(s.quadrature_defect, std::abs(check(i, i) - s.sqrt_sigma(i, i)));
    s.sigma = detail::box_elements(sigma, N_int, nodes);
    detail::finish_setup(s);
    return s;
}

// Square maps use the exact polynomial Sigma matrix; disk maps go through the square-to-disk map.
inline PowerSetup prepare(const ConformalMap& map, int N_int, int nodes = 0) {
    if (map.domain() != ReferenceDomain::Square2) return prepare(disk_density_on_square(map), N_int, nodes);
    detail::check_cutoff(N_int);
    if (nodes == 0) nodes = default_nodes(N_int);
    PowerSetup s;
    s.N_int = N_int;
    s.labels = square_labels(N_int);
    for (const auto& l : s.labels) s.eps.push_back(l.energy());
    const Density sig = map.density();
    auto root = [&sig](double x, double y) { return std::sqrt(sig(x, y)); };
    s.sqrt_sigma = detail::box_elements(root, N_int, nodes);
    const Matrix check = detail::box_elements(root, N_int, nodes + 16);
    for (size_t i = 0; i < s.eps.size(); ++i)
        s.quadrature_defect = std::max(s.quadrature_defect, std::abs(check(i, i) - s.sqrt_sigma(i, i)));
    s.sigma = sigma_matrix(sigma_polynomial(map), N_int).matrix();
    detail::finish_setup(s);
    return s;
}

inline BasisState box_ground(const PowerSetup& s) {
    BasisState b;
    b.cutoff = s.N_int;
    b.coeffs.assign(s.eps.size(), 0.0);
    b.coeffs[0] = 1.0;
    return b;
}

// One application of the inverse operator in coefficient space.
inline BasisState apply_inverse(const BasisState& state, const PowerSetup& s) {
    if (state.coeffs.size() != s.eps.size()) throw RangeError("apply_inverse: state cutoff differs from setup");
    BasisState out;
    out.cutoff = state.cutoff;
    out.generation = state.generation + 1;
    out.coeffs = s.B * state.coeffs;
    return out;
}

// <O^{-1}chi|O|O^{-1}chi> / <O^{-1}chi|O^{-1}chi>, an upper bound on the ground energy.
inline double energy_first_order(const Vector& c0, const PowerSetup& s) {
    if (c0.size() != s.eps.size()) throw RangeError("energy_first_order: coefficient length differs from setup");
    const double num = dot(c0, s.B * c0), den = dot(c0, s.M * c0);
    if (!(den > 0.0)) throw DefinitenessError("energy_first_order: vanishing denominator");
    return num / den;
}

struct VariationalResult {
    Vector coeffs;  // length N_int^2, zero outside the trial block
    double energy = 0.0;
};

// Minimises the first-order bound over c0 supported on nx, ny <= N.
inline VariationalResult variational_optimize(const PowerSetup& s, int N) {
    if (N < 1 || N > s.N_int) throw RangeError("variational_optimize: need 1 <= N <= N_int");
    std::vector<size_t> idx;
    for (size_t i = 0; i < s.labels.size(); ++i)
        if (s.labels[i].nx <= N && s.labels[i].ny <= N) idx.push_back(i);
    const size_t m = idx.size();
    Matrix b(m, m), mm(m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            b(i, j) = s.B(idx[i], idx[j]);
            mm(i, j) = s.M(idx[i], idx[j]);
        }
    EigenPairs r;
    try {
        r = gen_eig(DenseSymMatrix(std::move(b)), DenseSymMatrix(std::move(mm)), m);
    } catch (const DefinitenessError& e) {
        throw DefinitenessError(std::string("variational_optimize: truncation too severe; ") + e.what());
    }
    // B c = E M c; the bound is the smallest E.
    VariationalResult out;
    out.coeffs.assign(s.eps.size(), 0.0);
    for (size_t i = 0; i < m; ++i) out.coeffs[idx[i]] = r.vectors(i, 0);
    out.energy = energy_first_order(out.coeffs, s);
    return out;
}

struct GroundResult {
    double energy = 0.0;       // first-order bound at the converged state
    double rayleigh = 0.0;     // 1 / <c|B|c> at the converged state
    BasisState state;
    std::vector<double> history;  // Rayleigh estimate per iteration
    std::vector<std::string> warnings;
};

// Inverse iteration from the box ground state; `shift` > 0 iterates with (O + shift)^{-1}.
inline GroundResult theorem1_ground(const PowerSetup& s, double tol = 1e-12, int max_iter = 500,
                                    double shift = 0.0) {
    if (shift < 0.0) throw PreconditionError("theorem1_ground: shift must be non-negative");
    const size_t n = s.eps.size();
    std::optional<LuFactor> lu;
    if (shift != 0.0) {
        Matrix a = Matrix::identity(n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) a(i, j) += shift * s.B(i, j);
        lu.emplace(a);
    }
    auto apply = [&](const Vector& x) { return lu ? s.B * lu->solve(x) : s.B * x; };
    const PowerResult r = power_smallest(apply, box_ground(s).coeffs, tol, max_iter);
    GroundResult g;
    g.state.coeffs = r.vector;
    g.state.cutoff = s.N_int;
    g.state.generation = r.iterations;
    g.history = r.history;
    g.rayleigh = 1.0 / dot(r.vector, s.B * r.vector);
    g.energy = energy_first_order(r.vector, s);
    // Successive changes shrink by about (E0/E1)^2 per step.
    const auto& h = r.history;
    if (h.size() >= 4) {
        const double d1 = std::abs(h[h.size() - 3] - h[h.size() - 4]), d2 = std::abs(h[h.size() - 2] - h[h.size() - 3]);
        if (d1 > 0.0 && d2 > 0.0 && d2 / d1 > 1.0 / (1.05 * 1.05))
            g.warnings.push_back("slow convergence: estimated E1/E0 below 1.05; consider a dilatation");
    }
    return g;
}

struct ExcitedResult {
    std::vector<double> energies;
    std::vector<Vector> states;
    int iterations = 0;
};

// Block iteration with (O - Lambda)^{-2}, then the projected d x d problem.
inline ExcitedResult excited_subspace(const PowerSetup& s, double lambda, int d, double tol = 1e-12,
                                      int max_iter = 500) {
    const size_t n = s.eps.size();
    if (d < 1 || size_t(d) > n) throw RangeError("excited_subspace: d must lie in [1, N_int^2]");
    // (O - Lambda)^{-1} = B (I - Lambda B)^{-1}
    Matrix a = Matrix::identity(n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) a(i, j) -= lambda * s.B(i, j);
    const LuFactor lu(a);
    auto solve = [&](const Vector& x) { return s.B * lu.solve(x); };
    // Start from the d box states closest to Lambda.
    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), size_t(0));
    std::stable_sort(order.begin(), order.end(), [&](size_t i, size_t j) {
        return std::abs(s.eps[i] - lambda) < std::abs(s.eps[j] - lambda);
    });
    std::vector<Vector> guesses;
    for (int k = 0; k < d; ++k) {
        Vector g(n, 0.0);
        g[order[k]] = 1.0;
        guesses.push_back(std::move(g));
    }
    SubspaceResult sub;
    try {
        sub = shifted_inverse_sq(solve, std::move(guesses), tol, max_iter);
    } catch (const DegeneracyError& e) {
        throw DegeneracyError(std::string(e.what()) + "; retry with d - 1 or d + 1");
    }
    Matrix pb(d, d), pm(d, d);
    for (int i = 0; i < d; ++i) {
        const Vector bi = s.B * sub.basis[i], mi = s.M * sub.basis[i];
        for (int j = 0; j < d; ++j) {
            pb(i, j) = dot(sub.basis[j], bi);
            pm(i, j) = dot(sub.basis[j], mi);
        }
    }
    const EigenPairs r = gen_eig(DenseSymMatrix(std::move(pb)), DenseSymMatrix(std::move(pm)), size_t(d));
    ExcitedResult out;
    out.iterations = sub.iterations;
    for (int k = 0; k < d; ++k) {
        out.energies.push_back(r.values[k]);
        Vector v(n, 0.0);
        for (int i = 0; i < d; ++i)
            for (size_t j = 0; j < n; ++j) v[j] += r.vectors(i, k) * sub.basis[i][j];
        out.states.push_back(std::move(v));
    }
    return out;
}

}  // namespace spectra::power

#endif
