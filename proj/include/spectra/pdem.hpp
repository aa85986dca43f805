#ifndef SPECTRA_PDEM_HPP
#define SPECTRA_PDEM_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "spectra/ccm.hpp"
#include "spectra/conformal.hpp"
#include "spectra/linalg.hpp"
#include "spectra/perturbation.hpp"
#include "spectra/special.hpp"
#include "spectra/spectrum.hpp"

// Position dependent effective mass: H = Sigma^{-1/2} (-Laplacian) Sigma^{-1/2} + V, hbar^2/2m = 1,
// with Sigma = 1 + eta sigma, expanded around the solvable H0 = -Laplacian + V0.
namespace spectra::pdem {

// Product state (nx, ny) of a separable reference problem.
struct ProductIndex {
    int nx = 0, ny = 0;

    std::string label() const { return "(" + std::to_string(nx) + "," + std::to_string(ny) + ")"; }
    friend bool operator==(const ProductIndex&, const ProductIndex&) = default;
};

// 1D problem -phi'' + v phi = e phi with known solutions; the 2D reference is its tensor square.
struct Reference1D {
    std::string name;
    int first = 0;        // lowest quantum number
    std::function<double(int)> half_width;  // quadrature interval [-L, L] for n functions per axis
    std::function<double(double)> v;
    std::function<double(int)> energy;
    std::function<Vector(double, int)> values;  // phi_first .. phi_{first+n-1} at x
};

// Harmonic oscillator v = x^2, e_j = 2j + 1, Hermite functions. Ground state of the 2D problem is 2.
// The quadrature interval reaches `margin` past the outermost turning point.
inline Reference1D sho_reference(double margin = 5.0) {
    Reference1D r;
    r.name = "sho";
    r.first = 0;
    r.half_width = [margin](int n) { return std::sqrt(2.0 * n + 1.0) + margin; };
    r.v = [](double x) { return x * x; };
    r.energy = [](int j) { return 2.0 * j + 1.0; };
    r.values = [](double x, int n) {
        Vector out(size_t(n), 0.0);
        if (n == 0) return out;
        out[0] = std::pow(std::numbers::pi, -0.25) * std::exp(-0.5 * x * x);
        if (n > 1) out[1] = std::sqrt(2.0) * x * out[0];
        for (int j = 1; j + 1 < n; ++j)
            out[size_t(j) + 1] = std::sqrt(2.0 / (j + 1)) * x * out[size_t(j)] - std::sqrt(double(j) / (j + 1)) * out[size_t(j) - 1];
        return out;
    };
    return r;
}

// Dirichlet box on [-1, 1]: v = 0, phi_j = sin(j pi (x+1)/2), e_j = (j pi/2)^2.
inline Reference1D box_reference() {
    Reference1D r;
    r.name = "box";
    r.first = 1;
    r.half_width = [](int) { return 1.0; };
    r.v = [](double) { return 0.0; };
    r.energy = [](int j) { return std::pow(j * std::numbers::pi / 2.0, 2); };
    r.values = [](double x, int n) {
        Vector out(static_cast<size_t>(n));
        for (int j = 1; j <= n; ++j) out[size_t(j) - 1] = std::sin(j * std::numbers::pi * (x + 1.0) / 2.0);
        return out;
    };
    return r;
}

// The reference truncated to n functions per axis, with its quadrature.
struct ReferenceBasis {
    Reference1D axis;
    int n = 0;
    std::vector<ProductIndex> labels;  // fold order, position iy + n ix
    Vector eps;
    Vector nodes, weights;
    Matrix phi;  // phi(i, j) = phi_j(nodes[i])

    size_t size() const { return labels.size(); }
    Matrix elements(const Density& f) const { return tensor_elements(f, nodes, weights, phi); }

    // <i|g|j> for a function of x alone, over the 1D functions.
    Matrix axis_elements(const std::function<double(double)>& g) const {
        const size_t m = static_cast<size_t>(n);
        Matrix out(m, m);
        for (size_t i = 0; i < nodes.size(); ++i) {
            const double w = weights[i] * g(nodes[i]);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) out(size_t(a), size_t(b)) += w * phi(i, size_t(a)) * phi(i, size_t(b));
        }
        return out;
    }

    size_t index_of(const ProductIndex& l) const {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == l) return i;
        throw RangeError("reference basis: level " + l.label() + " outside the cutoff");
    }
};

// Nodes per axis. Oscillator states need about 8 per function on their interval to stay orthonormal to 1e-12.
inline int default_nodes(int n) { return std::max(96, 8 * n); }

inline ReferenceBasis make_basis(const Reference1D& axis, int n, int nodes = 0) {
    if (nodes == 0) nodes = default_nodes(n);
    if (n < 1) throw RangeError("make_basis: need at least one function per axis");
    if (nodes < 2) throw RangeError("make_basis: need at least two quadrature nodes");
    ReferenceBasis b;
    b.axis = axis;
    b.n = n;
    for (int ix = 0; ix < n; ++ix)
        for (int iy = 0; iy < n; ++iy) {
            b.labels.push_back({axis.first + ix, axis.first + iy});
            b.eps.push_back(axis.energy(axis.first + ix) + axis.energy(axis.first + iy));
        }
    const QuadratureRule q = gauss_legendre(nodes);
    const double L = axis.half_width(n);
    b.phi = Matrix(size_t(nodes), size_t(n));
    for (int i = 0; i < nodes; ++i) {
        b.nodes.push_back(L * q.nodes[size_t(i)]);
        b.weights.push_back(L * q.weights[size_t(i)]);
        const Vector v = axis.values(b.nodes.back(), n);
        for (int j = 0; j < n; ++j) b.phi(size_t(i), size_t(j)) = v[size_t(j)];
    }
    return b;
}

struct PdemProblem {
    Density sigma;  // Sigma = 1 + eta sigma
    double eta = 0.0;
    Density V;
    Density V0;  // must be v(x) + v(y) of the reference
    Reference1D reference;
};

inline PdemProblem make_problem(Density sigma, double eta, Density V, const Reference1D& reference) {
    PdemProblem p;
    p.sigma = std::move(sigma);
    p.eta = eta;
    p.V = std::move(V);
    auto v = reference.v;
    p.V0 = [v](double x, double y) { return v(x) + v(y); };
    p.reference = reference;
    return p;
}

namespace detail {

inline void check_reference(const PdemProblem& p, const ReferenceBasis& b) {
    for (size_t i = 0; i < b.nodes.size(); i += 7)
        for (size_t j = 0; j < b.nodes.size(); j += 5) {
            const double x = b.nodes[i], y = b.nodes[j];
            const double want = b.axis.v(x) + b.axis.v(y), got = p.V0(x, y);
            if (std::abs(got - want) > 1e-12 * (1.0 + std::abs(want)))
                throw PreconditionError("pdem: V0 does not match the reference problem " + b.axis.name);
        }
}

// Rejects problems whose potential is not V0 / sqrt(Sigma).
inline void check_sqrt_form(const PdemProblem& p, const ReferenceBasis& b) {
    for (size_t i = 0; i < b.nodes.size(); i += 3)
        for (size_t j = 0; j < b.nodes.size(); j += 3) {
            const double x = b.nodes[i], y = b.nodes[j];
            const double Sigma = 1.0 + p.eta * p.sigma(x, y);
            const double want = p.V0(x, y) / std::sqrt(Sigma), got = p.V(x, y);
            if (std::abs(got - want) > 1e-10 * (1.0 + std::abs(want)))
                throw PreconditionError("pdem: this expansion needs V = V0 / sqrt(Sigma)");
        }
}

}  // namespace detail

// eta <a|sigma|b> over the reference states, in the form the shape perturbation module consumes.
inline pt::SigmaMatrix<ProductIndex> sigma_elements_reference(const PdemProblem& p, const ReferenceBasis& b) {
    pt::SigmaMatrix<ProductIndex> sm;
    sm.basis = b.axis.name;
    sm.labels = b.labels;
    sm.eps = b.eps;
    sm.cutoff = b.n;
    const double eta = p.eta;
    const Density s = p.sigma;
    sm.sigma = b.elements([&](double x, double y) { return eta * s(x, y); });
    return sm;
}

struct PdemReport {
    ProductIndex label;
    std::string name;
    std::array<double, 3> e{};  // E^(0), eta E^(1), eta^2 E^(2) in the printed form
    double v0_sigma = 0.0;      // eta^2 <n|V0 sigma|n>, the second-order part of -eta V0/Sigma
    double e2b_raw = 0.0;       // eta^2 E^(2b) by the direct sum over states
    double e2b_reduced = 0.0;   // eta^2 E^(2b) after the completeness reduction
    double completeness_defect = 0.0;  // eta^2 (<n|sigma W|n> - sum_k sigma_nk W_kn), W = V - V0
    pt::PTReport<ProductIndex> shape;  // the sigma-only part
    int N_int = 0;

    // Partial sum; the V0 sigma term belongs to the second order of the eta family.
    double partial(int order, bool with_v0_sigma = true) const {
        double s = 0.0;
        for (int i = 0; i <= order && i < 3; ++i) s += e[size_t(i)];
        if (order >= 2 && with_v0_sigma) s += v0_sigma;
        return s;
    }
};

// First and second order corrections for a nondegenerate reference level.
inline PdemReport pdem_pt(const PdemProblem& p, const ProductIndex& level, int order, int N_int, int nodes = 0) {
    if (order < 0 || order > 2) throw RangeError("pdem_pt: order must lie in 0..2");
    const ReferenceBasis b = make_basis(p.reference, N_int, nodes);
    detail::check_reference(p, b);
    const size_t n = b.index_of(level);
    const auto sm = sigma_elements_reference(p, b);
    PdemReport r;
    r.label = level;
    r.name = level.label();
    r.N_int = N_int;
    r.shape = pt::pt_energy(sm, n, order);
    const Density V = p.V, V0 = p.V0, sig = p.sigma;
    const double eta = p.eta;
    const Matrix W = b.elements([&](double x, double y) { return eta * (V(x, y) - V0(x, y)); });
    r.e[0] = r.shape.e[0];
    if (order >= 1) r.e[1] = r.shape.e[1] + W(n, n);
    if (order < 2) return r;
    const double en = b.eps[n];
    const Vector s = sm.sigma.column(n);
    double raw = 0.0, tail = 0.0, ww = 0.0, overlap = 0.0;
    for (size_t k = 0; k < b.size(); ++k) {
        overlap += s[k] * W(k, n);
        if (k == n) continue;
        const double om = en - b.eps[k];
        raw -= (en + b.eps[k]) / om * s[k] * W(k, n);
        tail -= 2.0 * b.eps[k] / om * s[k] * W(k, n);
        ww += W(n, k) * W(n, k) / om;
    }
    const Matrix sw = b.elements([&](double x, double y) { return eta * eta * sig(x, y) * (V(x, y) - V0(x, y)); });
    const Matrix vs = b.elements([&](double x, double y) { return eta * eta * V0(x, y) * sig(x, y); });
    r.e2b_raw = raw;
    r.e2b_reduced = -(sw(n, n) - s[n] * W(n, n)) + tail;
    r.completeness_defect = sw(n, n) - overlap;
    r.e[2] = r.shape.e[2] + (r.e2b_reduced + ww);
    r.v0_sigma = vs(n, n);
    return r;
}

// First order state for V = V0/sqrt(Sigma): coefficients over the reference basis, 1 on the level.
inline Vector pdem_wavefunction_first(const PdemProblem& p, const ProductIndex& level, int N_int, int nodes = 0) {
    const ReferenceBasis b = make_basis(p.reference, N_int, nodes);
    detail::check_reference(p, b);
    detail::check_sqrt_form(p, b);
    const size_t n = b.index_of(level);
    const auto sm = sigma_elements_reference(p, b);
    const double en = b.eps[n];
    Vector c(b.size(), 0.0);
    for (size_t k = 0; k < b.size(); ++k) {
        if (k == n) continue;
        const double om = en - b.eps[k];
        if (std::abs(om) < pt::kGapTolerance * std::abs(en))
            throw DegeneracyError("pdem: level " + level.label() + " is degenerate with " + b.labels[k].label());
        c[k] = -0.5 * (en + b.eps[k]) / om * sm.sigma(k, n);
    }
    c[n] = 1.0;
    return c;
}

struct Uncertainty {
    double dx0 = 0.0, dp0 = 0.0;  // reference values along x
    double dx = 0.0, dp = 0.0;    // first order
    double product0() const { return dx0 * dp0; }
    double product() const { return dx * dp; }
    // Product to first order, dx0 dp0 (1 + relative x change + relative p change).
    double product_first() const { return dx0 * dp0 * (dx / dx0 + dp / dp0 - 1.0); }
};

// Position and momentum spreads along x to first order. Reference states are real, so <p> = 0.
inline Uncertainty uncertainty_product(const PdemProblem& p, const ProductIndex& level, int N_int, int nodes = 0) {
    const Vector c = pdem_wavefunction_first(p, level, N_int, nodes);
    const ReferenceBasis b = make_basis(p.reference, N_int, nodes);
    const size_t n = b.index_of(level);
    const Matrix X = b.axis_elements([](double x) { return x; });
    const Matrix X2 = b.axis_elements([](double x) { return x * x; });
    // p^2 = e - v on the 1D eigenfunctions.
    Matrix P2 = b.axis_elements(b.axis.v);
    for (size_t a = 0; a < P2.rows(); ++a)
        for (size_t bb = 0; bb < P2.cols(); ++bb) P2(a, bb) = (a == bb ? b.axis.energy(b.axis.first + int(a)) : 0.0) - P2(a, bb);
    const size_t N = size_t(b.n), nx = n / N, ny = n % N;
    const double mx = X(nx, nx);
    Uncertainty u;
    u.dx0 = std::sqrt(X2(nx, nx) - mx * mx);
    u.dp0 = std::sqrt(P2(nx, nx));
    double sx = 0.0, sp = 0.0;
    for (size_t k = 0; k < b.size(); ++k) {
        if (k == n || c[k] == 0.0 || k % N != ny) continue;
        const size_t kx = k / N;
        sx += c[k] * (X2(nx, kx) - 2.0 * mx * X(nx, kx));
        sp += c[k] * P2(nx, kx);
    }
    u.dx = u.dx0 * (1.0 + sx / (u.dx0 * u.dx0));
    u.dp = u.dp0 * (1.0 + sp / (u.dp0 * u.dp0));
    return u;
}

// Values of f at the CCM nodes of [-L, L]^2, fold order.
inline Vector grid_values(const Density& f, int N, double half_width = 1.0) {
    const Vector x = ccm::grid_nodes(N);
    const size_t m = x.size();
    Vector out(m * m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) out[j + m * i] = f(half_width * x[i], half_width * x[j]);
    return out;
}

// Sigma^{-1/2} (-Laplacian) Sigma^{-1/2} + diag(V) on the little sinc grid of [-L, L]^2.
inline SparseOperator assemble_with_potential(const Vector& sigma, const Vector& v, int N, double half_width = 1.0) {
    const auto lap = ccm::laplacian(N);
    if (sigma.size() != lap->order || v.size() != lap->order)
        throw RangeError("assemble_with_potential: grid values have the wrong length");
    if (!(half_width > 0.0)) throw RangeError("assemble_with_potential: box half width must be positive");
    Vector r(lap->order);
    for (size_t i = 0; i < r.size(); ++i) {
        if (!(sigma[i] > 0.0)) throw ConformalityError("assemble_with_potential: non-positive density at a node");
        r[i] = 1.0 / std::sqrt(sigma[i]);
    }
    const double scale = 1.0 / (half_width * half_width);
    std::vector<SparseOperator::Triplet> t;
    t.reserve(lap->triplets.size() + lap->order);
    for (const auto& e : lap->triplets) t.push_back({e.row, e.col, -scale * r[e.row] * e.value * r[e.col]});
    for (size_t i = 0; i < v.size(); ++i) t.push_back({i, i, v[i]});
    return SparseOperator(lap->order, std::move(t));
}

inline Spectrum solve_with_potential(const Density& Sigma, const Density& V, int N, double half_width, size_t count) {
    const SparseOperator op = assemble_with_potential(grid_values(Sigma, N, half_width), grid_values(V, N, half_width), N, half_width);
    if (count == 0 || count > op.order()) throw RangeError("solve_with_potential: count must lie in [1, order]");
    const EigenPairs r = sym_eig(DenseSymMatrix(op.to_dense()), count, false);
    Spectrum s;
    s.method = "ccm";
    s.N = N;
    for (size_t i = 0; i < count; ++i) {
        Level l;
        l.value = r.values[i];
        l.label = "#" + std::to_string(i + 1);
        s.levels.push_back(std::move(l));
    }
    tag_degeneracy(s);
    return s;
}

// The problem's eta family solved on the grid: Sigma = 1 + eta sigma with potential
// (1 - eta) V0/Sigma + eta V, which is H0 at eta = 0.
inline Spectrum numeric_levels(const PdemProblem& p, int N, double half_width, size_t count) {
    const Density sig = p.sigma, V = p.V, V0 = p.V0;
    const double eta = p.eta;
    const Density Sigma = [=](double x, double y) { return 1.0 + eta * sig(x, y); };
    const Density U = [=](double x, double y) {
        return (1.0 - eta) * V0(x, y) / (1.0 + eta * sig(x, y)) + eta * V(x, y);
    };
    return solve_with_potential(Sigma, U, N, half_width, count);
}

}  // namespace spectra::pdem

#endif
