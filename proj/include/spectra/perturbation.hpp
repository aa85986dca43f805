#ifndef SPECTRA_PERTURBATION_HPP
#define SPECTRA_PERTURBATION_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include <boost/math/special_functions/zeta.hpp>

#include "spectra/conformal.hpp"
#include "spectra/linalg.hpp"
#include "spectra/special.hpp"
#include "spectra/squarebasis.hpp"

namespace spectra::pt {

// Dirichlet eigenstate R_kn J_k(g_kn r) c_k^s(theta) of the unit disk; s = 1 cos, s = 2 sin.
struct DiskIndex {
    int k = 0, n = 1, s = 1;

    double gamma() const { return bessel_zero(k, n); }
    double energy() const { return gamma() * gamma(); }
    std::string label() const {
        return "(" + std::to_string(k) + "," + std::to_string(n) + (s == 1 ? ",c)" : ",s)");
    }
    friend bool operator==(const DiskIndex&, const DiskIndex&) = default;
};

// Disk states with k <= K and n <= NR, ordered by energy.
inline std::vector<DiskIndex> disk_labels(int K, int NR) {
    if (K < 0 || NR < 1) throw RangeError("disk_labels: need K >= 0 and NR >= 1");
    std::vector<DiskIndex> out;
    for (int k = 0; k <= K; ++k)
        for (int n = 1; n <= NR; ++n)
            for (int s = 1; s <= (k == 0 ? 1 : 2); ++s) out.push_back({k, n, s});
    std::stable_sort(out.begin(), out.end(), [](const DiskIndex& a, const DiskIndex& b) {
        return a.energy() < b.energy();
    });
    return out;
}

// <a|sigma|b> over a finite set of unperturbed states.
template <class Label>
struct SigmaMatrix {
    std::string basis;
    std::vector<Label> labels;
    Vector eps;
    Matrix sigma;
    int cutoff = 0;

    size_t size() const { return labels.size(); }
};

template <class Label>
struct PTReport {
    Label label;
    std::string name;
    int degeneracy = 1;
    std::array<double, 4> e{};  // E^(0) .. E^(3)
    bool has_e3 = false;
    bool split = false;  // first order lifts the degeneracy of this level's block
    int N_int = 0;
    std::string basis;

    double partial(int order) const {
        double s = 0.0;
        for (int i = 0; i <= order && i < 4; ++i) s += e[size_t(i)];
        return s;
    }
};

inline constexpr double kGapTolerance = 1e-9;

inline SigmaMatrix<SquareIndex> sigma_elements_square(const ConformalMap& map, int N_int) {
    if (map.domain() != ReferenceDomain::Square2)
        throw PreconditionError("sigma_elements_square: map must be defined on the reference square");
    if (N_int < 1) throw RangeError("sigma_elements_square: N_int must be positive");
    SigmaMatrix<SquareIndex> out;
    out.basis = "square";
    out.cutoff = N_int;
    out.labels = square_labels(N_int);
    for (const auto& l : out.labels) out.eps.push_back(l.energy());
    // Subtracting the identity from the constant coefficient avoids cancelling against 1 for small maps.
    BivariatePoly kappa = sigma_polynomial(map);
    kappa.kappa(0, 0) -= 1.0;
    out.sigma = sigma_matrix(kappa, N_int).matrix();
    return out;
}

// int_0^{2pi} c_k^s c_k2^s cos(q theta) dtheta
inline double disk_angular(int k, int k2, int s, int q) {
    auto d = [](int x) { return x == 0 ? 1.0 : 0.0; };
    const double sign = s == 1 ? 1.0 : -1.0;
    return 0.5 * std::numbers::pi *
           (d(k - k2 + q) + d(k - k2 - q) + sign * (d(k + k2 + q) + d(k + k2 - q)));
}

// Term coef * r^p cos(q theta) of a density on the disk.
struct DiskTerm {
    double coef = 0.0;
    int p = 0, q = 0;
};

inline double disk_element(const std::vector<DiskTerm>& terms, const DiskIndex& a, const DiskIndex& b) {
    if (a.s != b.s) return 0.0;
    const double norm = disk_mode_norm(a.k, a.n) * disk_mode_norm(b.k, b.n);
    double out = 0.0;
    for (const auto& t : terms) {
        const double ang = disk_angular(a.k, b.k, a.s, t.q);
        if (ang == 0.0 || t.coef == 0.0) continue;
        out += t.coef * ang * norm * radial_integral(a.k, a.n, b.k, b.n, t.p);
    }
    return out;
}

// |f'|^2 = sum_{j,l} b_j b_l r^{j+l} cos((j-l) theta) for real coefficients.
inline std::vector<DiskTerm> disk_density_terms(const ConformalMap& map) {
    if (!map.real_coefficients()) throw PreconditionError("disk density terms need real map coefficients");
    std::vector<double> b;
    for (int j = 1; j <= map.degree(); ++j) b.push_back(j * map.coeffs()[size_t(j)].real());
    std::vector<DiskTerm> out;
    for (size_t j = 0; j < b.size(); ++j)
        for (size_t l = 0; l < b.size(); ++l)
            if (b[j] != 0.0 && b[l] != 0.0)
                out.push_back({b[j] * b[l], int(j + l), int(j) - int(l)});
    return out;
}

inline SigmaMatrix<DiskIndex> sigma_elements_disk(const ConformalMap& map, const std::vector<DiskIndex>& labels) {
    if (map.domain() != ReferenceDomain::UnitDisk)
        throw PreconditionError("sigma_elements_disk: map must be defined on the unit disk");
    const auto terms = disk_density_terms(map);
    SigmaMatrix<DiskIndex> out;
    out.basis = "disk";
    out.labels = labels;
    out.cutoff = int(labels.size());
    for (const auto& l : labels) out.eps.push_back(l.energy());
    const size_t n = labels.size();
    out.sigma = Matrix(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) {
            const double v = disk_element(terms, labels[i], labels[j]) - (i == j ? 1.0 : 0.0);
            out.sigma(i, j) = out.sigma(j, i) = v;
        }
    return out;
}

namespace detail {

// Corrections for the state u (coefficients over the basis) with the indices in `block` excluded
// from the internal sums.
template <class Label>
std::array<double, 4> corrections(const SigmaMatrix<Label>& sm, const Vector& u, double en,
                                  const std::vector<size_t>& block, int order) {
    const size_t n = sm.size();
    std::vector<char> internal(n, 1);
    for (size_t b : block) internal[b] = 0;
    for (size_t k = 0; k < n; ++k)
        if (internal[k] && std::abs(en - sm.eps[k]) < kGapTolerance * std::abs(en))
            throw DegeneracyError("pt_energy: state " + sm.labels[k].label() +
                                  " is degenerate with the level but not in its block");
    const Vector s = sm.sigma * u;
    const double snn = dot(u, s);
    std::array<double, 4> e{en, -en * snn, 0.0, 0.0};
    if (order < 2) return e;
    std::vector<size_t> ks;
    Vector t;
    double sum1 = 0.0, sum2 = 0.0;
    for (size_t k = 0; k < n; ++k) {
        if (!internal[k]) continue;
        const double om = en - sm.eps[k];
        sum1 += s[k] * s[k] / om;
        sum2 += s[k] * s[k] / (om * om);
        ks.push_back(k);
        t.push_back(s[k] / om);
    }
    e[2] = en * snn * snn + en * en * sum1;
    if (order < 3) return e;
    double triple = 0.0;
    for (size_t a = 0; a < ks.size(); ++a) {
        double row = 0.0;
        for (size_t b = 0; b < ks.size(); ++b) row += sm.sigma(ks[a], ks[b]) * t[b];
        triple += t[a] * row;
    }
    e[3] = -en * snn * snn * snn + en * en * en * snn * sum2 - 3.0 * en * en * snn * sum1 - en * en * en * triple;
    return e;
}

inline void check_order(int order) {
    if (order < 0 || order > 3) throw RangeError("perturbation order must lie in 0..3");
}

}  // namespace detail

// Nondegenerate corrections up to third order.
template <class Label>
PTReport<Label> pt_energy(const SigmaMatrix<Label>& sm, size_t index, int order = 3) {
    detail::check_order(order);
    if (index >= sm.size()) throw RangeError("pt_energy: level index outside the basis");
    Vector u(sm.size(), 0.0);
    u[index] = 1.0;
    PTReport<Label> r;
    r.label = sm.labels[index];
    r.name = r.label.label();
    r.e = detail::corrections(sm, u, sm.eps[index], {index}, order);
    r.has_e3 = order >= 3;
    r.N_int = sm.cutoff;
    r.basis = sm.basis;
    return r;
}

struct BlockResult {
    Vector values;     // eigenvalues of the sigma block, ascending
    Matrix rotation;   // columns: rotated states in the block basis
    Vector e1;         // first-order corrections, -eps * values
    double xi = 0.0;   // d = 2 only: sqrt((s11 - s22)^2 + 4 s12^2)
    bool split = false;
};

template <class Label>
BlockResult degenerate_block(const SigmaMatrix<Label>& sm, const std::vector<size_t>& block) {
    if (block.empty()) throw PreconditionError("degenerate_block: empty block");
    const double en = sm.eps[block[0]];
    for (size_t b : block) {
        if (b >= sm.size()) throw RangeError("degenerate_block: index outside the basis");
        if (std::abs(sm.eps[b] - en) > kGapTolerance * std::abs(en))
            throw PreconditionError("degenerate_block: labels do not share the unperturbed energy");
    }
    const size_t d = block.size();
    Matrix blk(d, d);
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) blk(i, j) = sm.sigma(block[i], block[j]);
    const EigenPairs r = sym_eig(DenseSymMatrix(blk), d, true);
    BlockResult out;
    out.values = r.values;
    out.rotation = r.vectors;
    for (double v : r.values) out.e1.push_back(-en * v);
    if (d == 2) out.xi = std::sqrt(std::pow(blk(0, 0) - blk(1, 1), 2) + 4.0 * blk(0, 1) * blk(0, 1));
    const double scale = std::max(1.0, blk.max_abs());
    out.split = r.values.back() - r.values.front() > 1e-12 * scale;
    return out;
}

// All levels in ascending unperturbed order until `count` reports; degenerate groups go through
// degenerate_block and are reported sorted by the first-order partial sum.
template <class Label>
std::vector<PTReport<Label>> pt_levels(const SigmaMatrix<Label>& sm, size_t count, int order = 3) {
    detail::check_order(order);
    std::vector<size_t> idx(sm.size());
    std::iota(idx.begin(), idx.end(), size_t(0));
    std::stable_sort(idx.begin(), idx.end(), [&](size_t a, size_t b) { return sm.eps[a] < sm.eps[b]; });
    std::vector<PTReport<Label>> out;
    size_t i = 0;
    while (i < idx.size() && out.size() < count) {
        size_t j = i + 1;
        while (j < idx.size() && std::abs(sm.eps[idx[j]] - sm.eps[idx[i]]) <= kGapTolerance * sm.eps[idx[i]]) ++j;
        const std::vector<size_t> block(idx.begin() + long(i), idx.begin() + long(j));
        const double en = sm.eps[block[0]];
        std::vector<PTReport<Label>> group;
        if (block.size() == 1) {
            group.push_back(pt_energy(sm, block[0], order));
        } else {
            const BlockResult br = degenerate_block(sm, block);
            for (size_t c = 0; c < block.size(); ++c) {
                Vector u(sm.size(), 0.0);
                size_t dominant = 0;
                for (size_t b = 0; b < block.size(); ++b) {
                    u[block[b]] = br.rotation(b, c);
                    if (std::abs(br.rotation(b, c)) > std::abs(br.rotation(dominant, c))) dominant = b;
                }
                PTReport<Label> r;
                r.label = sm.labels[block[dominant]];
                r.name = r.label.label();
                r.degeneracy = int(block.size());
                r.split = br.split;
                r.e = detail::corrections(sm, u, en, block, order);
                r.has_e3 = order >= 3;
                r.N_int = sm.cutoff;
                r.basis = sm.basis;
                group.push_back(std::move(r));
            }
            std::stable_sort(group.begin(), group.end(),
                             [](const PTReport<Label>& a, const PTReport<Label>& b) { return a.partial(1) < b.partial(1); });
        }
        for (auto& g : group)
            if (out.size() < count) out.push_back(std::move(g));
        i = j;
    }
    return out;
}

// Operators O_1..O_3 of the expansion of Sigma^{-1/2}(-Delta)Sigma^{-1/2} in a finite basis, D = diag(eps).
struct ExpansionOperators {
    Matrix o1, o2, o3;
};

inline ExpansionOperators expansion_operators(const Matrix& sigma, const Vector& eps) {
    const size_t n = eps.size();
    const Matrix d = Matrix::diagonal(eps);
    const Matrix s2 = sigma * sigma, s3 = s2 * sigma;
    auto comb = [n](std::initializer_list<std::pair<double, Matrix>> parts) {
        Matrix m(n, n);
        for (const auto& [c, x] : parts)
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j) m(i, j) += c * x(i, j);
        return m;
    };
    ExpansionOperators o;
    o.o1 = comb({{-0.5, sigma * d}, {-0.5, d * sigma}});
    o.o2 = comb({{0.25, sigma * d * sigma}, {0.375, s2 * d}, {0.375, d * s2}});
    o.o3 = comb({{-0.1875, s2 * d * sigma}, {-0.1875, sigma * d * s2}, {-0.3125, s3 * d}, {-0.3125, d * s3}});
    return o;
}

// Textbook Rayleigh-Schroedinger corrections built from the expansion operators.
inline std::array<double, 4> rspt_generic(const Matrix& sigma, const Vector& eps, size_t n) {
    const ExpansionOperators o = expansion_operators(sigma, eps);
    const size_t dim = eps.size();
    const double en = eps[n];
    std::array<double, 4> e{en, o.o1(n, n), o.o2(n, n), o.o3(n, n)};
    for (size_t k = 0; k < dim; ++k) {
        if (k == n) continue;
        const double om = en - eps[k];
        e[2] += o.o1(n, k) * o.o1(n, k) / om;
        e[3] += 2.0 * o.o2(n, k) * o.o1(k, n) / om - o.o1(n, n) * o.o1(n, k) * o.o1(n, k) / (om * om);
        for (size_t m = 0; m < dim; ++m) {
            if (m == n) continue;
            e[3] += o.o1(n, m) * o.o1(m, k) * o.o1(k, n) / (om * (en - eps[m]));
        }
    }
    return e;
}

// ---- deformed square f(z) = z + alpha z^2 ----

// F(n) = sum_{m != n} (m^2/2)(1 - (-1)^{m+n}) / (n^2 - m^2)^5
inline double deformed_square_F(int n) {
    if (n < 1) throw RangeError("deformed_square_F: n must be positive");
    double sum = 0.0, comp = 0.0;
    for (int m = (n % 2 == 0) ? 1 : 2; ; m += 2) {
        const double d = double(n) * n - double(m) * m;
        const double term = double(m) * m / (d * d * d * d * d);
        const double y = term - comp, t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (m > n && std::abs(term) < 1e-18 * std::abs(sum)) break;
    }
    return sum;
}

inline double deformed_square_F_asymptotic(int n) {
    return std::pow(std::numbers::pi, 4) / (3072.0 * std::pow(double(n), 4));
}

// (E_n - eps_n) / alpha^2 to leading order.
inline double deformed_square_alpha2(const SquareIndex& l) {
    const double pi = std::numbers::pi, pi2 = pi * pi;
    const double e = l.energy(), nx2 = double(l.nx) * l.nx, ny2 = double(l.ny) * l.ny;
    return -e * (8.0 / 3.0) * (1.0 - 3.0 / (pi2 * nx2) - 3.0 / (pi2 * ny2)) +
           e * e * nx2 * (16384.0 / std::pow(pi, 6)) * deformed_square_F(l.nx);
}

inline double deformed_square_closed(const SquareIndex& l, double alpha) {
    return l.energy() + alpha * alpha * deformed_square_alpha2(l);
}

// Square levels in the order (nx^2 + ny^2, alpha^2 coefficient).
inline std::vector<SquareIndex> deformed_square_levels(size_t count) {
    std::vector<std::pair<std::pair<int, double>, SquareIndex>> v;
    int top = 1;
    while (size_t(top * top) < 4 * count + 16) ++top;
    for (int nx = 1; nx <= top; ++nx)
        for (int ny = 1; ny <= top; ++ny) {
            const SquareIndex l{nx, ny};
            v.push_back({{l.q(), deformed_square_alpha2(l)}, l});
        }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<SquareIndex> out;
    for (size_t i = 0; i < count; ++i) out.push_back(v[i].second);
    return out;
}

// ---- general map f(z) = z + eta sum_j (rho_j / j) z^j ----

inline ConformalMap general_map(const std::vector<double>& rho, double eta) {
    std::vector<Complex> a(rho.size() + 1, 0.0);
    a[1] = 1.0;
    for (size_t j = 1; j <= rho.size(); ++j) a[j] += eta * rho[j - 1] / double(j);
    return ConformalMap(std::move(a), ReferenceDomain::Square2);
}

// Coefficient of rho_j (j = 1..J) in <a|sigma|b> at first order in eta.
inline Vector general_map_coefficients(const SquareIndex& a, const SquareIndex& b, int J) {
    if (J < 1) throw RangeError("general_map_coefficients: J must be positive");
    Vector out(size_t(J), 0.0);
    for (int j = 1; j <= J; ++j) {
        double binom = 1.0, s = 0.0;
        for (int k = 0; k <= j - 1; ++k) {
            if (k > 0) binom = binom * (j - k) / k;
            const int p = j - 1 - k;
            if (p % 2) continue;
            const double re = (p % 4 == 0) ? 2.0 : -2.0;  // 2 Re(i^p)
            s += binom * re * q_integral(a.nx, b.nx, k) * q_integral(a.ny, b.ny, p);
        }
        out[size_t(j - 1)] = s;
    }
    return out;
}

struct GeneralFirstOrder {
    SquareIndex a, b;  // b is the swapped partner, equal to a on the diagonal
    bool degenerate = false;
    Vector diag_a, diag_b, offdiag;  // coefficients of rho_1..rho_J in -E^(1)/eps
    bool splits = false;
};

inline GeneralFirstOrder general_map_first_order(const SquareIndex& level, int J) {
    GeneralFirstOrder r;
    r.a = level;
    r.b = {level.ny, level.nx};
    r.degenerate = level.nx != level.ny;
    r.diag_a = general_map_coefficients(r.a, r.a, J);
    r.diag_b = general_map_coefficients(r.b, r.b, J);
    r.offdiag = r.degenerate ? general_map_coefficients(r.a, r.b, J) : Vector(size_t(J), 0.0);
    for (double c : r.offdiag)
        if (std::abs(c) > 1e-12) r.splits = true;
    return r;
}

// ---- Robnik billiard f(z) = z + lambda z^2 ----

struct RobnikPT {
    DiskIndex label;
    double e0 = 0.0;   // gamma^2
    double e2 = 0.0;   // coefficient of lambda^2 before rescaling
    double pt0 = 0.0;  // gamma^2 / cos^2 p
    double pt2 = 0.0;  // (gamma^2 + lambda^2 e2) / cos^2 p
};

// Second-order coefficient with sigma = lambda 4 r cos(theta) + lambda^2 4 r^2.
inline double robnik_e2(const DiskIndex& l, int NR = 30) {
    const double g2 = l.energy();
    const std::vector<DiskTerm> s1{{4.0, 1, 1}}, s2{{4.0, 2, 0}};
    double e2 = -g2 * disk_element(s2, l, l);
    for (int kp : {l.k - 1, l.k + 1}) {
        if (kp < 0 || (kp == 0 && l.s == 2)) continue;
        for (int np = 1; np <= NR; ++np) {
            const DiskIndex m{kp, np, l.s};
            const double v = disk_element(s1, l, m);
            e2 += g2 * g2 * v * v / (g2 - m.energy());
        }
    }
    return e2;
}

inline RobnikPT robnik_pt2(const DiskIndex& l, double lambda, int NR = 30) {
    if (!(std::abs(lambda) < 0.5)) throw ConformalityError("robnik_pt2: |lambda| must be below 1/2");
    RobnikPT r;
    r.label = l;
    r.e0 = l.energy();
    r.e2 = robnik_e2(l, NR);
    const double inv_c2 = 1.0 + 2.0 * lambda * lambda;
    r.pt0 = r.e0 * inv_c2;
    r.pt2 = (r.e0 + lambda * lambda * r.e2) * inv_c2;
    return r;
}

// Lowest `count` disk levels (by gamma^2) with their second-order Robnik energies.
inline std::vector<RobnikPT> robnik_levels(double lambda, size_t count, int NR = 30) {
    std::vector<RobnikPT> out;
    for (const auto& l : disk_labels(24, 12)) {
        if (out.size() >= count) break;
        out.push_back(robnik_pt2(l, lambda, NR));
    }
    return out;
}

// ---- regular polygons ----

struct PolygonPT {
    DiskIndex label;
    double pt0 = 0.0;       // gamma^2 / C^2
    double pt1 = 0.0;       // pt0 (1 - <sigma>)
    double sigma_nn = 0.0;  // <kns|sigma|kns>
    bool split = false;     // cos and sin partners differ at this order
    int terms = 0;          // series terms used
};

// <kns|Sigma|kns> along the lines l - m = const allowed by the angular selection rules.
// Each line is summed until the tail estimate drops below `tol` relative.
inline PolygonPT polygon_pt1(const DiskIndex& l, int sides, double tol = 1e-11, int max_terms = 20000) {
    if (sides < 3) throw RangeError("polygon_pt1: need at least 3 sides");
    const double c = polygon_constant(sides);
    std::vector<int> lines{0};
    if (l.k > 0 && (2 * l.k) % sides == 0) {
        lines.push_back(2 * l.k / sides);
        lines.push_back(-2 * l.k / sides);
    }
    // a_j = (N j + 1) f_j, the coefficients of f'(w) in w^{N j}.
    std::vector<double> a;
    auto coef = [&](int j) {
        while (int(a.size()) <= j) {
            const int i = int(a.size());
            const double prev = i == 0 ? 1.0 : a.back();
            a.push_back(i == 0 ? 1.0 : prev * (2.0 / sides + (i - 1)) / i);
        }
        return a[size_t(j)];
    };
    const double norm = std::pow(disk_mode_norm(l.k, l.n), 2);
    PolygonPT r;
    r.label = l;
    double total = 0.0, lifting = 0.0;
    for (int d : lines) {
        const double ang = disk_angular(l.k, l.k, l.s, sides * d);
        if (ang == 0.0) continue;
        double line = 0.0;
        for (int m = std::max(0, -d);; ++m) {
            const int j = m + d;
            const int p = sides * (j + m);
            if (p > RadialIntegrals::kMaxPower || m > max_terms)
                throw AccuracyError("polygon_pt1: series did not converge", std::abs(line));
            const double term = coef(j) * coef(m) * ang * norm * radial_integral(l.k, l.n, l.k, l.n, p);
            line += term;
            ++r.terms;
            // Terms fall off like m^{-(5 - 4/N)}; bound the remaining tail by an integral.
            const double tail = std::abs(term) * (m + 1) / (4.0 - 4.0 / sides);
            if (m > 4 && tail < tol * std::abs(line)) break;
        }
        total += line;
        if (d != 0) lifting += line;
    }
    r.sigma_nn = total - 1.0;
    r.split = lifting != 0.0;
    r.pt0 = l.energy() / (c * c);
    r.pt1 = r.pt0 * (1.0 - r.sigma_nn);
    return r;
}

inline std::vector<PolygonPT> polygon_levels(int sides, size_t count, double tol = 1e-11) {
    std::vector<PolygonPT> out;
    for (const auto& l : disk_labels(30, 12)) {
        if (out.size() >= count) break;
        out.push_back(polygon_pt1(l, sides, tol));
    }
    return out;
}

// Coefficients c_j of 1 / C_N^2 = sum_j c_j N^{-j}, from the zeta expansion of log Gamma.
inline Vector polygon_prefactor_series(int order) {
    if (order < 1 || order > 30) throw RangeError("polygon_prefactor_series: order must lie in 1..30");
    // -2 log C_N = sum_{k>=2} g_k u^k with g_k = -2 zeta(k) (1 - (-1)^k - 2^k) / k, u = 1/N
    Vector g(size_t(order) + 1, 0.0);
    for (int k = 2; k <= order; ++k)
        g[size_t(k)] = -2.0 * boost::math::zeta(double(k)) * (1.0 - (k % 2 ? -1.0 : 1.0) - std::pow(2.0, k)) / k;
    // exp of a power series: c' = g' c
    Vector c(size_t(order) + 1, 0.0);
    c[0] = 1.0;
    for (int n = 1; n <= order; ++n) {
        double s = 0.0;
        for (int k = 1; k <= n; ++k) s += k * g[size_t(k)] * c[size_t(n - k)];
        c[size_t(n)] = s / n;
    }
    return c;
}

}  // namespace spectra::pt

#endif
