#ifndef SPECTRA_CONFORMAL_HPP
#define SPECTRA_CONFORMAL_HPP

#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "spectra/error.hpp"
#include "spectra/spectrum.hpp"

namespace spectra {

using Complex = std::complex<double>;

// Density Sigma(x, y) on the reference square.
using Density = std::function<double(double, double)>;

enum class ReferenceDomain { Square2, UnitDisk };

// Truncated Taylor series f(z) = sum a_j z^j about the origin of the reference domain.
// The physical map is scale * f; energies of the physical domain are those of f divided by scale^2.
class ConformalMap {
public:
    ConformalMap() = default;
    ConformalMap(std::vector<Complex> coeffs, ReferenceDomain domain, double scale = 1.0)
        : coeffs_(std::move(coeffs)), domain_(domain), scale_(scale) {
        while (coeffs_.size() > 2 && coeffs_.back() == Complex(0.0)) coeffs_.pop_back();
        if (coeffs_.size() < 2) throw PreconditionError("ConformalMap: needs at least a linear term");
        if (!(scale > 0.0)) throw PreconditionError("ConformalMap: scale must be positive");
    }

    const std::vector<Complex>& coeffs() const { return coeffs_; }
    int degree() const { return int(coeffs_.size()) - 1; }
    ReferenceDomain domain() const { return domain_; }
    double scale() const { return scale_; }

    bool real_coefficients() const {
        for (const auto& a : coeffs_)
            if (a.imag() != 0.0) return false;
        return true;
    }

    Complex value(Complex z) const {
        Complex s = 0.0;
        for (size_t j = coeffs_.size(); j-- > 0;) s = s * z + coeffs_[j];
        return s;
    }

    Complex derivative(Complex z) const {
        Complex s = 0.0;
        for (size_t j = coeffs_.size(); j-- > 1;) s = s * z + double(j) * coeffs_[j];
        return s;
    }

    bool contains(double x, double y) const {
        constexpr double slack = 1e-12;
        if (domain_ == ReferenceDomain::Square2) return std::abs(x) <= 1.0 + slack && std::abs(y) <= 1.0 + slack;
        return x * x + y * y <= 1.0 + slack;
    }

    double sigma(double x, double y) const {
        if (!contains(x, y)) throw DomainError("sigma: point outside the reference domain");
        const double s = std::norm(derivative(Complex(x, y)));
        if (!(s > 0.0)) throw ConformalityError("sigma: map is not conformal at this point");
        return s;
    }

    Density density() const {
        return [m = *this](double x, double y) { return m.sigma(x, y); };
    }

private:
    std::vector<Complex> coeffs_;
    ReferenceDomain domain_ = ReferenceDomain::Square2;
    double scale_ = 1.0;
};

inline ConformalMap identity_map(ReferenceDomain domain = ReferenceDomain::Square2) {
    return ConformalMap({0.0, 1.0}, domain);
}

// Real polynomial in x and y, coefficient kappa(n, m) of x^n y^m.
class BivariatePoly {
public:
    explicit BivariatePoly(int degree = 0) : degree_(degree), c_((degree + 1) * (degree + 1), 0.0) {}
    int degree() const { return degree_; }
    double& kappa(int n, int m) { return c_[n * (degree_ + 1) + m]; }
    double kappa(int n, int m) const {
        if (n < 0 || m < 0 || n > degree_ || m > degree_) return 0.0;
        return c_[n * (degree_ + 1) + m];
    }
    double operator()(double x, double y) const {
        double s = 0.0;
        for (int n = degree_; n >= 0; --n) {
            double row = 0.0;
            for (int m = degree_ - n; m >= 0; --m) row = row * y + kappa(n, m);
            s = s * x + row;
        }
        return s;
    }

private:
    int degree_;
    std::vector<double> c_;
};

// kappa table of Sigma = |f'|^2 with total degree 2 (deg f - 1).
inline BivariatePoly sigma_polynomial(const ConformalMap& map) {
    const int d = map.degree() - 1;
    // Re f' and Im f' as bivariate polynomials.
    BivariatePoly re(d), im(d);
    std::vector<std::vector<double>> binom(d + 1, std::vector<double>(d + 1, 0.0));
    for (int j = 0; j <= d; ++j) {
        binom[j][0] = binom[j][j] = 1.0;
        for (int p = 1; p < j; ++p) binom[j][p] = binom[j - 1][p - 1] + binom[j - 1][p];
    }
    static constexpr std::array<Complex, 4> ipow{Complex(1, 0), Complex(0, 1), Complex(-1, 0), Complex(0, -1)};
    for (int j = 0; j <= d; ++j) {
        const Complex b = double(j + 1) * map.coeffs()[j + 1];
        if (b == Complex(0.0)) continue;
        for (int p = 0; p <= j; ++p) {
            const Complex t = b * binom[j][p] * ipow[p % 4];
            re.kappa(j - p, p) += t.real();
            im.kappa(j - p, p) += t.imag();
        }
    }
    BivariatePoly out(2 * d);
    for (int n1 = 0; n1 <= d; ++n1)
        for (int m1 = 0; n1 + m1 <= d; ++m1) {
            const double r1 = re.kappa(n1, m1), i1 = im.kappa(n1, m1);
            if (r1 == 0.0 && i1 == 0.0) continue;
            for (int n2 = 0; n2 <= d; ++n2)
                for (int m2 = 0; n2 + m2 <= d; ++m2)
                    out.kappa(n1 + n2, m1 + m2) += r1 * re.kappa(n2, m2) + i1 * im.kappa(n2, m2);
        }
    return out;
}

namespace detail {

// Square to disk map, corners on the unit circle; odd coefficients a_1, a_5, ..., a_81.
inline constexpr std::array<double, 21> kSquareToDisk{
    0.9270373386506859592169,   0.0684677622187698947923,   0.004213992852820446527315,
    0.0002633492188752113068159, 0.0000164597431422106850906, 1.028733476603995365749e-6,
    6.429584031319946649386e-8, 4.018490025255095259389e-9, 2.511556265828158002204e-10,
    1.569722666138435320035e-11, 9.810766663365530263243e-13, 6.131729164603478102053e-14,
    3.832330727877173316706e-15, 2.395206704923233316346e-16, 1.497004190577020823119e-17,
    9.35627619110638014448e-19, 5.847672619441487590297e-20, 3.654795387150929743936e-21,
    2.28424711696933108996e-22, 1.427654448105831931225e-23, 8.922840300661449570156e-25};

}  // namespace detail

inline constexpr int kMaxSquareToDiskOrder = 81;

inline ConformalMap map_square_to_disk(int order = 37) {
    if (order < 1 || order > kMaxSquareToDiskOrder || order % 2 == 0)
        throw RangeError("map_square_to_disk: order must be odd and at most 81");
    std::vector<Complex> a(order + 1, 0.0);
    for (int j = 1; j <= order; j += 4) a[j] = detail::kSquareToDisk[(j - 1) / 4];
    return ConformalMap(std::move(a), ReferenceDomain::Square2);
}

// Polynomial composition outer(inner(z)) truncated at `max_degree`.
inline ConformalMap compose(const ConformalMap& outer, const ConformalMap& inner, int max_degree) {
    std::vector<Complex> result(max_degree + 1, 0.0), power(max_degree + 1, 0.0);
    power[0] = 1.0;
    const auto& a = outer.coeffs();
    const auto& b = inner.coeffs();
    for (size_t j = 0; j < a.size(); ++j) {
        if (j > 0) {
            std::vector<Complex> next(max_degree + 1, 0.0);
            for (int p = 0; p <= max_degree; ++p) {
                if (power[p] == Complex(0.0)) continue;
                for (size_t q = 0; q < b.size() && p + int(q) <= max_degree; ++q) next[p + q] += power[p] * b[q];
            }
            power = std::move(next);
        }
        for (int p = 0; p <= max_degree; ++p) result[p] += a[j] * power[p];
    }
    return ConformalMap(std::move(result), inner.domain(), outer.scale() * inner.scale());
}

inline double polygon_constant(int sides) {
    const double n = sides;
    return std::tgamma(1.0 - 1.0 / n) / (std::tgamma(1.0 + 1.0 / n) * std::tgamma(1.0 - 2.0 / n));
}

struct PolygonMap {
    ConformalMap map;  // rescaled map over the unit disk
    double c_n = 1.0;
    int sides = 0;
};

// f_k = prod_{j<k}(2/N + j) / (k! (N k + 1)) multiplying z^{N k + 1}.
inline std::vector<double> polygon_coefficients(int sides, int k_max) {
    std::vector<double> f(k_max + 1);
    double prod = 1.0;
    for (int k = 0; k <= k_max; ++k) {
        if (k > 0) prod *= (2.0 / sides + (k - 1)) / k;
        f[k] = prod / (double(sides) * k + 1.0);
    }
    return f;
}

inline PolygonMap map_polygon(int sides, int k_max = 40) {
    if (sides < 3) throw RangeError("map_polygon: need at least 3 sides");
    if (k_max < 1) throw RangeError("map_polygon: k_max must be positive");
    const auto f = polygon_coefficients(sides, k_max);
    std::vector<Complex> a(size_t(sides) * k_max + 2, 0.0);
    for (int k = 0; k <= k_max; ++k) a[size_t(sides) * k + 1] = f[k];
    const double c = polygon_constant(sides);
    return {ConformalMap(std::move(a), ReferenceDomain::UnitDisk, c), c, sides};
}

// d/dw of the rescaled polygon map, in closed form.
inline std::function<Complex(Complex)> polygon_derivative(int sides) {
    return [sides](Complex w) { return std::pow(1.0 - std::pow(w, sides), -2.0 / sides); };
}

struct RobnikMap {
    ConformalMap map;  // z + lambda z^2 over the unit disk
    double lambda = 0.0;
    double rescale = 1.0;  // cos^2 p = 1 / (1 + 2 lambda^2)
};

inline RobnikMap map_robnik(double lambda) {
    if (!(std::abs(lambda) < 0.5)) throw ConformalityError("map_robnik: |lambda| must be below 1/2");
    const double c2 = 1.0 / (1.0 + 2.0 * lambda * lambda);
    std::vector<Complex> a{0.0, 1.0};
    if (lambda != 0.0) a.push_back(lambda);
    return {ConformalMap(std::move(a), ReferenceDomain::UnitDisk, std::sqrt(c2)), lambda, c2};
}

// Density on the square of a disk map g composed with the square to disk map h.
inline Density disk_density_on_square(std::function<Complex(Complex)> disk_derivative, int order = 37) {
    const ConformalMap h = map_square_to_disk(order);
    return [h, g = std::move(disk_derivative)](double x, double y) {
        if (!h.contains(x, y)) throw DomainError("density: point outside the reference square");
        const Complex z(x, y);
        const double s = std::norm(g(h.value(z))) * std::norm(h.derivative(z));
        if (!(s > 0.0)) throw ConformalityError("density: composed map is not conformal here");
        return s;
    };
}

inline Density disk_density_on_square(const ConformalMap& disk_map, int order = 37) {
    if (disk_map.domain() != ReferenceDomain::UnitDisk) throw PreconditionError("expected a map over the unit disk");
    return disk_density_on_square([disk_map](Complex w) { return disk_map.derivative(w); }, order);
}

inline Spectrum rescale_spectrum(Spectrum s, double scale_sq) {
    if (!(scale_sq > 0.0)) throw PreconditionError("rescale_spectrum: scale must be positive");
    for (auto& l : s.levels) l.value /= scale_sq;
    return s;
}

}  // namespace spectra

#endif
