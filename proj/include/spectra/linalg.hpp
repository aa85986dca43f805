#ifndef SPECTRA_LINALG_HPP
#define SPECTRA_LINALG_HPP

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <string>
#include <tuple>
#include <vector>

#include <lapacke.h>

#include "spectra/error.hpp"

namespace spectra {

using Vector = std::vector<double>;

class Matrix {
public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    static Matrix identity(size_t n) {
        Matrix m(n, n);
        for (size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }
    static Matrix diagonal(const Vector& d) {
        Matrix m(d.size(), d.size());
        for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
        return m;
    }

    double& operator()(size_t i, size_t j) { return a_[i * cols_ + j]; }
    double operator()(size_t i, size_t j) const { return a_[i * cols_ + j]; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    double* data() { return a_.data(); }
    const double* data() const { return a_.data(); }

    Vector column(size_t j) const {
        Vector v(rows_);
        for (size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
        return v;
    }
    void set_column(size_t j, const Vector& v) {
        for (size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
    }

    Matrix transpose() const {
        Matrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i)
            for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    double max_abs() const {
        double m = 0.0;
        for (double x : a_) m = std::max(m, std::abs(x));
        return m;
    }

    // Infinity norm.
    double norm_inf() const {
        double m = 0.0;
        for (size_t i = 0; i < rows_; ++i) {
            double s = 0.0;
            for (size_t j = 0; j < cols_; ++j) s += std::abs((*this)(i, j));
            m = std::max(m, s);
        }
        return m;
    }

private:
    size_t rows_ = 0, cols_ = 0;
    std::vector<double> a_;
};

inline Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw RangeError("matrix product: shape mismatch");
    Matrix c(a.rows(), b.cols());
    for (size_t i = 0; i < a.rows(); ++i)
        for (size_t k = 0; k < a.cols(); ++k) {
            const double aik = a(i, k);
            if (aik == 0.0) continue;
            const double* brow = b.data() + k * b.cols();
            double* crow = c.data() + i * c.cols();
            for (size_t j = 0; j < b.cols(); ++j) crow[j] += aik * brow[j];
        }
    return c;
}

inline Vector operator*(const Matrix& a, const Vector& x) {
    if (a.cols() != x.size()) throw RangeError("matrix-vector product: shape mismatch");
    Vector y(a.rows(), 0.0);
    for (size_t i = 0; i < a.rows(); ++i) {
        const double* row = a.data() + i * a.cols();
        double s = 0.0;
        for (size_t j = 0; j < a.cols(); ++j) s += row[j] * x[j];
        y[i] = s;
    }
    return y;
}

inline double dot(const Vector& a, const Vector& b) {
    return std::inner_product(a.begin(), a.end(), b.begin(), 0.0);
}
inline double norm2(const Vector& a) { return std::sqrt(dot(a, a)); }

// Symmetric by construction: the input is replaced by (A + A^T)/2.
class DenseSymMatrix {
public:
    DenseSymMatrix() = default;
    explicit DenseSymMatrix(Matrix a) : a_(std::move(a)) {
        if (a_.rows() != a_.cols()) throw RangeError("DenseSymMatrix: matrix not square");
        for (size_t i = 0; i < a_.rows(); ++i)
            for (size_t j = i + 1; j < a_.cols(); ++j) {
                const double s = 0.5 * (a_(i, j) + a_(j, i));
                a_(i, j) = a_(j, i) = s;
            }
    }
    size_t order() const { return a_.rows(); }
    double operator()(size_t i, size_t j) const { return a_(i, j); }
    const Matrix& matrix() const { return a_; }

private:
    Matrix a_;
};

// CSR storage built from triplets; duplicates are summed.
class SparseOperator {
public:
    struct Triplet {
        size_t row, col;
        double value;
    };

    SparseOperator() = default;
    SparseOperator(size_t order, std::vector<Triplet> triplets, Vector left_scale = {})
        : order_(order), left_scale_(std::move(left_scale)) {
        if (!left_scale_.empty() && left_scale_.size() != order)
            throw RangeError("SparseOperator: scaling vector has wrong length");
        for (const auto& t : triplets)
            if (t.row >= order || t.col >= order) throw RangeError("SparseOperator: index out of range");
        std::sort(triplets.begin(), triplets.end(),
                  [](const Triplet& a, const Triplet& b) { return std::tie(a.row, a.col) < std::tie(b.row, b.col); });
        row_ptr_.assign(order + 1, 0);
        for (const auto& t : triplets) {
            if (!cols_.empty() && last_row_ == t.row && cols_.back() == t.col && row_ptr_[t.row + 1] > 0) {
                vals_.back() += t.value;
                continue;
            }
            cols_.push_back(t.col);
            vals_.push_back(t.value);
            ++row_ptr_[t.row + 1];
            last_row_ = t.row;
        }
        for (size_t i = 0; i < order; ++i) row_ptr_[i + 1] += row_ptr_[i];
    }

    size_t order() const { return order_; }
    size_t nonzeros() const { return vals_.size(); }
    const Vector& left_scale() const { return left_scale_; }

    Vector apply(const Vector& x) const {
        Vector y(order_, 0.0);
        for (size_t i = 0; i < order_; ++i) {
            double s = 0.0;
            for (size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p) s += vals_[p] * x[cols_[p]];
            y[i] = left_scale_.empty() ? s : left_scale_[i] * s;
        }
        return y;
    }

    Matrix to_dense() const {
        Matrix m(order_, order_);
        for (size_t i = 0; i < order_; ++i)
            for (size_t p = row_ptr_[i]; p < row_ptr_[i + 1]; ++p)
                m(i, cols_[p]) = (left_scale_.empty() ? 1.0 : left_scale_[i]) * vals_[p];
        return m;
    }

private:
    size_t order_ = 0;
    Vector left_scale_;
    std::vector<size_t> row_ptr_, cols_;
    Vector vals_;
    size_t last_row_ = 0;
};

struct EigenPairs {
    Vector values;   // ascending
    Matrix vectors;  // one eigenvector per column; empty when not requested
};

// Orders above this go to LAPACK; below it the own Householder + QL path runs.
inline constexpr size_t kOwnEigenLimit = 600;

namespace detail {

// Householder tridiagonalisation followed by implicit QL; v holds A on entry, eigenvectors on exit.
inline void tred2_tql2(size_t n, Matrix& v, Vector& d) {
    Vector e(n, 0.0);
    d.assign(n, 0.0);
    for (size_t j = 0; j < n; ++j) d[j] = v(n - 1, j);

    for (size_t i = n - 1; i > 0; --i) {
        double scale = 0.0, h = 0.0;
        for (size_t k = 0; k < i; ++k) scale += std::abs(d[k]);
        if (scale == 0.0) {
            e[i] = d[i - 1];
            for (size_t j = 0; j < i; ++j) {
                d[j] = v(i - 1, j);
                v(i, j) = 0.0;
                v(j, i) = 0.0;
            }
        } else {
            for (size_t k = 0; k < i; ++k) {
                d[k] /= scale;
                h += d[k] * d[k];
            }
            double f = d[i - 1];
            double g = std::sqrt(h);
            if (f > 0) g = -g;
            e[i] = scale * g;
            h -= f * g;
            d[i - 1] = f - g;
            for (size_t j = 0; j < i; ++j) e[j] = 0.0;
            for (size_t j = 0; j < i; ++j) {
                f = d[j];
                v(j, i) = f;
                g = e[j] + v(j, j) * f;
                for (size_t k = j + 1; k <= i - 1; ++k) {
                    g += v(k, j) * d[k];
                    e[k] += v(k, j) * f;
                }
                e[j] = g;
            }
            f = 0.0;
            for (size_t j = 0; j < i; ++j) {
                e[j] /= h;
                f += e[j] * d[j];
            }
            const double hh = f / (h + h);
            for (size_t j = 0; j < i; ++j) e[j] -= hh * d[j];
            for (size_t j = 0; j < i; ++j) {
                f = d[j];
                g = e[j];
                for (size_t k = j; k <= i - 1; ++k) v(k, j) -= (f * e[k] + g * d[k]);
                d[j] = v(i - 1, j);
                v(i, j) = 0.0;
            }
        }
        d[i] = h;
    }
    for (size_t i = 0; i + 1 < n; ++i) {
        v(n - 1, i) = v(i, i);
        v(i, i) = 1.0;
        const double h = d[i + 1];
        if (h != 0.0) {
            for (size_t k = 0; k <= i; ++k) d[k] = v(k, i + 1) / h;
            for (size_t j = 0; j <= i; ++j) {
                double g = 0.0;
                for (size_t k = 0; k <= i; ++k) g += v(k, i + 1) * v(k, j);
                for (size_t k = 0; k <= i; ++k) v(k, j) -= g * d[k];
            }
        }
        for (size_t k = 0; k <= i; ++k) v(k, i + 1) = 0.0;
    }
    for (size_t j = 0; j < n; ++j) {
        d[j] = v(n - 1, j);
        v(n - 1, j) = 0.0;
    }
    v(n - 1, n - 1) = 1.0;
    e[0] = 0.0;

    for (size_t i = 1; i < n; ++i) e[i - 1] = e[i];
    e[n - 1] = 0.0;
    double f = 0.0, tst1 = 0.0;
    const double eps = std::ldexp(1.0, -52);
    for (size_t l = 0; l < n; ++l) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        size_t m = l;
        while (m < n - 1 && std::abs(e[m]) > eps * tst1) ++m;
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > 60) throw SolverError("sym_eig: QL iteration did not converge at index " + std::to_string(l));
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) r = -r;
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                const double dl1 = d[l + 1];
                double h = g - d[l];
                for (size_t i = l + 2; i < n; ++i) d[i] -= h;
                f += h;
                p = d[m];
                double c = 1.0, c2 = c, c3 = c, s = 0.0, s2 = 0.0;
                const double el1 = e[l + 1];
                for (size_t ii = m; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = std::hypot(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    for (size_t k = 0; k < n; ++k) {
                        h = v(k, ii + 1);
                        v(k, ii + 1) = s * v(k, ii) + c * h;
                        v(k, ii) = c * v(k, ii) - s * h;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

inline void check_residuals(const Matrix& a, const EigenPairs& r) {
    if (r.vectors.cols() == 0) return;
    const double scale = std::max(a.norm_inf(), 1e-300);
    for (size_t j = 0; j < r.values.size(); ++j) {
        const Vector v = r.vectors.column(j);
        Vector av = a * v;
        for (size_t i = 0; i < v.size(); ++i) av[i] -= r.values[j] * v[i];
        const double res = norm2(av);
        if (res > 1e-9 * scale)
            throw SolverError("sym_eig: residual " + std::to_string(res) + " too large for pair " + std::to_string(j));
    }
}

}  // namespace detail

inline EigenPairs sym_eig(const DenseSymMatrix& a, size_t count, bool want_vectors = true) {
    const size_t n = a.order();
    if (count == 0 || count > n) throw RangeError("sym_eig: count must lie in [1, order]");
    EigenPairs out;
    if (n <= kOwnEigenLimit) {
        Matrix v = a.matrix();
        Vector d;
        detail::tred2_tql2(n, v, d);
        std::vector<size_t> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        std::stable_sort(idx.begin(), idx.end(), [&](size_t i, size_t j) { return d[i] < d[j]; });
        out.values.resize(count);
        if (want_vectors) out.vectors = Matrix(n, count);
        for (size_t c = 0; c < count; ++c) {
            out.values[c] = d[idx[c]];
            if (want_vectors)
                for (size_t i = 0; i < n; ++i) out.vectors(i, c) = v(i, idx[c]);
        }
    } else {
        Matrix work = a.matrix();
        Vector w(n);
        Matrix z(n, want_vectors ? count : 1);
        std::vector<lapack_int> isuppz(2 * count);
        lapack_int found = 0;
        const lapack_int info = LAPACKE_dsyevr(
            LAPACK_ROW_MAJOR, want_vectors ? 'V' : 'N', 'I', 'U', lapack_int(n), work.data(), lapack_int(n), 0.0, 0.0, 1,
            lapack_int(count), 0.0, &found, w.data(), z.data(), lapack_int(z.cols()), isuppz.data());
        if (info != 0 || size_t(found) != count) throw SolverError("sym_eig: LAPACK dsyevr failed, info " + std::to_string(info));
        out.values.assign(w.begin(), w.begin() + count);
        if (want_vectors) out.vectors = std::move(z);
    }
    detail::check_residuals(a.matrix(), out);
    return out;
}

// Lower Cholesky factor; throws when the matrix is not positive definite.
inline Matrix cholesky(const Matrix& b) {
    const size_t n = b.rows();
    Matrix l(n, n);
    for (size_t j = 0; j < n; ++j) {
        double s = b(j, j);
        for (size_t k = 0; k < j; ++k) s -= l(j, k) * l(j, k);
        if (!(s > 0.0)) throw DefinitenessError("cholesky: matrix not positive definite at pivot " + std::to_string(j));
        const double ljj = std::sqrt(s);
        l(j, j) = ljj;
        for (size_t i = j + 1; i < n; ++i) {
            double t = b(i, j);
            const double* li = l.data() + i * n;
            const double* lj = l.data() + j * n;
            for (size_t k = 0; k < j; ++k) t -= li[k] * lj[k];
            l(i, j) = t / ljj;
        }
    }
    return l;
}

// Solves L X = B in place (columns of B).
inline void forward_solve(const Matrix& l, Matrix& b) {
    const size_t n = l.rows();
    for (size_t i = 0; i < n; ++i) {
        double* bi = b.data() + i * b.cols();
        for (size_t k = 0; k < i; ++k) {
            const double lik = l(i, k);
            if (lik == 0.0) continue;
            const double* bk = b.data() + k * b.cols();
            for (size_t j = 0; j < b.cols(); ++j) bi[j] -= lik * bk[j];
        }
        const double inv = 1.0 / l(i, i);
        for (size_t j = 0; j < b.cols(); ++j) bi[j] *= inv;
    }
}

// Solves L^T X = B in place.
inline void backward_solve_transposed(const Matrix& l, Matrix& b) {
    const size_t n = l.rows();
    for (size_t ii = n; ii-- > 0;) {
        double* bi = b.data() + ii * b.cols();
        for (size_t k = ii + 1; k < n; ++k) {
            const double lki = l(k, ii);
            if (lki == 0.0) continue;
            const double* bk = b.data() + k * b.cols();
            for (size_t j = 0; j < b.cols(); ++j) bi[j] -= lki * bk[j];
        }
        const double inv = 1.0 / l(ii, ii);
        for (size_t j = 0; j < b.cols(); ++j) bi[j] *= inv;
    }
}

// A v = lambda B v, lowest eigenpairs with B-orthonormal vectors.
inline EigenPairs gen_eig(const DenseSymMatrix& a, const DenseSymMatrix& b, size_t count, bool want_vectors = true) {
    const size_t n = a.order();
    if (b.order() != n) throw RangeError("gen_eig: order mismatch");
    if (count == 0 || count > n) throw RangeError("gen_eig: count must lie in [1, order]");
    if (n > kOwnEigenLimit) {
        Matrix wa = a.matrix(), wb = b.matrix();
        Vector w(n);
        Matrix z(n, want_vectors ? count : 1);
        std::vector<lapack_int> ifail(n);
        lapack_int found = 0;
        const lapack_int info = LAPACKE_dsygvx(
            LAPACK_ROW_MAJOR, 1, want_vectors ? 'V' : 'N', 'I', 'U', lapack_int(n), wa.data(), lapack_int(n), wb.data(),
            lapack_int(n), 0.0, 0.0, 1, lapack_int(count), 0.0, &found, w.data(), z.data(), lapack_int(z.cols()),
            ifail.data());
        if (info > lapack_int(n)) throw DefinitenessError("gen_eig: B is not positive definite");
        if (info != 0 || size_t(found) != count) throw SolverError("gen_eig: LAPACK dsygvx failed, info " + std::to_string(info));
        EigenPairs out;
        out.values.assign(w.begin(), w.begin() + count);
        if (want_vectors) {
            out.vectors = std::move(z);
            const double scale = a.matrix().norm_inf(), bscale = b.matrix().norm_inf();
            for (size_t j = 0; j < count; ++j) {
                const Vector v = out.vectors.column(j);
                const Vector av = a.matrix() * v, bv = b.matrix() * v;
                double res = 0.0;
                for (size_t i = 0; i < n; ++i) res += std::pow(av[i] - out.values[j] * bv[i], 2);
                if (std::sqrt(res) > 1e-9 * (scale + std::abs(out.values[j]) * bscale) * norm2(v))
                    throw SolverError("gen_eig: residual too large for pair " + std::to_string(j));
            }
        }
        return out;
    }
    const Matrix l = cholesky(b.matrix());
    Matrix x = a.matrix();
    forward_solve(l, x);
    Matrix c = x.transpose();
    forward_solve(l, c);
    EigenPairs r = sym_eig(DenseSymMatrix(std::move(c)), count, want_vectors);
    if (want_vectors) backward_solve_transposed(l, r.vectors);
    return r;
}

// Dense LU with partial pivoting, factored once.
class LuFactor {
public:
    explicit LuFactor(Matrix a) : lu_(std::move(a)), piv_(lu_.rows()) {
        const size_t n = lu_.rows();
        if (lu_.cols() != n) throw RangeError("LuFactor: matrix not square");
        const double scale = std::max(lu_.max_abs(), 1e-300);
        std::iota(piv_.begin(), piv_.end(), 0);
        for (size_t k = 0; k < n; ++k) {
            size_t p = k;
            for (size_t i = k + 1; i < n; ++i)
                if (std::abs(lu_(i, k)) > std::abs(lu_(p, k))) p = i;
            if (std::abs(lu_(p, k)) <= 1e-14 * scale) throw ShiftError("LuFactor: matrix is singular to working precision");
            if (p != k) {
                for (size_t j = 0; j < n; ++j) std::swap(lu_(k, j), lu_(p, j));
                std::swap(piv_[k], piv_[p]);
            }
            const double inv = 1.0 / lu_(k, k);
            for (size_t i = k + 1; i < n; ++i) {
                const double m = lu_(i, k) *= inv;
                if (m == 0.0) continue;
                double* ri = lu_.data() + i * n;
                const double* rk = lu_.data() + k * n;
                for (size_t j = k + 1; j < n; ++j) ri[j] -= m * rk[j];
            }
        }
    }

    Vector solve(const Vector& b) const {
        const size_t n = lu_.rows();
        Vector x(n);
        for (size_t i = 0; i < n; ++i) x[i] = b[piv_[i]];
        for (size_t i = 0; i < n; ++i)
            for (size_t k = 0; k < i; ++k) x[i] -= lu_(i, k) * x[k];
        for (size_t ii = n; ii-- > 0;) {
            for (size_t k = ii + 1; k < n; ++k) x[ii] -= lu_(ii, k) * x[k];
            x[ii] /= lu_(ii, ii);
        }
        return x;
    }

private:
    Matrix lu_;
    std::vector<size_t> piv_;
};

struct PowerResult {
    double value = 0.0;
    Vector vector;
    int iterations = 0;
    std::vector<double> history;  // eigenvalue estimate per iteration
};

// Inverse iteration: `apply_inverse` multiplies by the inverse of the target operator.
// Vectors in `deflate` are projected out at every step.
template <class ApplyInverse>
PowerResult power_smallest(ApplyInverse&& apply_inverse, Vector guess, double tol, int max_iter,
                           const std::vector<Vector>& deflate = {}) {
    auto project = [&](Vector& x) {
        for (const auto& q : deflate) {
            const double c = dot(q, x) / dot(q, q);
            for (size_t i = 0; i < x.size(); ++i) x[i] -= c * q[i];
        }
    };
    project(guess);
    double nrm = norm2(guess);
    if (nrm == 0.0) throw PreconditionError("power_smallest: guess vanishes after deflation");
    for (double& x : guess) x /= nrm;
    PowerResult r;
    double previous = 0.0;
    for (int it = 1; it <= max_iter; ++it) {
        Vector y = apply_inverse(guess);
        project(y);
        const double mu = dot(guess, y);
        r.value = 1.0 / mu;
        r.history.push_back(r.value);
        nrm = norm2(y);
        for (double& x : y) x /= nrm;
        guess = std::move(y);
        r.iterations = it;
        if (it > 1 && std::abs(r.value - previous) <= tol * std::abs(r.value)) {
            r.vector = std::move(guess);
            return r;
        }
        previous = r.value;
    }
    throw ConvergenceError("power_smallest: no convergence after " + std::to_string(max_iter) + " iterations",
                           r.value);
}

// Modified Gram-Schmidt on columns; returns false on rank loss.
inline bool orthonormalize(std::vector<Vector>& block, double rank_tol = 1e-10) {
    for (size_t j = 0; j < block.size(); ++j) {
        const double before = norm2(block[j]);
        for (int pass = 0; pass < 2; ++pass)
            for (size_t i = 0; i < j; ++i) {
                const double c = dot(block[i], block[j]);
                for (size_t k = 0; k < block[j].size(); ++k) block[j][k] -= c * block[i][k];
            }
        const double after = norm2(block[j]);
        if (!(after > rank_tol * before)) return false;
        for (double& x : block[j]) x /= after;
    }
    return true;
}

struct SubspaceResult {
    std::vector<Vector> basis;  // orthonormal
    int iterations = 0;
};

// Block iteration with (O - shift)^{-2}; `solve_shifted` applies (O - shift)^{-1}.
template <class SolveShifted>
SubspaceResult shifted_inverse_sq(SolveShifted&& solve_shifted, std::vector<Vector> guesses, double tol,
                                  int max_iter = 500) {
    if (guesses.empty()) throw PreconditionError("shifted_inverse_sq: no guess vectors");
    if (!orthonormalize(guesses)) throw DegeneracyError("shifted_inverse_sq: guesses are linearly dependent");
    SubspaceResult r;
    for (int it = 1; it <= max_iter; ++it) {
        std::vector<Vector> next;
        for (const auto& g : guesses) next.push_back(solve_shifted(solve_shifted(g)));
        if (!orthonormalize(next))
            throw DegeneracyError("shifted_inverse_sq: block lost rank; the level degeneracy is smaller than requested");
        // Distance between successive subspaces.
        double change = 0.0;
        for (const auto& v : next) {
            Vector res = v;
            for (const auto& g : guesses) {
                const double c = dot(g, v);
                for (size_t k = 0; k < res.size(); ++k) res[k] -= c * g[k];
            }
            change = std::max(change, norm2(res));
        }
        guesses = std::move(next);
        r.iterations = it;
        if (change <= tol) {
            r.basis = std::move(guesses);
            return r;
        }
    }
    throw ConvergenceError("shifted_inverse_sq: subspace did not settle", 0.0);
}

// Largest eigenpairs of a symmetric operator by Lanczos with full reorthogonalisation.
template <class Apply>
EigenPairs lanczos_largest(Apply&& apply, size_t n, size_t count, double tol = 1e-13, size_t max_dim = 0) {
    if (count == 0 || count > n) throw RangeError("lanczos_largest: count must lie in [1, order]");
    if (max_dim == 0) max_dim = std::min(n, std::max<size_t>(4 * count + 40, 120));
    std::vector<Vector> q;
    Vector alpha, beta;
    Vector v(n);
    // Deterministic start with all components populated.
    for (size_t i = 0; i < n; ++i) v[i] = 1.0 + 0.5 * std::sin(1.7 * double(i) + 0.3);
    double nv = norm2(v);
    for (double& x : v) x /= nv;
    EigenPairs best;
    for (size_t j = 0; j < max_dim; ++j) {
        q.push_back(v);
        Vector w = apply(v);
        const double a = dot(w, v);
        alpha.push_back(a);
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& qi : q) {
                const double c = dot(qi, w);
                for (size_t k = 0; k < n; ++k) w[k] -= c * qi[k];
            }
        const double b = norm2(w);
        const size_t m = alpha.size();
        if (m >= count && (m % 10 == 0 || b < 1e-14 || m == max_dim)) {
            Matrix t(m, m);
            for (size_t i = 0; i < m; ++i) {
                t(i, i) = alpha[i];
                if (i + 1 < m) t(i, i + 1) = t(i + 1, i) = beta[i];
            }
            Matrix z = t;
            Vector d;
            detail::tred2_tql2(m, z, d);
            std::vector<size_t> idx(m);
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(), [&](size_t x, size_t y) { return d[x] > d[y]; });
            bool converged = true;
            for (size_t c = 0; c < count; ++c)
                if (std::abs(b * z(m - 1, idx[c])) > tol * std::abs(d[idx[0]])) converged = false;
            if (converged || b < 1e-14 || m == max_dim) {
                best.values.resize(count);
                best.vectors = Matrix(n, count);
                for (size_t c = 0; c < count; ++c) {
                    best.values[c] = d[idx[c]];
                    for (size_t i = 0; i < m; ++i) {
                        const double zc = z(i, idx[c]);
                        for (size_t k = 0; k < n; ++k) best.vectors(k, c) += zc * q[i][k];
                    }
                }
                if (!converged && b >= 1e-14)
                    throw ConvergenceError("lanczos_largest: Krylov space exhausted", best.values.back());
                return best;
            }
        }
        beta.push_back(b);
        for (size_t k = 0; k < n; ++k) v[k] = w[k] / b;
    }
    throw ConvergenceError("lanczos_largest: no convergence", 0.0);
}

// Lanczos with locking: repeated runs on the operator deflated against every pair found so far,
// so that exactly degenerate eigenvalues appear with their full multiplicity.
template <class Apply>
EigenPairs lanczos_largest_locked(Apply&& apply, size_t n, size_t count, double tol = 1e-13) {
    if (count == 0 || count > n) throw RangeError("lanczos_largest_locked: count must lie in [1, order]");
    std::vector<Vector> found;
    Vector found_values;
    auto project = [&](Vector& x) {
        for (int pass = 0; pass < 2; ++pass)
            for (const auto& q : found) {
                const double c = dot(q, x);
                for (size_t k = 0; k < n; ++k) x[k] -= c * q[k];
            }
    };
    std::vector<size_t> keep;  // indices into `found` of the current top `count`
    for (size_t pass = 0; pass <= count && found.size() < n; ++pass) {
        auto deflated = [&](const Vector& x) {
            Vector y = x;
            project(y);
            y = apply(y);
            project(y);
            return y;
        };
        const EigenPairs r = lanczos_largest(deflated, n, std::min(count, n - found.size()), tol);
        const size_t first_new = found.size();
        for (size_t c = 0; c < r.values.size(); ++c) {
            Vector v = r.vectors.column(c);
            project(v);
            const double nv = norm2(v);
            if (!(nv > 0.5)) continue;  // Ritz vector inside the locked space
            for (double& x : v) x /= nv;
            found.push_back(std::move(v));
            found_values.push_back(r.values[c]);
        }
        std::vector<size_t> order(found.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) { return found_values[a] > found_values[b]; });
        order.resize(std::min(count, order.size()));
        const bool added = std::any_of(order.begin(), order.end(), [&](size_t i) { return i >= first_new; });
        keep = std::move(order);
        if (!added) break;
    }
    EigenPairs out;
    out.vectors = Matrix(n, keep.size());
    for (size_t c = 0; c < keep.size(); ++c) {
        out.values.push_back(found_values[keep[c]]);
        out.vectors.set_column(c, found[keep[c]]);
    }
    return out;
}

// <a|F|b> for separable states a = (ax, ay) over a tensor rule, with phi(i, j) the j-th 1D function at
// node i. Output is in fold order, position ay + n ax.
template <class F>
Matrix tensor_elements(const F& f, const Vector& nodes, const Vector& weights, const Matrix& phi) {
    const size_t m = nodes.size(), n = phi.cols();
    if (phi.rows() != m || weights.size() != m) throw RangeError("tensor_elements: rule and basis sizes differ");
    Matrix w(m, m);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) w(i, j) = weights[i] * weights[j] * f(nodes[i], nodes[j]);
    Matrix p(m, n * n);
    for (size_t i = 0; i < m; ++i)
        for (size_t a = 0; a < n; ++a)
            for (size_t b = 0; b < n; ++b) p(i, a * n + b) = phi(i, a) * phi(i, b);
    // t((ax,bx), (ay,by)) = sum_ij p(i,(ax,bx)) w(i,j) p(j,(ay,by))
    const Matrix t = p.transpose() * (w * p);
    Matrix out(n * n, n * n);
    for (size_t ax = 0; ax < n; ++ax)
        for (size_t ay = 0; ay < n; ++ay)
            for (size_t bx = 0; bx < n; ++bx)
                for (size_t by = 0; by < n; ++by) out(ay + n * ax, by + n * bx) = t(ax * n + bx, ay * n + by);
    return out;
}

}  // namespace spectra

#endif
