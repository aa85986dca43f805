#ifndef SPECTRA_CMM_HPP
#define SPECTRA_CMM_HPP

#include <cmath>
#include <vector>

#include "spectra/conformal.hpp"
#include "spectra/linalg.hpp"
#include "spectra/spectrum.hpp"
#include "spectra/squarebasis.hpp"

namespace spectra::cmm {

struct CmmProblem {
    ConformalMap map;
    int N = 0;
    DenseSymMatrix sigma;  // <k|Sigma|k'> in fold order
    Vector eps;            // box energies in fold order
    std::vector<SquareIndex> labels;
};

// Galerkin assembly from the kappa table; no quadrature.
inline CmmProblem assemble(const ConformalMap& map, int N) {
    if (map.domain() != ReferenceDomain::Square2)
        throw PreconditionError("cmm::assemble: map must be defined on the reference square");
    if (N < 1) throw RangeError("cmm::assemble: N must be positive");
    CmmProblem p;
    p.map = map;
    p.N = N;
    p.sigma = sigma_matrix(sigma_polynomial(map), N);
    p.labels = square_labels(N);
    for (const auto& l : p.labels) p.eps.push_back(l.energy());
    return p;
}

// diag(eps) c = E Sigma c.
inline Spectrum solve(const CmmProblem& p, size_t count) {
    const size_t order = p.eps.size();
    if (count == 0 || count > order) throw RangeError("cmm::solve: count must lie in [1, N^2]");
    EigenPairs r;
    try {
        r = gen_eig(DenseSymMatrix(Matrix::diagonal(p.eps)), p.sigma, count);
    } catch (const DefinitenessError& e) {
        throw ConformalityError(std::string("cmm::solve: Sigma matrix not positive definite; ") + e.what());
    }
    Spectrum s;
    s.method = "cmm";
    s.N = p.N;
    for (size_t i = 0; i < count; ++i) {
        Level l;
        l.value = r.values[i];
        l.coeffs = r.vectors.column(i);
        size_t best = 0;
        for (size_t k = 1; k < order; ++k)
            if (std::abs(l.coeffs[k]) > std::abs(l.coeffs[best])) best = k;
        l.label = p.labels[best].label();
        s.levels.push_back(std::move(l));
    }
    tag_degeneracy(s);
    return s;
}

}  // namespace spectra::cmm

#endif
