#ifndef SPECTRA_TABLES_HPP
#define SPECTRA_TABLES_HPP

// Recomputed reference tables with a cell-by-cell diff against the embedded values.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "general_map_reference.hpp"
#include "reference_values.hpp"
#include "spectra/ccm.hpp"
#include "spectra/cmm.hpp"
#include "spectra/conformal.hpp"
#include "spectra/perturbation.hpp"

namespace spectra::tables {

struct Cell {
    std::string row, column;
    double expected = 0.0, got = 0.0;
    double tol = 0.0;
    bool relative = false;
    bool pass = false;
};

struct TableReport {
    std::string id, title, parameters;
    std::vector<Cell> cells;

    void check(std::string row, std::string column, double expected, double got, double tol, bool relative = false) {
        const double err = std::abs(got - expected);
        const double bound = relative ? tol * std::abs(expected) : tol;
        cells.push_back({std::move(row), std::move(column), expected, got, tol, relative, std::isfinite(got) && err <= bound});
    }
    void flag(std::string row, std::string column, bool expected, bool got) {
        cells.push_back({std::move(row), std::move(column), expected ? 1.0 : 0.0, got ? 1.0 : 0.0, 0.0, false, expected == got});
    }
    size_t failures() const {
        return size_t(std::count_if(cells.begin(), cells.end(), [](const Cell& c) { return !c.pass; }));
    }
    bool passed() const { return failures() == 0; }
};

inline const std::vector<std::string>& table_ids() {
    static const std::vector<std::string> ids{"t1", "t2", "t3", "t4", "t5", "t6", "tpt-column"};
    return ids;
}

namespace detail {

inline std::string nlabel(const std::string& prefix, int n) { return prefix + std::to_string(n); }

inline void circle_row(TableReport& r, const Spectrum& s, const reference::CircleRow& row, double tol) {
    const std::string name = nlabel("N=", row.N);
    r.check(name, "E0", row.e0, s[0], tol);
    r.check(name, "E1", row.e12, s[1], tol);
    r.check(name, "E2", row.e12, s[2], tol);
    // cos 2theta and sin 2theta fall in different symmetry classes of the square, so the
    // discretization splits that doublet; the table lists the lower member.
    r.check(name, "E3", row.e34, s[3], tol);
}

// Compares two lists after sorting both.
inline void sorted_block(TableReport& r, const std::vector<std::string>& rows, const std::string& column,
                         std::vector<double> expected, std::vector<double> got, double tol, bool relative) {
    std::sort(expected.begin(), expected.end());
    std::sort(got.begin(), got.end());
    for (size_t i = 0; i < expected.size(); ++i) r.check(rows[i], column, expected[i], got[i], tol, relative);
}

}  // namespace detail

// Circle by CMM: the lowest five levels at N = 10, 20; the ground level decreases with N.
inline TableReport t1() {
    TableReport r{"t1", "circle, Galerkin method", "square-to-disk map to z^37; N = 10, 20 (30 for monotonicity)", {}};
    const ConformalMap map = map_square_to_disk();
    std::vector<double> ground;
    for (int N : {10, 20, 30}) {
        const Spectrum s = cmm::solve(cmm::assemble(map, N), 5);
        ground.push_back(s[0]);
        for (const auto& row : reference::kCircleCmm)
            if (row.N == N && N <= 20) detail::circle_row(r, s, row, 1e-9);
    }
    r.flag("N=10,20,30", "E0 decreasing", true, ground[0] > ground[1] && ground[1] > ground[2]);
    return r;
}

// Circle by CCM at N = 40, 60.
inline TableReport t2() {
    TableReport r{"t2", "circle, collocation method", "square-to-disk map to z^37; N = 40, 60", {}};
    const Density sigma = map_square_to_disk().density();
    for (int N : {40, 60}) {
        const Spectrum s = ccm::solve(ccm::assemble_operator(sigma, N), 5);
        for (const auto& row : reference::kCircleCcm)
            if (row.N == N) detail::circle_row(r, s, row, 1e-9);
    }
    return r;
}

// Circle by perturbation theory on the square basis, orders 0..3; degenerate blocks compared as sorted sets.
inline TableReport t3(int N_int = 20) {
    TableReport r{"t3", "circle, perturbation theory", "square-to-disk map to z^37; N_int = " + std::to_string(N_int), {}};
    const auto sm = pt::sigma_elements_square(map_square_to_disk(), N_int);
    const auto levels = pt::pt_levels(sm, reference::kCirclePt.size(), 3);
    const auto& rows = reference::kCirclePt;
    size_t i = 0;
    while (i < rows.size()) {
        const size_t d = rows[i].d;
        std::vector<std::string> names;
        std::vector<std::vector<double>> expected(4), got(4);
        for (size_t k = i; k < i + d; ++k) {
            names.push_back("(" + std::to_string(rows[k].nx) + "," + std::to_string(rows[k].ny) + ")");
            const double e[4]{rows[k].pt0, rows[k].pt1, rows[k].pt2, rows[k].pt3};
            for (int o = 0; o < 4; ++o) {
                expected[size_t(o)].push_back(e[o]);
                got[size_t(o)].push_back(levels[k].partial(o));
            }
        }
        for (int o = 0; o < 4; ++o)
            detail::sorted_block(r, names, "PT" + std::to_string(o), expected[size_t(o)], got[size_t(o)], 1e-4, true);
        if (d == 2) r.flag(names[0], "split", rows[i].pt1 != rows[i + 1].pt1, levels[i].split);
        i += d;
    }
    return r;
}

// General-map first order: coefficients of rho_j in -E^(1)/eps against the closed forms.
inline TableReport t4() {
    TableReport r{"t4", "general map, first order", "rho_1 .. rho_19", {}};
    constexpr int J = 19;
    for (const auto& row : reference::general_map_rows()) {
        const auto g = pt::general_map_first_order({row.nx, row.ny}, J);
        const std::string a = "(" + std::to_string(row.nx) + "," + std::to_string(row.ny) + ")";
        const std::string b = "(" + std::to_string(row.ny) + "," + std::to_string(row.nx) + ")";
        std::vector<double> diag(J, 0.0), off(J, 0.0);
        for (const auto& [j, v] : row.diag) diag[size_t(j - 1)] = double(v);
        for (const auto& [j, v] : row.offdiag) off[size_t(j - 1)] = double(v);
        for (int j = 1; j <= row.top; ++j) {
            const std::string col = "rho" + std::to_string(j);
            const double e = diag[size_t(j - 1)];
            const double tol = 1e-10 * std::max(1.0, std::abs(e));
            r.check(a, col, e, g.diag_a[size_t(j - 1)], tol);
            if (g.degenerate) {
                // The swapped label flips the sign of rho_j with j = 3 mod 4.
                const double partner = (j % 4 == 3) ? -e : e;
                r.check(b, col, partner, g.diag_b[size_t(j - 1)], tol);
                const double o = off[size_t(j - 1)];
                r.check(a + "<->" + b, col, std::abs(o), std::abs(g.offdiag[size_t(j - 1)]),
                        1e-10 * std::max(1.0, std::abs(o)));
            }
        }
        if (g.degenerate) r.flag(a + "<->" + b, "split", row.lifted, g.splits);
    }
    return r;
}

// Robnik billiard at lambda = 1/100 (and 1/20): zeroth and second order, doublets compared as sorted pairs.
inline TableReport t5(int NR = 30) {
    TableReport r{"t5", "Robnik billiard, perturbation theory", "lambda = 1/100 and 1/20; radial cutoff " + std::to_string(NR), {}};
    const auto& rows = reference::kRobnik;
    for (double lambda : {0.01, 0.05}) {
        const bool first = lambda == 0.01;
        const std::string tag = first ? "" : "@1/20";
        const auto levels = pt::robnik_levels(lambda, rows.size(), NR);
        size_t i = 0;
        while (i < rows.size()) {
            size_t j = i + 1;
            while (j < rows.size() && rows[j].k == rows[i].k && rows[j].n == rows[i].n) ++j;
            std::vector<std::string> names;
            std::vector<double> e0, e2, g0, g2;
            for (size_t k = i; k < j; ++k) {
                names.push_back("(" + std::to_string(rows[k].k) + "," + std::to_string(rows[k].n) + ")#" +
                                std::to_string(k + 1));
                e0.push_back(first ? rows[k].pt0 : rows[k].pt0_b);
                e2.push_back(first ? rows[k].pt2 : rows[k].pt2_b);
                g0.push_back(levels[k].pt0);
                g2.push_back(levels[k].pt2);
            }
            detail::sorted_block(r, names, "PT0" + tag, e0, g0, 1e-3, false);
            detail::sorted_block(r, names, "PT2" + tag, e2, g2, 1e-3, false);
            i = j;
        }
    }
    return r;
}

// Regular polygons with 8, 9, 10 sides: zeroth and first order, lift pattern, and the 1/N series of 1/C_N^2.
inline TableReport t6() {
    TableReport r{"t6", "regular polygons, perturbation theory", "8, 9, 10 sides; first 40 levels", {}};
    const auto& rows = reference::kPolygons;
    const int sides[3]{8, 9, 10};
    for (int c = 0; c < 3; ++c) {
        const auto levels = pt::polygon_levels(sides[c], rows.size());
        const std::string tag = "@" + std::to_string(sides[c]);
        std::vector<std::string> names;
        std::vector<double> e1, g1;
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& cell = rows[i].by_sides[size_t(c)];
            const std::string name = "(" + std::to_string(rows[i].k) + "," + std::to_string(rows[i].n) + ")#" +
                                     std::to_string(i + 1);
            names.push_back("sorted#" + std::to_string(i + 1));
            r.check(name, "PT0" + tag, cell.pt0, levels[i].pt0, 1e-3);
            r.flag(name, "lifted" + tag, cell.lifted, levels[i].split);
            e1.push_back(cell.pt1);
            g1.push_back(levels[i].pt1);
        }
        // The printed first-order column is ordered by value.
        detail::sorted_block(r, names, "PT1" + tag, e1, g1, 1e-3, false);
    }
    const Vector c = pt::polygon_prefactor_series(4);
    const double pi = std::numbers::pi;
    r.check("1/C_N^2", "N^-2", 2.0 * pi * pi / 3.0, c[2], 1e-10);
    r.check("1/C_N^2", "N^-3", 4.0 * 1.2020569031595942854, c[3], 1e-10);
    r.check("1/C_N^2", "N^-4", 14.0 * std::pow(pi, 4) / 45.0, c[4], 1e-10);
    return r;
}

// Deformed square z + alpha z^2: closed forms F(1..3) and the alpha^2 coefficient of the first 50 levels.
inline TableReport tpt_column() {
    TableReport r{"tpt-column", "deformed square, second-order coefficient", "first 50 levels", {}};
    const double pi2 = std::numbers::pi * std::numbers::pi, pi4 = pi2 * pi2;
    r.check("F(1)", "closed form", pi4 / 3072.0 - 5.0 * pi2 / 1024.0, pt::deformed_square_F(1), 1e-12);
    r.check("F(2)", "closed form", pi4 / 49152.0 - 5.0 * pi2 / 65536.0, pt::deformed_square_F(2), 1e-12);
    r.check("F(3)", "closed form", pi4 / 248832.0 - 5.0 * pi2 / 746496.0, pt::deformed_square_F(3), 1e-12);
    const auto levels = pt::deformed_square_levels(reference::kDeformedSquare.size());
    for (size_t i = 0; i < levels.size(); ++i) {
        const auto& row = reference::kDeformedSquare[i];
        r.check("#" + std::to_string(row.n) + " " + levels[i].label(), "PT", row.pt,
                pt::deformed_square_alpha2(levels[i]), 1e-6, true);
    }
    return r;
}

inline TableReport run_table(const std::string& id) {
    if (id == "t1") return t1();
    if (id == "t2") return t2();
    if (id == "t3") return t3();
    if (id == "t4") return t4();
    if (id == "t5") return t5();
    if (id == "t6") return t6();
    if (id == "tpt-column") return tpt_column();
    throw UsageError("unknown table id '" + id + "'");
}

}  // namespace spectra::tables

#endif
