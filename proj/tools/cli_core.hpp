#ifndef SPECTRA_CLI_CORE_HPP
#define SPECTRA_CLI_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "domain.hpp"
#include "spectra/ccm.hpp"
#include "spectra/cmm.hpp"
#include "spectra/pdem.hpp"
#include "spectra/perturbation.hpp"
#include "spectra/powermethod.hpp"
#include "tables.hpp"

namespace spectra::cli {

inline constexpr const char* kVersion = "1.0.0";

struct RunConfig {
    std::string method = "ccm";
    std::optional<int> N, N_int, order;
    int count = 10;
    std::optional<double> shift;  // power method: target for the shifted iteration
};

namespace detail {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    return buf;
}

inline Spectrum physical(Spectrum s, const Domain& d) { return d.scale_sq() == 1.0 ? s : rescale_spectrum(std::move(s), d.scale_sq()); }

inline Spectrum from_values(const std::vector<std::pair<std::string, double>>& v, const std::string& method) {
    Spectrum s;
    s.method = method;
    for (const auto& [label, value] : v) {
        Level l;
        l.label = label;
        l.value = value;
        s.levels.push_back(std::move(l));
    }
    tag_degeneracy(s);
    return s;
}

inline void require(bool ok, const std::string& what) {
    if (!ok) throw UsageError(what);
}

template <class Label>
Spectrum from_reports(const std::vector<pt::PTReport<Label>>& reports, int order) {
    std::vector<std::pair<std::string, double>> v;
    for (const auto& r : reports) v.push_back({r.name, r.partial(order)});
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    return from_values(v, "pt");
}

}  // namespace detail

// Validates the method-specific parameters before any computation.
inline void validate(const Domain& d, RunConfig& c) {
    using detail::require;
    require(c.count >= 1, "--count must be positive");
    if (c.method == "cmm") {
        if (!c.N) c.N = 20;
        require(*c.N >= 1, "--n must be positive for cmm");
        require(*c.N * *c.N >= c.count, "--count exceeds the N^2 basis size");
        require(d.kind != "polygon", "polygon maps are not polynomial; use --method ccm or pt");
    } else if (c.method == "ccm") {
        if (!c.N) c.N = 40;
        require(*c.N >= 4 && *c.N % 2 == 0, "--n must be even and at least 4 for ccm");
        require((*c.N - 1) * (*c.N - 1) >= c.count, "--count exceeds the (N-1)^2 grid size");
    } else if (c.method == "power") {
        if (!c.N_int) c.N_int = 20;
        require(*c.N_int >= 1, "--nint must be positive for power");
        require(c.shift || c.count == 1, "power: --count above 1 needs --shift (shifted block iteration)");
        require(*c.N_int * *c.N_int >= c.count, "--count exceeds the N_int^2 basis size");
    } else if (c.method == "pt") {
        if (!c.N_int) c.N_int = 20;
        require(*c.N_int >= 1, "--nint must be positive for pt");
        const int top = d.kind == "polygon" ? 1 : d.kind == "robnik" ? 2 : d.on_disk() ? 2 : 3;
        if (!c.order) c.order = top;
        require(*c.order >= 0 && *c.order <= top,
                "--order must lie in 0.." + std::to_string(top) + " for this domain and pt");
        if (!d.on_disk()) require(*c.N_int * *c.N_int >= c.count, "--count exceeds the N_int^2 basis size");
    } else {
        throw UsageError("unknown method '" + c.method + "' (cmm, ccm, power, pt)");
    }
}

inline Spectrum compute_spectrum(const Domain& d, RunConfig c) {
    validate(d, c);
    const size_t count = size_t(c.count);
    Spectrum s;
    if (c.method == "cmm") {
        s = cmm::solve(cmm::assemble(d.square_map(), *c.N), count);
    } else if (c.method == "ccm") {
        s = ccm::solve(ccm::assemble_operator(d.square_density(), *c.N), count);
    } else if (c.method == "power") {
        const power::PowerSetup setup =
            d.on_disk() ? power::prepare(d.square_density(), *c.N_int) : power::prepare(d.map, *c.N_int);
        std::vector<std::pair<std::string, double>> v;
        if (c.shift) {
            const auto r = power::excited_subspace(setup, *c.shift * d.scale_sq(), c.count);
            for (size_t i = 0; i < r.energies.size(); ++i) v.push_back({"#" + std::to_string(i + 1), r.energies[i]});
        } else {
            v.push_back({"#1", power::theorem1_ground(setup).energy});
        }
        s = detail::from_values(v, "power");
    } else if (d.kind == "robnik") {
        std::vector<std::pair<std::string, double>> v;
        for (const auto& r : pt::robnik_levels(d.lambda, count, std::max(*c.N_int, 30)))
            v.push_back({r.label.label(), *c.order >= 2 ? r.pt2 : r.pt0});
        std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
        s = detail::from_values(v, "pt");  // already physical
    } else if (d.kind == "polygon") {
        std::vector<std::pair<std::string, double>> v;
        for (const auto& r : pt::polygon_levels(d.sides, count)) v.push_back({r.label.label(), *c.order >= 1 ? r.pt1 : r.pt0});
        std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
        s = detail::from_values(v, "pt");  // already physical
    } else if (d.on_disk()) {
        const int K = *c.N_int;
        const auto sm = pt::sigma_elements_disk(d.map, pt::disk_labels(K, std::max(2, K / 2)));
        s = detail::physical(detail::from_reports(pt::pt_levels(sm, count, *c.order), *c.order), d);
    } else {
        const auto sm = pt::sigma_elements_square(d.map, *c.N_int);
        s = detail::physical(detail::from_reports(pt::pt_levels(sm, count, *c.order), *c.order), d);
    }
    if (c.method != "pt") s = detail::physical(std::move(s), d);
    s.method = c.method;
    s.N = c.N.value_or(0);
    s.N_int = c.N_int.value_or(0);
    tag_degeneracy(s);
    return s;
}

// Exact levels where they are known in closed form: the circle and the unit square map.
inline Spectrum exact_spectrum(const Domain& d, size_t count) {
    std::vector<std::pair<std::string, double>> v;
    if (d.is_circle()) {
        for (const auto& l : pt::disk_labels(30, 12)) v.push_back({l.label(), l.energy()});
    } else if (!d.on_disk() && d.map.degree() == 1) {
        const double s2 = std::norm(d.map.coeffs()[1]) * d.scale_sq();
        const int top = int(std::ceil(std::sqrt(double(count)))) + 4;
        for (const auto& l : square_labels(top)) v.push_back({l.label(), l.energy() / s2});
    } else {
        throw UsageError("exact levels are only known for the circle and the square");
    }
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
    if (v.size() < count) throw RangeError("exact_spectrum: count too large");
    v.resize(count);
    Spectrum s = detail::from_values(v, "exact");
    return s;
}

struct Comparison {
    Spectrum a, b;
    Vector xi;
    double max_xi = 0.0, median_xi = 0.0;
};

inline Comparison compare(Spectrum a, Spectrum b) {
    if (a.size() != b.size())
        throw PreconditionError("compare: level counts differ (" + std::to_string(a.size()) + " vs " +
                                std::to_string(b.size()) + "); cannot align");
    Comparison c;
    for (size_t i = 0; i < a.size(); ++i) c.xi.push_back(std::abs(1.0 - a[i] / b[i]));
    if (!c.xi.empty()) {
        Vector sorted = c.xi;
        std::sort(sorted.begin(), sorted.end());
        c.max_xi = sorted.back();
        const size_t n = sorted.size();
        c.median_xi = n % 2 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
    }
    c.a = std::move(a);
    c.b = std::move(b);
    return c;
}

// ---- output ----

inline void write_spectrum(std::ostream& out, const Spectrum& s, const std::string& format, const json& domain) {
    if (format == "json") {
        json j;
        j["version"] = kVersion;
        j["method"] = s.method;
        j["N"] = s.N;
        j["N_int"] = s.N_int;
        j["domain"] = domain;
        j["levels"] = json::array();
        for (size_t i = 0; i < s.size(); ++i)
            j["levels"].push_back({{"level_index", i}, {"label", s.levels[i].label}, {"eigenvalue", s.levels[i].value},
                                   {"degeneracy", s.levels[i].degeneracy}});
        out << j.dump(2) << "\n";
        return;
    }
    out << "level_index,label,eigenvalue,degeneracy,method,N,N_int\n";
    for (size_t i = 0; i < s.size(); ++i)
        out << i << ",\"" << s.levels[i].label << "\"," << detail::num(s[i]) << "," << s.levels[i].degeneracy << ","
            << s.method << "," << s.N << "," << s.N_int << "\n";
}

inline void write_comparison(std::ostream& out, const Comparison& c, const std::string& format) {
    if (format == "json") {
        json j;
        j["version"] = kVersion;
        j["method_a"] = c.a.method;
        j["method_b"] = c.b.method;
        j["max_xi"] = c.max_xi;
        j["median_xi"] = c.median_xi;
        j["levels"] = json::array();
        for (size_t i = 0; i < c.xi.size(); ++i)
            j["levels"].push_back({{"level_index", i}, {"label_a", c.a.levels[i].label}, {"label_b", c.b.levels[i].label},
                                   {"eigenvalue_a", c.a[i]}, {"eigenvalue_b", c.b[i]}, {"xi", c.xi[i]}});
        out << j.dump(2) << "\n";
        return;
    }
    out << "level_index,label_a,label_b,eigenvalue_a,eigenvalue_b,xi\n";
    for (size_t i = 0; i < c.xi.size(); ++i)
        out << i << ",\"" << c.a.levels[i].label << "\",\"" << c.b.levels[i].label << "\"," << detail::num(c.a[i]) << ","
            << detail::num(c.b[i]) << "," << detail::num(c.xi[i]) << "\n";
}

inline void write_table(std::ostream& out, const std::vector<tables::TableReport>& reports, const std::string& format) {
    if (format == "json") {
        json j = json::array();
        for (const auto& r : reports) {
            json t{{"id", r.id}, {"title", r.title}, {"parameters", r.parameters}, {"passed", r.passed()}, {"cells", json::array()}};
            for (const auto& c : r.cells)
                t["cells"].push_back({{"row", c.row}, {"column", c.column}, {"expected", c.expected}, {"got", c.got},
                                      {"tol", c.tol}, {"relative", c.relative}, {"pass", c.pass}});
            j.push_back(std::move(t));
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "table,row,column,expected,got,tol,relative,pass\n";
    for (const auto& r : reports)
        for (const auto& c : r.cells)
            out << r.id << ",\"" << c.row << "\",\"" << c.column << "\"," << detail::num(c.expected) << ","
                << detail::num(c.got) << "," << detail::num(c.tol) << "," << (c.relative ? 1 : 0) << ","
                << (c.pass ? 1 : 0) << "\n";
}

// ---- position-dependent mass ----
//   {"kind": "pdem", "reference": "sho" | "box", "eta": 0.01,
//    "sigma": {"amplitude": 1, "width": 1, "x0": 0, "y0": 0},        sigma = A exp(-((x-x0)^2+(y-y0)^2)/w^2)
//    "potential": "reference" | "sqrt_form" | {"amplitude": .., "width": .., "x0": .., "y0": ..},
//    "levels": [[0, 0], [1, 1]]}
// A potential object adds the Gaussian bump to the reference potential.

struct PdemRun {
    pdem::PdemProblem problem;
    std::vector<pdem::ProductIndex> levels;
    double half_width = 1.0;  // grid box for the numeric solve
};

namespace detail {

inline std::function<double(double, double)> gaussian(const json& g) {
    const double a = field<double>(g, "amplitude", 1.0), w = field<double>(g, "width", 1.0);
    const double x0 = field<double>(g, "x0", 0.0), y0 = field<double>(g, "y0", 0.0);
    require(w > 0.0, "pdem descriptor: width must be positive");
    return [=](double x, double y) { return a * std::exp(-((x - x0) * (x - x0) + (y - y0) * (y - y0)) / (w * w)); };
}

}  // namespace detail

inline PdemRun parse_pdem(const json& j) {
    using detail::field;
    using detail::require;
    require(j.is_object() && field<std::string>(j, "kind") == "pdem", "pdem needs a descriptor of kind 'pdem'");
    const auto ref = field<std::string>(j, "reference", std::string("sho"));
    require(ref == "sho" || ref == "box", "pdem descriptor: reference is sho or box");
    const pdem::Reference1D axis = ref == "sho" ? pdem::sho_reference() : pdem::box_reference();
    const double eta = field<double>(j, "eta");
    require(j.contains("sigma") && j.at("sigma").is_object(), "pdem descriptor: 'sigma' must be an object");
    const auto sig = detail::gaussian(j.at("sigma"));
    const auto v = axis.v;
    const Density V0 = [v](double x, double y) { return v(x) + v(y); };
    Density V = V0;
    if (j.contains("potential")) {
        const json& p = j.at("potential");
        if (p.is_string() && p.get<std::string>() == "sqrt_form") {
            V = [=](double x, double y) { return V0(x, y) / std::sqrt(1.0 + eta * sig(x, y)); };
        } else if (p.is_object()) {
            const auto bump = detail::gaussian(p);
            V = [=](double x, double y) { return V0(x, y) + bump(x, y); };
        } else {
            require(p.is_string() && p.get<std::string>() == "reference",
                    "pdem descriptor: potential is 'reference', 'sqrt_form' or a Gaussian object");
        }
    }
    PdemRun run;
    run.problem = pdem::make_problem(sig, eta, V, axis);
    run.half_width = ref == "sho" ? field<double>(j, "half_width", 8.0) : 1.0;
    const int first = axis.first;
    if (j.contains("levels")) {
        for (const auto& l : j.at("levels")) {
            require(l.is_array() && l.size() == 2, "pdem descriptor: each level is [nx, ny]");
            run.levels.push_back({l[0].get<int>(), l[1].get<int>()});
            require(run.levels.back().nx >= first && run.levels.back().ny >= first, "pdem descriptor: level below the lowest state");
        }
    } else {
        run.levels.push_back({first, first});
    }
    return run;
}

struct PdemRow {
    pdem::PdemReport report;
    std::optional<double> numeric;
};

inline std::vector<PdemRow> run_pdem(const PdemRun& run, int N_int, int order, int N, size_t numeric_count) {
    std::vector<PdemRow> rows;
    for (const auto& l : run.levels) rows.push_back({pdem::pdem_pt(run.problem, l, order, N_int), std::nullopt});
    if (N > 0) {
        // Each reference level pairs with the numeric level at its position in the unperturbed ordering.
        const Spectrum s = pdem::numeric_levels(run.problem, N, run.half_width, numeric_count);
        std::vector<size_t> idx(rows.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        const pdem::ReferenceBasis b = pdem::make_basis(run.problem.reference, N_int);
        for (size_t k = 0; k < idx.size(); ++k) {
            // Position of this reference energy among all reference levels (with multiplicity).
            const double e0 = rows[idx[k]].report.e[0];
            size_t below = 0;
            for (double e : b.eps)
                if (e < e0 - 1e-9 * std::abs(e0)) ++below;
            if (below < s.size()) rows[idx[k]].numeric = s[below];
        }
    }
    return rows;
}

inline void write_pdem(std::ostream& out, const std::vector<PdemRow>& rows, int order, int N, int N_int, const std::string& format) {
    if (format == "json") {
        json j;
        j["version"] = kVersion;
        j["method"] = "pdem-pt";
        j["N"] = N;
        j["N_int"] = N_int;
        j["levels"] = json::array();
        for (size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i].report;
            json l{{"level_index", i}, {"label", r.name}, {"eigenvalue", r.partial(order)}, {"e0", r.e[0]}, {"e1", r.e[1]},
                   {"e2", r.e[2]}, {"v0_sigma", r.v0_sigma}, {"e2b_raw", r.e2b_raw}, {"e2b_reduced", r.e2b_reduced}};
            if (rows[i].numeric) l["numeric"] = *rows[i].numeric;
            j["levels"].push_back(std::move(l));
        }
        out << j.dump(2) << "\n";
        return;
    }
    out << "level_index,label,eigenvalue,degeneracy,method,N,N_int,e0,e1,e2,v0_sigma,numeric\n";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i].report;
        out << i << ",\"" << r.name << "\"," << detail::num(r.partial(order)) << ",1,pdem-pt," << N << "," << N_int << ","
            << detail::num(r.e[0]) << "," << detail::num(r.e[1]) << "," << detail::num(r.e[2]) << ","
            << detail::num(r.v0_sigma) << "," << (rows[i].numeric ? detail::num(*rows[i].numeric) : "") << "\n";
    }
}

}  // namespace spectra::cli

#endif
