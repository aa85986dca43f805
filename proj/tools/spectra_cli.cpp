#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cli_core.hpp"

using namespace spectra;
using namespace spectra::cli;

namespace {

struct Options {
    std::string domain, domain_b, method = "ccm", against, out, format = "csv", table;
    std::optional<int> n, nint, order, n_b, nint_b;
    int count = 10;
    std::optional<double> shift;
};

// Writes to --out when given, stdout otherwise.
template <class F>
void emit(const Options& o, F&& write) {
    if (o.out.empty()) {
        write(std::cout);
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw UsageError("cannot open output file '" + o.out + "'");
    write(f);
}

RunConfig config(const Options& o) {
    RunConfig c;
    c.method = o.method;
    c.N = o.n;
    c.N_int = o.nint;
    c.order = o.order;
    c.count = o.count;
    c.shift = o.shift;
    return c;
}

void check_format(const Options& o) {
    if (o.format != "csv" && o.format != "json") throw UsageError("--format must be csv or json");
}

int cmd_spectrum(const Options& o) {
    check_format(o);
    const Domain d = parse_domain(load_descriptor(o.domain));
    const Spectrum s = compute_spectrum(d, config(o));
    emit(o, [&](std::ostream& out) { write_spectrum(out, s, o.format, d.descriptor); });
    return 0;
}

int cmd_compare(const Options& o) {
    check_format(o);
    const Domain a = parse_domain(load_descriptor(o.domain));
    const Domain b = o.domain_b.empty() ? a : parse_domain(load_descriptor(o.domain_b));
    RunConfig ca = config(o);
    validate(a, ca);
    std::optional<RunConfig> cb;
    if (o.against != "exact") {
        RunConfig c = config(o);
        c.method = o.against.empty() ? o.method : o.against;
        if (o.n_b) c.N = o.n_b;
        if (o.nint_b) c.N_int = o.nint_b;
        validate(b, c);
        cb = c;
    } else {
        exact_spectrum(b, size_t(o.count));  // usage check before the long computation
    }
    const Spectrum sa = compute_spectrum(a, ca);
    const Spectrum sb = cb ? compute_spectrum(b, *cb) : exact_spectrum(b, size_t(o.count));
    const Comparison c = compare(sa, sb);
    emit(o, [&](std::ostream& out) { write_comparison(out, c, o.format); });
    std::cerr << "max_xi " << cli::detail::num(c.max_xi) << " median_xi " << cli::detail::num(c.median_xi) << "\n";
    return 0;
}

int cmd_tables(const Options& o) {
    check_format(o);
    std::vector<std::string> ids;
    if (o.table == "all") {
        ids = tables::table_ids();
    } else {
        const auto& known = tables::table_ids();
        if (std::find(known.begin(), known.end(), o.table) == known.end())
            throw UsageError("unknown table id '" + o.table + "' (t1..t6, tpt-column, all)");
        ids.push_back(o.table);
    }
    std::vector<tables::TableReport> reports;
    for (const auto& id : ids) reports.push_back(tables::run_table(id));
    emit(o, [&](std::ostream& out) { write_table(out, reports, o.format); });
    size_t failed = 0;
    for (const auto& r : reports) {
        std::cerr << r.id << ": " << r.cells.size() - r.failures() << "/" << r.cells.size() << " cells within tolerance\n";
        for (const auto& c : r.cells)
            if (!c.pass) {
                std::cerr << "  FAIL " << r.id << " " << c.row << " " << c.column << ": expected " << cli::detail::num(c.expected)
                          << ", got " << cli::detail::num(c.got) << " (tol " << cli::detail::num(c.tol) << (c.relative ? " rel" : " abs")
                          << ")\n";
                ++failed;
            }
    }
    return failed ? 1 : 0;
}

int cmd_pdem(const Options& o) {
    check_format(o);
    const PdemRun run = parse_pdem(load_descriptor(o.domain));
    const int nint = o.nint.value_or(12), order = o.order.value_or(2), n = o.n.value_or(0);
    if (nint < 1) throw UsageError("--nint must be positive");
    if (order < 0 || order > 2) throw UsageError("--order must lie in 0..2 for pdem");
    if (n != 0 && (n < 4 || n % 2)) throw UsageError("--n must be even and at least 4 (0 skips the numeric solve)");
    const auto rows = run_pdem(run, nint, order, n, size_t(std::max(o.count, int(run.levels.size()) * 4)));
    emit(o, [&](std::ostream& out) { write_pdem(out, rows, order, n, nint, o.format); });
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Helmholtz spectra of conformally mapped domains"};
    app.set_version_flag("--version", std::string("spectra ") + kVersion);
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* s, bool domain_required) {
        auto* d = s->add_option("--domain", o.domain, "domain descriptor: JSON file or inline JSON");
        if (domain_required) d->required();
        s->add_option("--method", o.method, "cmm | ccm | power | pt")->capture_default_str();
        s->add_option("--n", o.n, "grid or Galerkin size N");
        s->add_option("--nint", o.nint, "basis cutoff N_int");
        s->add_option("--count", o.count, "number of levels")->capture_default_str();
        s->add_option("--order", o.order, "perturbation order");
        s->add_option("--out", o.out, "output path (default stdout)");
        s->add_option("--format", o.format, "csv | json")->capture_default_str();
    };

    auto* spectrum = app.add_subcommand("spectrum", "lowest eigenvalues of a domain");
    common(spectrum, true);
    spectrum->add_option("--shift", o.shift, "power method: target energy for the shifted block iteration");

    auto* compare = app.add_subcommand("compare", "relative error xi = |1 - E_a/E_b| level by level");
    common(compare, true);
    compare->add_option("--against", o.against, "method of the second run, or 'exact' (default: --method)");
    compare->add_option("--domain-b", o.domain_b, "domain of the second run (default: --domain)");
    compare->add_option("--n-b", o.n_b, "N of the second run");
    compare->add_option("--nint-b", o.nint_b, "N_int of the second run");

    auto* tables_cmd = app.add_subcommand("tables", "recompute a reference table and diff it");
    common(tables_cmd, false);
    tables_cmd->add_option("id", o.table, "t1 | t2 | t3 | t4 | t5 | t6 | tpt-column | all")->required();

    auto* pdem_cmd = app.add_subcommand("pdem", "position-dependent mass perturbation theory");
    common(pdem_cmd, true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*spectrum) return cmd_spectrum(o);
        if (*compare) return cmd_compare(o);
        if (*tables_cmd) return cmd_tables(o);
        return cmd_pdem(o);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
