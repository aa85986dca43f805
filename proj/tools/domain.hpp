#ifndef SPECTRA_DOMAIN_HPP
#define SPECTRA_DOMAIN_HPP

// JSON domain descriptors:
//   {"kind": "polynomial", "coeffs": [a0, a1, ...], "domain": "square" | "disk"}
//       (a coefficient may be a number or a [re, im] pair)
//   {"kind": "square_to_disk", "order": 37}          the unit disk through the square
//   {"kind": "robnik", "lambda": 0.01}
//   {"kind": "polygon", "sides": 8, "k_max": 40}

#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>

#include <json.hpp>

#include "spectra/conformal.hpp"
#include "spectra/error.hpp"

namespace spectra::cli {

using nlohmann::json;

struct Domain {
    std::string kind;
    json descriptor;
    ConformalMap map;  // over its reference domain; physical energies divide by map.scale()^2
    std::function<Complex(Complex)> disk_derivative;  // disk maps: derivative of the unscaled map
    int sides = 0;
    double lambda = 0.0;
    int order = 37;  // square-to-disk truncation used for disk maps

    bool on_disk() const { return map.domain() == ReferenceDomain::UnitDisk; }
    double scale_sq() const { return map.scale() * map.scale(); }
    bool is_circle() const { return kind == "square_to_disk"; }

    // Density on the reference square, for collocation and the power method.
    Density square_density() const {
        if (!on_disk()) return map.density();
        return disk_density_on_square(disk_derivative, order);
    }

    // Polynomial map on the reference square, for the Galerkin method and square-basis PT.
    ConformalMap square_map() const {
        if (!on_disk()) return map;
        if (kind == "polygon") throw UsageError("polygon maps are not polynomial; use --method ccm or pt");
        const ConformalMap h = map_square_to_disk(order);
        return compose(map, h, map.degree() * h.degree());
    }
};

// Reads a descriptor from a file path, or parses the argument itself when it starts with '{'.
inline json load_descriptor(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\r\n");
    try {
        if (first != std::string::npos && arg[first] == '{') return json::parse(arg);
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot open domain file '" + arg + "'");
        std::stringstream ss;
        ss << in.rdbuf();
        return json::parse(ss.str());
    } catch (const json::exception& e) {
        throw UsageError(std::string("invalid domain JSON: ") + e.what());
    }
}

namespace detail {

template <class T>
T field(const json& j, const char* key, std::optional<T> fallback = std::nullopt) {
    if (!j.contains(key)) {
        if (fallback) return *fallback;
        throw UsageError(std::string("domain descriptor: missing field '") + key + "'");
    }
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw UsageError(std::string("domain descriptor: field '") + key + "' has the wrong type");
    }
}

inline Complex coefficient(const json& c) {
    if (c.is_number()) return {c.get<double>(), 0.0};
    if (c.is_array() && c.size() == 2 && c[0].is_number() && c[1].is_number())
        return {c[0].get<double>(), c[1].get<double>()};
    throw UsageError("domain descriptor: a coefficient must be a number or a [re, im] pair");
}

}  // namespace detail

inline Domain parse_domain(const json& j) {
    if (!j.is_object()) throw UsageError("domain descriptor must be a JSON object");
    Domain d;
    d.descriptor = j;
    d.kind = detail::field<std::string>(j, "kind");
    try {
        if (d.kind == "polynomial") {
            const json c = j.contains("coeffs") ? j.at("coeffs") : json();
            if (!c.is_array()) throw UsageError("domain descriptor: 'coeffs' must be an array");
            std::vector<Complex> a;
            for (const auto& x : c) a.push_back(detail::coefficient(x));
            const auto where = detail::field<std::string>(j, "domain", std::string("square"));
            if (where != "square" && where != "disk") throw UsageError("domain descriptor: 'domain' is square or disk");
            const double scale = detail::field<double>(j, "scale", 1.0);
            d.map = ConformalMap(std::move(a), where == "square" ? ReferenceDomain::Square2 : ReferenceDomain::UnitDisk, scale);
            if (d.on_disk()) d.disk_derivative = [m = d.map](Complex w) { return m.derivative(w); };
        } else if (d.kind == "square_to_disk") {
            d.order = detail::field<int>(j, "order", 37);
            d.map = map_square_to_disk(d.order);
        } else if (d.kind == "robnik") {
            d.lambda = detail::field<double>(j, "lambda");
            d.map = map_robnik(d.lambda).map;
            d.disk_derivative = [m = d.map](Complex w) { return m.derivative(w); };
        } else if (d.kind == "polygon") {
            d.sides = detail::field<int>(j, "sides");
            const int k_max = detail::field<int>(j, "k_max", 40);
            d.map = map_polygon(d.sides, k_max).map;
            d.disk_derivative = polygon_derivative(d.sides);
        } else {
            throw UsageError("unknown domain kind '" + d.kind + "'");
        }
    } catch (const UsageError&) {
        throw;
    } catch (const Error& e) {
        // Invalid parameters in the descriptor are usage errors.
        throw UsageError(std::string("domain descriptor: ") + e.what());
    }
    return d;
}

}  // namespace spectra::cli

#endif
