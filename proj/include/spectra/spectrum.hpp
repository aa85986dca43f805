#ifndef SPECTRA_SPECTRUM_HPP
#define SPECTRA_SPECTRUM_HPP

#include <cmath>
#include <string>
#include <vector>

#include "spectra/linalg.hpp"

namespace spectra {

struct Level {
    double value = 0.0;
    std::string label;
    int degeneracy = 1;  // size of the cluster this level belongs to
    Vector coeffs;       // optional eigenvector in the engine's own basis
};

struct Spectrum {
    std::vector<Level> levels;
    std::string method;
    int N = 0;
    int N_int = 0;

    size_t size() const { return levels.size(); }
    double operator[](size_t i) const { return levels[i].value; }
    std::vector<double> values() const {
        std::vector<double> v;
        for (const auto& l : levels) v.push_back(l.value);
        return v;
    }
};

// Groups neighbouring levels whose relative gap is below `rel_gap` and tags each with the group size.
inline void tag_degeneracy(Spectrum& s, double rel_gap = 1e-7) {
    size_t i = 0;
    while (i < s.levels.size()) {
        size_t j = i + 1;
        while (j < s.levels.size() &&
               std::abs(s.levels[j].value - s.levels[j - 1].value) <= rel_gap * std::abs(s.levels[j].value))
            ++j;
        for (size_t k = i; k < j; ++k) s.levels[k].degeneracy = int(j - i);
        i = j;
    }
}

}  // namespace spectra

#endif
