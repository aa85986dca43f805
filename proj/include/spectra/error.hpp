#ifndef SPECTRA_ERROR_HPP
#define SPECTRA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace spectra {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SPECTRA_DEFINE_ERROR(Name)          \
    class Name : public Error {             \
    public:                                 \
        using Error::Error;                 \
    };

SPECTRA_DEFINE_ERROR(RangeError)
SPECTRA_DEFINE_ERROR(SolverError)
SPECTRA_DEFINE_ERROR(DefinitenessError)
SPECTRA_DEFINE_ERROR(DomainError)
SPECTRA_DEFINE_ERROR(ConformalityError)
SPECTRA_DEFINE_ERROR(DegeneracyError)
SPECTRA_DEFINE_ERROR(ShiftError)
SPECTRA_DEFINE_ERROR(PreconditionError)
SPECTRA_DEFINE_ERROR(UsageError)

#undef SPECTRA_DEFINE_ERROR

// Carries the best estimate reached before giving up.
class AccuracyError : public Error {
public:
    AccuracyError(const std::string& what, double achieved)
        : Error(what + " (achieved " + std::to_string(achieved) + ")"), achieved_(achieved) {}
    double achieved() const noexcept { return achieved_; }

private:
    double achieved_;
};

class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double last_estimate)
        : Error(what + " (last estimate " + std::to_string(last_estimate) + ")"),
          last_(last_estimate) {}
    double last_estimate() const noexcept { return last_; }

private:
    double last_;
};

}  // namespace spectra

#endif
