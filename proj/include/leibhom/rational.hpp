#pragma once

#include <gmpxx.h>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace leibhom {

// Exact rational scalar used everywhere outside the prime-field paths.
using Rat = mpq_class;

inline bool is_zero(const Rat& x) { return sgn(x) == 0; }

// Canonical textual form "num/den", denominator always printed.
inline std::string rat_repr(const Rat& x) {
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

inline Rat rat_parse(const std::string& s) {
    auto slash = s.find('/');
    Rat r;
    if (slash == std::string::npos)
        r = Rat(mpz_class(s));
    else
        r = Rat(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
    r.canonicalize();
    return r;
}

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define LEIBHOM_ERROR(Name)                       \
    struct Name : Error {                         \
        using Error::Error;                       \
        Name() : Error(#Name) {}                  \
    }

LEIBHOM_ERROR(IndexOutOfBlock);
LEIBHOM_ERROR(DimensionMismatch);
LEIBHOM_ERROR(NotAnIdeal);
LEIBHOM_ERROR(QuotientMismatch);
LEIBHOM_ERROR(IncompatibleModule);
LEIBHOM_ERROR(FieldMismatch);
LEIBHOM_ERROR(ProbabilisticDisagreement);
LEIBHOM_ERROR(DomainMismatch);
LEIBHOM_ERROR(DegreeMismatch);
LEIBHOM_ERROR(NotACocycle);
LEIBHOM_ERROR(LiftFailure);
LEIBHOM_ERROR(ParameterOutOfRange);
LEIBHOM_ERROR(CoefficientMismatch);
LEIBHOM_ERROR(NotInSpan);

#undef LEIBHOM_ERROR

} // namespace leibhom
