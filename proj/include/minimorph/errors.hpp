#pragma once

#include <stdexcept>
#include <string>

namespace minimorph {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

#define MINIMORPH_ERROR(Name)              \
    struct Name : Error {                  \
        using Error::Error;                \
        Name() : Error(#Name) {}           \
    };

MINIMORPH_ERROR(DomainViolation)
MINIMORPH_ERROR(OverflowError)
MINIMORPH_ERROR(DimensionMismatch)
MINIMORPH_ERROR(NotExactlyRepresentable)
MINIMORPH_ERROR(DegenerateParameters)
MINIMORPH_ERROR(ConstraintViolation)
MINIMORPH_ERROR(NotIsotropic)
MINIMORPH_ERROR(NotHomogeneous)
MINIMORPH_ERROR(DegreeMismatch)
MINIMORPH_ERROR(LinearlyDependent)
MINIMORPH_ERROR(NotHomogeneousDegreeZero)
MINIMORPH_ERROR(NotEigenfamily)
MINIMORPH_ERROR(NoConvergence)
MINIMORPH_ERROR(ConvergedToCritical)
MINIMORPH_ERROR(RankDeficient)
MINIMORPH_ERROR(UnknownCatalogEntry)
MINIMORPH_ERROR(ExactModeUnavailable)
MINIMORPH_ERROR(AlphaZero)
MINIMORPH_ERROR(ParseError)

#undef MINIMORPH_ERROR

}  // namespace minimorph
