#pragma once

#include <stdexcept>
#include <string>

namespace reversive {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define REVERSIVE_DEFINE_ERROR(Name)             \
    class Name : public Error {                  \
    public:                                      \
        using Error::Error;                      \
    }

REVERSIVE_DEFINE_ERROR(DivisibilityViolation);
REVERSIVE_DEFINE_ERROR(ZeroDivisor);
REVERSIVE_DEFINE_ERROR(NonUnitSeries);
REVERSIVE_DEFINE_ERROR(NonZeroInnerConstant);
REVERSIVE_DEFINE_ERROR(NotRevertible);
REVERSIVE_DEFINE_ERROR(NonIntegerCoefficient);
REVERSIVE_DEFINE_ERROR(InvalidSymbol);
REVERSIVE_DEFINE_ERROR(InvalidTileSet);
REVERSIVE_DEFINE_ERROR(DomainError);
REVERSIVE_DEFINE_ERROR(CapExceeded);
REVERSIVE_DEFINE_ERROR(ParseError);
REVERSIVE_DEFINE_ERROR(UnknownName);
REVERSIVE_DEFINE_ERROR(MethodUnavailable);
REVERSIVE_DEFINE_ERROR(IoError);

#undef REVERSIVE_DEFINE_ERROR

}  // namespace reversive
