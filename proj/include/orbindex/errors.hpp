#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace orbindex {

// Computation error with a stable machine-readable code. The CLI maps these
// to exit code 1; malformed input (UsageError) maps to exit code 2.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const noexcept { return code_; }

private:
    std::string code_;
};

class UsageError : public std::runtime_error {
public:
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

#define ORBINDEX_ERROR_TYPE(NAME)                                        \
    class NAME : public Error {                                          \
    public:                                                              \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}   \
    };

ORBINDEX_ERROR_TYPE(InvalidRootDatum)
ORBINDEX_ERROR_TYPE(GroupTooLarge)
ORBINDEX_ERROR_TYPE(NotASubgroup)
ORBINDEX_ERROR_TYPE(NotDominant)
ORBINDEX_ERROR_TYPE(NotInvariant)
ORBINDEX_ERROR_TYPE(InternalError)
ORBINDEX_ERROR_TYPE(InvalidDiracInput)
ORBINDEX_ERROR_TYPE(WrongElementKind)
ORBINDEX_ERROR_TYPE(MisclassifiedElement)
ORBINDEX_ERROR_TYPE(RankMismatch)
ORBINDEX_ERROR_TYPE(RequiresMaximal)
ORBINDEX_ERROR_TYPE(MissingGammaData)
ORBINDEX_ERROR_TYPE(DegenerateZ0)
ORBINDEX_ERROR_TYPE(NonIntegralK)
ORBINDEX_ERROR_TYPE(AmbiguousSign)
ORBINDEX_ERROR_TYPE(NotSupported)
ORBINDEX_ERROR_TYPE(UnknownGroup)

#undef ORBINDEX_ERROR_TYPE

}  // namespace orbindex
