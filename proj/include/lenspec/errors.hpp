#pragma once

#include <stdexcept>
#include <string>

namespace lenspec {

// Domain error hierarchy. Every error carries a stable name that the CLI
// surfaces verbatim, so scripts can match on it.
class Error : public std::runtime_error {
public:
    Error(std::string name, const std::string& what)
        : std::runtime_error(what), name_(std::move(name)) {}

    const std::string& name() const noexcept { return name_; }

private:
    std::string name_;
};

#define LENSPEC_DEFINE_ERROR(NAME)                                        \
    class NAME : public Error {                                           \
    public:                                                               \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}    \
    };

LENSPEC_DEFINE_ERROR(GcdViolation)
LENSPEC_DEFINE_ERROR(ArityMismatch)
LENSPEC_DEFINE_ERROR(NotRational)
LENSPEC_DEFINE_ERROR(NegativeExponentResidue)
LENSPEC_DEFINE_ERROR(NegativeCoefficient)
LENSPEC_DEFINE_ERROR(EigenvalueCollision)
LENSPEC_DEFINE_ERROR(NonIntegral)
LENSPEC_DEFINE_ERROR(UncertifiedInput)
LENSPEC_DEFINE_ERROR(BudgetExceeded)
LENSPEC_DEFINE_ERROR(NotADivisor)
LENSPEC_DEFINE_ERROR(NoUnitCoordinate)
LENSPEC_DEFINE_ERROR(DegreeBoundViolated)

#undef LENSPEC_DEFINE_ERROR

}  // namespace lenspec
