#pragma once

#include <stdexcept>
#include <string>

namespace nilgeom {

// All library failures carry a stable code string used by the CLI.
class Error : public std::runtime_error {
public:
    Error(std::string code, const std::string& what)
        : std::runtime_error(code + ": " + what), code_(std::move(code)) {}
    const std::string& code() const { return code_; }

private:
    std::string code_;
};

#define NILGEOM_ERROR(Name)                                                    \
    struct Name : Error {                                                      \
        explicit Name(const std::string& w = "") : Error(#Name, w) {}          \
    }

NILGEOM_ERROR(OrderMismatch);
NILGEOM_ERROR(NotInvertible);
NILGEOM_ERROR(NotDivisible);
NILGEOM_ERROR(WrongField);
NILGEOM_ERROR(NotNilpotent);
NILGEOM_ERROR(CountMismatch);
NILGEOM_ERROR(InvalidShape);
NILGEOM_ERROR(DimensionMismatch);
NILGEOM_ERROR(NotSelfAdjoint);
NILGEOM_ERROR(DegenerateSignatures);
NILGEOM_ERROR(CaseConstraintViolated);
NILGEOM_ERROR(NotAlternate);
NILGEOM_ERROR(NotCompatible);
NILGEOM_ERROR(BadParams);
NILGEOM_ERROR(NotClassifiable);
NILGEOM_ERROR(CaseUnsupported);
NILGEOM_ERROR(NotAdapted);
NILGEOM_ERROR(SeedViolation);
NILGEOM_ERROR(Degenerate);
NILGEOM_ERROR(IncompatibleShape);
NILGEOM_ERROR(ShapeViolation);
NILGEOM_ERROR(NestedSeedViolation);
NILGEOM_ERROR(DegenerateAtPoint);
NILGEOM_ERROR(TooLarge);
NILGEOM_ERROR(ParseError);
NILGEOM_ERROR(SchemaError);

#undef NILGEOM_ERROR

} // namespace nilgeom
