#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fset {

enum class Errc {
    NotPrime,
    ZeroInverse,
    FactorizationTimeout,
    FieldMismatch,
    DivisionByZeroPoly,
    BothZero,
    ConstantModulus,
    ParseError,
    ConstantInput,
    NotIrreducible,
    ZeroConstantTerm,
    OrderBudgetExceeded,
    GateFailed,
    DegreeCapExceeded,
    SeedNotIrreducible,
    SeedNotMonic,
    ClosednessFailure,
    InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

// Every failure in the library is reported through this type; the CLI maps
// the code onto its exit status.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

class ParseError : public Error {
public:
    ParseError(std::size_t position, const std::string& what)
        : Error(Errc::ParseError, what + " at position " + std::to_string(position)),
          position_(position) {}

    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

}  // namespace fset
