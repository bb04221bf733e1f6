#include "fset/error.hpp"

namespace fset {

std::string_view to_string(Errc code) noexcept {
    switch (code) {
        case Errc::NotPrime: return "NotPrime";
        case Errc::ZeroInverse: return "ZeroInverse";
        case Errc::FactorizationTimeout: return "FactorizationTimeout";
        case Errc::FieldMismatch: return "FieldMismatch";
        case Errc::DivisionByZeroPoly: return "DivisionByZeroPoly";
        case Errc::BothZero: return "BothZero";
        case Errc::ConstantModulus: return "ConstantModulus";
        case Errc::ParseError: return "ParseError";
        case Errc::ConstantInput: return "ConstantInput";
        case Errc::NotIrreducible: return "NotIrreducible";
        case Errc::ZeroConstantTerm: return "ZeroConstantTerm";
        case Errc::OrderBudgetExceeded: return "OrderBudgetExceeded";
        case Errc::GateFailed: return "GateFailed";
        case Errc::DegreeCapExceeded: return "DegreeCapExceeded";
        case Errc::SeedNotIrreducible: return "SeedNotIrreducible";
        case Errc::SeedNotMonic: return "SeedNotMonic";
        case Errc::ClosednessFailure: return "ClosednessFailure";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "Unknown";
}

}  // namespace fset
