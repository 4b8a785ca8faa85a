#include "ggl/error.hpp"

namespace ggl {

std::string_view to_string(ErrorKind kind) noexcept {
    switch (kind) {
    case ErrorKind::EmptyGenerators: return "EmptyGenerators";
    case ErrorKind::GcdNotOne: return "GcdNotOne";
    case ErrorKind::NotAMember: return "NotAMember";
    case ErrorKind::BaseMismatch: return "BaseMismatch";
    case ErrorKind::NotUnitary: return "NotUnitary";
    case ErrorKind::NotContained: return "NotContained";
    case ErrorKind::DoesNotAnnihilate: return "DoesNotAnnihilate";
    case ErrorKind::NotMPrimary: return "NotMPrimary";
    case ErrorKind::NotProperIdeal: return "NotProperIdeal";
    case ErrorKind::PreconditionFailed: return "PreconditionFailed";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
    case ErrorKind::Trivial: return "Trivial";
    case ErrorKind::StepCapExceeded: return "StepCapExceeded";
    case ErrorKind::NotThreeGenerated: return "NotThreeGenerated";
    case ErrorKind::SymmetricInput: return "SymmetricInput";
    case ErrorKind::NonUniqueRepresentation: return "NonUniqueRepresentation";
    case ErrorKind::ParameterOutOfRange: return "ParameterOutOfRange";
    }
    return "Unknown";
}

} // namespace ggl
