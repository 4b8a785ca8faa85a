#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ggl {

enum class ErrorKind {
    EmptyGenerators,
    GcdNotOne,
    NotAMember,
    BaseMismatch,
    NotUnitary,
    NotContained,
    DoesNotAnnihilate,
    NotMPrimary,
    NotProperIdeal,
    PreconditionFailed,
    ConsistencyFailure,
    Trivial,
    StepCapExceeded,
    NotThreeGenerated,
    SymmetricInput,
    NonUniqueRepresentation,
    ParameterOutOfRange,
};

std::string_view to_string(ErrorKind kind) noexcept;

// Every failure raised by the library carries a kind so that callers (the CLI
// in particular) can map it onto an exit status without parsing messages.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what)
        : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

    // Input errors are the user's fault; everything else is a math or
    // internal failure.
    bool is_input_error() const noexcept {
        switch (kind_) {
        case ErrorKind::EmptyGenerators:
        case ErrorKind::GcdNotOne:
        case ErrorKind::NotThreeGenerated:
        case ErrorKind::SymmetricInput:
        case ErrorKind::ParameterOutOfRange:
        case ErrorKind::PreconditionFailed:
        case ErrorKind::NotAMember:
        case ErrorKind::Trivial:
        case ErrorKind::NotProperIdeal:
        case ErrorKind::NotMPrimary:
        case ErrorKind::NotContained:
            return true;
        default:
            return false;
        }
    }

private:
    ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
    throw Error(kind, what);
}

} // namespace ggl
