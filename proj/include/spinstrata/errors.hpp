#pragma once

#include <stdexcept>
#include <string>

namespace spinstrata {

// Machine-readable failure reasons. The CLI maps these onto exit codes:
// CapExceeded -> 3, everything else that reaches the top level -> 2.
enum class ErrorCode {
    // graph validation
    Disconnected,
    UnstableVertex,
    GenusTooSmall,
    BadDecoration,
    Unsupported,
    // supports
    DeltaNotEven,
    BadGluingClass,
    // automorphism data
    IncompatibleDatum,
    InconsistentSquareRoot,
    MissingBlockExponents,
    MissingFlag,
    BadFlag,
    // actions / groups
    WrongLevel,
    CapExceeded,
    NotFromSpinDatum,
    // rst
    BadPrimitiveIndex,
    TrivialElement,
    QuasireflectionPresent,
    // classification
    MissingThetaFlag,
    NotInTable,
    // io
    Syntax,
    UnknownId,
};

const char* error_code_name(ErrorCode code);

class SpinError : public std::runtime_error {
public:
    SpinError(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

} // namespace spinstrata
