#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ruled {

enum class ErrorCode {
    ConfigMismatch,
    Overflow,
    ParityViolation,
    UnsupportedSurface,
    InvalidPolarization,
    SearchBoundsExceeded,
    NotApplicable,
    AssumptionViolated,
    BoxTooLarge,
    InvalidInput,
};

std::string_view to_string(ErrorCode code);

/// Domain error raised by every computation in the library.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace ruled
