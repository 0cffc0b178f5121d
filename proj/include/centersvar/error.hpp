#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace centersvar {

enum class ErrorCode {
    InvalidInput,
    CenterHit,
    DegenerateInput,
    InadmissibleCenter,
    DegenerateCurve,
    NoRationalImage,
    Inconsistent,
    NotFinite,
    AmbiguousMatch,
    GenerationFailed,
    Inconclusive,
};

std::string_view to_string(ErrorCode code);

/// Exception carrying a stable, machine-readable code. The CLI maps codes to
/// exit statuses and JSON error documents.
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& message)
        : std::runtime_error(message), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
    throw Error(code, message);
}

}  // namespace centersvar
